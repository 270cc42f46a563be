#include "ramanujan/connection.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramanujan {

bool divides_power_of(const MultiPoly& p, const MultiPoly& d) {
    if (p.is_zero()) return false;
    MultiPoly r = p.content_and_primitive().second;
    if (r.is_constant()) return true;
    MultiPoly dp = d.content_and_primitive().second;
    if (dp.is_constant()) return false;
    // strip every factor shared with d until nothing is left
    for (;;) {
        MultiPoly g = gcd_poly(r, dp);
        if (g.is_constant()) return r.is_constant();
        r = *exact_div(r, g);
        if (r.is_constant()) return true;
    }
}

namespace {

void validate_entries(const ChartDomain& domain, unsigned g,
                      const std::map<std::string, RFMat>& omega) {
    if (g == 0) throw std::invalid_argument("ConnectionChart: g must be positive");
    if (omega.size() != domain.coords.size())
        throw std::invalid_argument("ConnectionChart: one matrix per coordinate required");
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    for (const std::string& c : domain.coords) {
        auto it = omega.find(c);
        if (it == omega.end())
            throw std::invalid_argument("ConnectionChart: missing matrix for coordinate " + c);
        const RFMat& m = it->second;
        if (rf_rows(m) != n || rf_cols(m) != n)
            throw std::invalid_argument("ConnectionChart: matrix for " + c + " must be 2g x 2g");
        for (const auto& row : m)
            for (const RatFunc& entry : row)
                if (!entry.is_zero() && !divides_power_of(entry.den(), domain.delta))
                    throw std::invalid_argument(
                        "ConnectionChart: entry denominator is not a power of delta on chart " +
                        domain.name);
    }
}

} // namespace

ConnectionChart::ConnectionChart(ChartDomain domain, unsigned g, std::map<std::string, RFMat> omega)
    : domain_(std::move(domain)), g_(g), omega_(std::move(omega)) {
    validate_entries(domain_, g_, omega_);
}

const RFMat& ConnectionChart::omega(const std::string& coord) const {
    auto it = omega_.find(coord);
    if (it == omega_.end())
        throw std::invalid_argument("ConnectionChart: unknown coordinate " + coord);
    return it->second;
}

ChartMorphism::ChartMorphism(ChartDomain source, ChartDomain target,
                             std::map<std::string, RatFunc> coordinate_map, RFMat frame_change)
    : source_(std::move(source)), target_(std::move(target)),
      coordinate_map_(std::move(coordinate_map)), frame_change_(std::move(frame_change)) {
    for (const std::string& c : target_.coords)
        if (coordinate_map_.find(c) == coordinate_map_.end())
            throw std::invalid_argument("ChartMorphism: unmapped target coordinate " + c);
    if (rf_rows(frame_change_) != rf_cols(frame_change_))
        throw std::invalid_argument("ChartMorphism: frame change must be square");
    // the inverted locus must stay invertible on the source
    RatFunc pulled = pull(RatFunc(target_.delta));
    if (pulled.is_zero() || !divides_power_of(pulled.num(), source_.delta) ||
        !divides_power_of(pulled.den(), source_.delta))
        throw std::invalid_argument("ChartMorphism: target delta does not pull back to a unit");
}

ChartMorphism ChartMorphism::identity(const ChartDomain& domain, unsigned g) {
    std::map<std::string, RatFunc> id_map;
    for (const std::string& c : domain.coords) id_map[c] = RatFunc::variable(c);
    return ChartMorphism(domain, domain, std::move(id_map), rf_identity(2 * static_cast<std::size_t>(g)));
}

ChartMorphism compose(const ChartMorphism& first, const ChartMorphism& second) {
    if (first.target().name != second.source().name)
        throw std::invalid_argument("compose: middle charts do not match");
    std::map<std::string, RatFunc> combined;
    for (const auto& [var, expr] : second.coordinate_map())
        combined[var] = substitute(expr, first.coordinate_map());
    RFMat frame = rf_mul(first.frame_change(),
                         rf_substitute(second.frame_change(), first.coordinate_map()));
    return ChartMorphism(first.source(), second.target(), std::move(combined), std::move(frame));
}

ConnectionChart pullback_connection(const ConnectionChart& conn, const ChartMorphism& m) {
    if (m.target().name != conn.domain().name)
        throw std::invalid_argument("pullback_connection: morphism target does not carry the chart");
    const RFMat& p = m.frame_change();
    if (rf_rows(p) != conn.frame_dim())
        throw std::invalid_argument("pullback_connection: frame change has wrong dimension");
    RFMat pinv = rf_inverse(p);

    // substitute source expressions into each target matrix once
    std::map<std::string, RFMat> pulled;
    for (const auto& [coord, mat] : conn.omega_all())
        pulled[coord] = rf_substitute(mat, m.coordinate_map());

    std::map<std::string, RFMat> result;
    for (const std::string& c : m.source().coords) {
        // (f^* omega)(c) = sum_{c'} pulled(c') * d f_{c'} / dc
        RFMat acc = rf_zeros(conn.frame_dim(), conn.frame_dim());
        for (const std::string& cprime : conn.domain().coords) {
            RatFunc jac = m.coordinate_map().at(cprime).diff(c);
            if (jac.is_zero()) continue;
            acc = rf_add(acc, rf_scale(jac, pulled.at(cprime)));
        }
        // omega_src(c) = P * acc * P^{-1} + P * d(P^{-1})/dc
        RFMat term = rf_mul(rf_mul(p, acc), pinv);
        result[c] = rf_add(term, rf_mul(p, rf_diff(pinv, c)));
    }
    return ConnectionChart(m.source(), conn.g(), std::move(result));
}

std::map<std::string, bool> check_symplectic_compatibility(const ConnectionChart& conn) {
    const unsigned g = conn.g();
    RFMat j = rf_zeros(conn.frame_dim(), conn.frame_dim());
    for (unsigned i = 0; i < g; ++i) {
        j[i][g + i] = RatFunc(1);
        j[g + i][i] = RatFunc(-1);
    }
    std::map<std::string, bool> verdict;
    for (const std::string& c : conn.domain().coords) {
        const RFMat& om = conn.omega(c);
        verdict[c] = rf_is_zero(rf_add(rf_mul(rf_transpose(om), j), rf_mul(j, om)));
    }
    return verdict;
}

RFMat contract(const ConnectionChart& conn, const std::vector<RatFunc>& field_components) {
    if (field_components.size() != conn.domain().coords.size())
        throw std::invalid_argument("contract: one component per coordinate required");
    RFMat acc = rf_zeros(conn.frame_dim(), conn.frame_dim());
    for (std::size_t k = 0; k < field_components.size(); ++k) {
        if (field_components[k].is_zero()) continue;
        acc = rf_add(acc, rf_scale(field_components[k], conn.omega(conn.domain().coords[k])));
    }
    return acc;
}

RFMat kodaira_spencer(const ConnectionChart& conn, const std::vector<RatFunc>& field_components) {
    const unsigned g = conn.g();
    RFMat m = contract(conn, field_components);
    RFMat k = rf_zeros(g, g);
    // nabla_v omega_i = sum_l omega_l m[l][i] + sum_l eta_l m[g+l][i], so the
    // eta_k-coefficient is m[g+k][i]
    for (unsigned i = 0; i < g; ++i)
        for (unsigned kk = 0; kk < g; ++kk) k[i][kk] = m[g + kk][i];
    for (unsigned i = 0; i < g; ++i)
        for (unsigned kk = i + 1; kk < g; ++kk)
            if (!(k[i][kk] == k[kk][i]))
                throw std::domain_error("kodaira_spencer: asymmetric output signals an inconsistent chart");
    return k;
}

bool check_flatness(const ConnectionChart& conn) {
    const auto& coords = conn.domain().coords;
    for (std::size_t a = 0; a < coords.size(); ++a)
        for (std::size_t b = a + 1; b < coords.size(); ++b) {
            const RFMat& oa = conn.omega(coords[a]);
            const RFMat& ob = conn.omega(coords[b]);
            RFMat curv = rf_add(rf_sub(rf_diff(ob, coords[a]), rf_diff(oa, coords[b])),
                                rf_sub(rf_mul(oa, ob), rf_mul(ob, oa)));
            if (!rf_is_zero(curv)) return false;
        }
    return true;
}

std::vector<ChartDiffEntry> diff_charts(const ConnectionChart& a, const ConnectionChart& b) {
    if (a.domain().coords != b.domain().coords || a.g() != b.g())
        throw std::invalid_argument("diff_charts: charts live on different domains");
    std::vector<ChartDiffEntry> out;
    for (const std::string& c : a.domain().coords) {
        const RFMat& ma = a.omega(c);
        const RFMat& mb = b.omega(c);
        for (unsigned i = 0; i < a.frame_dim(); ++i)
            for (unsigned j = 0; j < a.frame_dim(); ++j)
                if (!(ma[i][j] == mb[i][j]))
                    out.push_back({c, i + 1, j + 1, ma[i][j].str(), mb[i][j].str()});
    }
    return out;
}

} // namespace ramanujan
