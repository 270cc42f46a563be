#include "ramanujan/vector_field.hpp"

#include "ramanujan/parse.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ramanujan {

PolyVectorField::PolyVectorField(std::vector<std::string> chart_coords,
                                 std::vector<RatFunc> components)
    : chart(std::move(chart_coords)), coeffs(std::move(components)) {
    if (chart.size() != coeffs.size())
        throw std::invalid_argument("PolyVectorField: one component per coordinate required");
}

bool PolyVectorField::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const RatFunc& c) { return c.is_zero(); });
}

std::string PolyVectorField::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs[i].str() << ")*d/d" << chart[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

PolyVectorField ramanujan_field(const std::string& chart_name) {
    if (chart_name == "b")
        return PolyVectorField({"b2", "b4", "b6"},
                               {parse_ratfunc("2*b4"), parse_ratfunc("3*b6"),
                                parse_ratfunc("b2*b6 - b4^2")});
    if (chart_name == "e")
        return PolyVectorField({"e2", "e4", "e6"},
                               {parse_ratfunc("(e2^2 - e4)/12"), parse_ratfunc("(e2*e4 - e6)/3"),
                                parse_ratfunc("(e2*e6 - e4^2)/2")});
    throw std::invalid_argument("ramanujan_field: unknown chart '" + chart_name + "'");
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
    if (v.chart != w.chart) throw std::invalid_argument("lie_bracket: charts differ");
    std::vector<RatFunc> out;
    out.reserve(v.chart.size());
    for (std::size_t c = 0; c < v.chart.size(); ++c) {
        RatFunc acc;
        for (std::size_t d = 0; d < v.chart.size(); ++d)
            acc += v.coeffs[d] * w.coeffs[c].diff(v.chart[d]) -
                   w.coeffs[d] * v.coeffs[c].diff(v.chart[d]);
        out.push_back(std::move(acc));
    }
    return PolyVectorField(v.chart, std::move(out));
}

RatFunc substitute_through(const RatFunc& f, const std::map<std::string, RatFunc>& assignment) {
    std::map<std::string, RatFunc> full = assignment;
    for (const auto& vars : {f.num().vars(), f.den().vars()})
        for (const std::string& v : vars)
            if (!full.count(v)) full.emplace(v, RatFunc::variable(v));
    return substitute(f, full);
}

ChartIso::ChartIso(std::vector<std::string> source_coords, std::vector<std::string> target_coords,
                   std::map<std::string, RatFunc> forward, std::map<std::string, RatFunc> inverse)
    : source_(std::move(source_coords)), target_(std::move(target_coords)),
      forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (source_.size() != target_.size())
        throw std::invalid_argument("ChartIso: charts must have equal dimension");
    for (const std::string& c : target_)
        if (!forward_.count(c))
            throw std::invalid_argument("ChartIso: target coordinate " + c + " unmapped");
    for (const std::string& c : source_)
        if (!inverse_.count(c))
            throw std::invalid_argument("ChartIso: source coordinate " + c + " unmapped");
    for (const std::string& c : target_)
        if (substitute_through(forward_.at(c), inverse_) != RatFunc::variable(c))
            throw std::invalid_argument("ChartIso: forward then inverse is not the identity on " +
                                        c);
    for (const std::string& c : source_)
        if (substitute_through(inverse_.at(c), forward_) != RatFunc::variable(c))
            throw std::invalid_argument("ChartIso: inverse then forward is not the identity on " +
                                        c);
}

ChartIso ChartIso::identity(const std::vector<std::string>& coords) {
    std::map<std::string, RatFunc> id;
    for (const std::string& c : coords) id.emplace(c, RatFunc::variable(c));
    return ChartIso(coords, coords, id, id);
}

ChartIso compose(const ChartIso& first, const ChartIso& second) {
    if (first.target_coords() != second.source_coords())
        throw std::invalid_argument("compose: middle charts do not match");
    std::map<std::string, RatFunc> forward, inverse;
    for (const auto& [c, expr] : second.forward())
        forward.emplace(c, substitute_through(expr, first.forward()));
    for (const auto& [c, expr] : first.inverse())
        inverse.emplace(c, substitute_through(expr, second.inverse()));
    return ChartIso(first.source_coords(), second.target_coords(), std::move(forward),
                    std::move(inverse));
}

PolyVectorField pushforward(const PolyVectorField& v, const ChartIso& iso) {
    if (v.chart != iso.source_coords())
        throw std::invalid_argument("pushforward: field does not live on the source chart");
    std::vector<RatFunc> out;
    out.reserve(iso.target_coords().size());
    for (const std::string& c : iso.target_coords()) {
        RatFunc applied;
        for (std::size_t i = 0; i < v.chart.size(); ++i)
            applied += v.coeffs[i] * iso.forward().at(c).diff(v.chart[i]);
        out.push_back(substitute_through(applied, iso.inverse()));
    }
    return PolyVectorField(iso.target_coords(), std::move(out));
}

ChartIso iso_b_to_e() {
    return ChartIso({"b2", "b4", "b6"}, {"e2", "e4", "e6"},
                    {{"e2", parse_ratfunc("b2")},
                     {"e4", parse_ratfunc("b2^2 - 24*b4")},
                     {"e6", parse_ratfunc("b2^3 - 36*b2*b4 + 216*b6")}},
                    {{"b2", parse_ratfunc("e2")},
                     {"b4", parse_ratfunc("(e2^2 - e4)/24")},
                     {"b6", parse_ratfunc("(4*e2^3 - 12*e2*e4 + 8*e6)/1728")}});
}

ChartIso weight_scaling_iso() {
    std::vector<std::string> coords = {"b2", "b4", "b6"};
    std::map<std::string, RatFunc> forward, inverse;
    for (unsigned k = 0; k < 3; ++k) {
        RatFunc coord = RatFunc::variable(coords[k]);
        RatFunc scale = RatFunc::variable("u").pow(2 * static_cast<long>(k) + 2);
        forward.emplace(coords[k], scale * coord);
        inverse.emplace(coords[k], coord / scale);
    }
    return ChartIso(coords, coords, std::move(forward), std::move(inverse));
}

namespace {

// Unique solution of a (possibly overdetermined) linear system over the
// rational-function field; throws if the system is rank-deficient or
// inconsistent.
std::vector<RatFunc> solve_unique(std::vector<std::vector<RatFunc>> a, std::vector<RatFunc> rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::optional<std::size_t>> pivot_row(cols);
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        std::size_t r = next;
        while (r < rows && a[r][col].is_zero()) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[next]);
        std::swap(rhs[r], rhs[next]);
        RatFunc inv = a[next][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[next][j] *= inv;
        rhs[next] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next || a[i][col].is_zero()) continue;
            RatFunc f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[next][j];
            rhs[i] -= f * rhs[next];
        }
        pivot_row[col] = next++;
    }
    for (std::size_t col = 0; col < cols; ++col)
        if (!pivot_row[col]) throw std::domain_error("solve_unique: singular system");
    for (std::size_t r = next; r < rows; ++r)
        if (!rhs[r].is_zero()) throw std::domain_error("solve_unique: inconsistent system");
    std::vector<RatFunc> x(cols);
    for (std::size_t col = 0; col < cols; ++col) x[col] = rhs[*pivot_row[col]];
    return x;
}

} // namespace

std::map<std::pair<unsigned, unsigned>, PolyVectorField>
solve_higher_ramanujan(const ConnectionChart& conn) {
    const unsigned g = conn.g();
    const std::size_t dim = conn.frame_dim();
    const std::vector<std::string>& coords = conn.domain().coords;
    const std::size_t expected = 2 * static_cast<std::size_t>(g) * g + g;
    if (coords.size() != expected)
        throw std::invalid_argument("solve_higher_ramanujan: chart must have 2g^2 + g coordinates");
    for (const auto& [c, ok] : check_symplectic_compatibility(conn))
        if (!ok)
            throw std::invalid_argument(
                "solve_higher_ramanujan: connection is not pairing-compatible along " + c);

    // One equation per matrix entry: sum_k theta_k omega(coords[k])[r][c] = E[r][c].
    std::vector<std::vector<RatFunc>> a(dim * dim, std::vector<RatFunc>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const RFMat& m = conn.omega(coords[k]);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) a[r * dim + c][k] = m[r][c];
    }

    std::map<std::pair<unsigned, unsigned>, PolyVectorField> fields;
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = i; j <= g; ++j) {
            std::vector<RatFunc> rhs(dim * dim);
            rhs[(g + j - 1) * dim + (i - 1)] = RatFunc(1);
            rhs[(g + i - 1) * dim + (j - 1)] = RatFunc(1);
            std::vector<RatFunc> theta = solve_unique(a, std::move(rhs));
            for (const RatFunc& component : theta)
                if (!component.is_polynomial())
                    throw std::domain_error(
                        "solve_higher_ramanujan: solved field is not regular on the chart");
            fields.emplace(std::make_pair(i, j), PolyVectorField(coords, std::move(theta)));
        }
    return fields;
}

bool verify_commutation(const std::vector<PolyVectorField>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j)
            if (!lie_bracket(fields[i], fields[j]).is_zero()) return false;
    return true;
}

} // namespace ramanujan
