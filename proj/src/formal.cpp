#include "ramanujan/formal.hpp"

#include <sstream>
#include <stdexcept>

namespace ramanujan {

FormalElement::FormalElement(unsigned g_) : g(g_), coeffs(2 * static_cast<std::size_t>(g_)) {
    if (g == 0) throw std::invalid_argument("FormalElement: g must be positive");
}

FormalElement FormalElement::omega(unsigned k, unsigned g) {
    if (k == 0 || k > g) throw std::invalid_argument("FormalElement: omega index out of range");
    FormalElement x(g);
    x.coeffs[k - 1] = RatFunc(1);
    return x;
}

FormalElement FormalElement::eta(unsigned k, unsigned g) {
    if (k == 0 || k > g) throw std::invalid_argument("FormalElement: eta index out of range");
    FormalElement x(g);
    x.coeffs[g + k - 1] = RatFunc(1);
    return x;
}

const RatFunc& FormalElement::omega_coeff(unsigned k) const {
    if (k == 0 || k > g) throw std::invalid_argument("FormalElement: omega index out of range");
    return coeffs[k - 1];
}

const RatFunc& FormalElement::eta_coeff(unsigned k) const {
    if (k == 0 || k > g) throw std::invalid_argument("FormalElement: eta index out of range");
    return coeffs[g + k - 1];
}

bool FormalElement::is_zero() const {
    for (const RatFunc& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

std::string FormalElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs[s].str() << ")*";
        os << (s < g ? "omega_" : "eta_") << (s < g ? s + 1 : s + 1 - g);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FormalElement FormalElement::operator-() const {
    FormalElement out(g);
    for (std::size_t s = 0; s < coeffs.size(); ++s) out.coeffs[s] = -coeffs[s];
    return out;
}

FormalElement operator+(const FormalElement& a, const FormalElement& b) {
    if (a.g != b.g) throw std::invalid_argument("FormalElement: mixed g");
    FormalElement out(a.g);
    for (std::size_t s = 0; s < a.coeffs.size(); ++s) out.coeffs[s] = a.coeffs[s] + b.coeffs[s];
    return out;
}

FormalElement operator-(const FormalElement& a, const FormalElement& b) { return a + (-b); }

FormalElement operator*(const RatFunc& c, const FormalElement& x) {
    FormalElement out(x.g);
    for (std::size_t s = 0; s < x.coeffs.size(); ++s) out.coeffs[s] = c * x.coeffs[s];
    return out;
}

FormalDerivation::FormalDerivation(unsigned i_, unsigned j_) : i(i_), j(j_) {
    if (i == 0 || i > j) throw std::invalid_argument("FormalDerivation: need 1 <= i <= j");
}

std::vector<FormalDerivation> all_derivations(unsigned g) {
    std::vector<FormalDerivation> out;
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = i; j <= g; ++j) out.emplace_back(i, j);
    return out;
}

FormalElement apply_nabla(const FormalDerivation& d, const FormalElement& x) {
    if (d.j > x.g) throw std::invalid_argument("apply_nabla: derivation index exceeds g");
    FormalElement out(x.g);
    for (unsigned k = 1; k <= x.g; ++k) {
        const RatFunc& c = x.coeffs[k - 1];
        if (c.is_zero()) continue;
        if (k == d.i)
            out.coeffs[x.g + d.j - 1] += c;
        else if (k == d.j)
            out.coeffs[x.g + d.i - 1] += c;
    }
    return out;
}

RatFunc formal_pairing(const FormalElement& x, const FormalElement& y) {
    if (x.g != y.g) throw std::invalid_argument("formal_pairing: mixed g");
    RatFunc acc;
    for (unsigned k = 0; k < x.g; ++k)
        acc += x.coeffs[k] * y.coeffs[x.g + k] - x.coeffs[x.g + k] * y.coeffs[k];
    return acc;
}

bool check_commutation(unsigned g) {
    if (g == 0) throw std::invalid_argument("check_commutation: g must be positive");
    std::vector<FormalDerivation> ds = all_derivations(g);
    std::vector<FormalElement> basis;
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::omega(k, g));
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::eta(k, g));
    for (const FormalDerivation& d1 : ds)
        for (const FormalDerivation& d2 : ds)
            for (const FormalElement& x : basis)
                if (apply_nabla(d1, apply_nabla(d2, x)) != apply_nabla(d2, apply_nabla(d1, x)))
                    return false;
    return true;
}

bool check_pairing_flatness(unsigned g) {
    std::vector<FormalElement> basis;
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::omega(k, g));
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::eta(k, g));
    for (const FormalDerivation& d : all_derivations(g))
        for (const FormalElement& x : basis)
            for (const FormalElement& y : basis)
                if (!(formal_pairing(apply_nabla(d, x), y) + formal_pairing(x, apply_nabla(d, y)))
                         .is_zero())
                    return false;
    return true;
}

RFMat kappa_matrix(const FormalDerivation& d, unsigned g) {
    RFMat k = rf_zeros(g, g);
    for (unsigned m = 1; m <= g; ++m) {
        FormalElement image = apply_nabla(d, FormalElement::omega(m, g));
        for (unsigned col = 1; col <= g; ++col) k[m - 1][col - 1] = image.eta_coeff(col);
    }
    return k;
}

std::vector<FormalElement> parabolic_pullback_basis(const RFMat& a, const RFMat& b, unsigned g) {
    if (rf_rows(a) != g || rf_cols(a) != g || rf_rows(b) != g || rf_cols(b) != g)
        throw std::invalid_argument("parabolic_pullback_basis: blocks must be g x g");
    RFMat a_inv = rf_inverse(a); // throws on singular A
    std::vector<FormalElement> images;
    images.reserve(2 * static_cast<std::size_t>(g));
    for (unsigned k = 1; k <= g; ++k) {
        FormalElement x(g);
        for (unsigned l = 1; l <= g; ++l)
            x = x + a[l - 1][k - 1] * FormalElement::omega(l, g);
        images.push_back(x);
    }
    for (unsigned k = 1; k <= g; ++k) {
        FormalElement x(g);
        for (unsigned l = 1; l <= g; ++l)
            x = x + b[l - 1][k - 1] * FormalElement::omega(l, g) +
                a_inv[k - 1][l - 1] * FormalElement::eta(l, g);
        images.push_back(x);
    }
    return images;
}

FormalElement pullback_element(const std::vector<FormalElement>& images, const FormalElement& x) {
    if (images.size() != 2 * static_cast<std::size_t>(x.g))
        throw std::invalid_argument("pullback_element: need one image per basis symbol");
    FormalElement out(x.g);
    for (std::size_t s = 0; s < x.coeffs.size(); ++s)
        if (!x.coeffs[s].is_zero()) out = out + x.coeffs[s] * images[s];
    return out;
}

EtaObstructionResult check_parabolic_eta_obstruction(unsigned g, const RFMat& a, const RFMat& b) {
    std::vector<FormalElement> images = parabolic_pullback_basis(a, b, g);
    EtaObstructionResult result;
    result.closed_form_matches = true;
    result.all_zero = true;
    result.b_is_zero = rf_is_zero(b);
    for (const FormalDerivation& d : all_derivations(g))
        for (unsigned k = 1; k <= g; ++k) {
            FormalElement computed = apply_nabla(d, images[g + k - 1]);
            FormalElement closed(g);
            if (d.i == d.j) {
                closed = b[d.i - 1][k - 1] * FormalElement::eta(d.i, g);
            } else {
                closed = b[d.i - 1][k - 1] * FormalElement::eta(d.j, g) +
                         b[d.j - 1][k - 1] * FormalElement::eta(d.i, g);
            }
            if (computed != closed) result.closed_form_matches = false;
            if (!computed.is_zero()) result.all_zero = false;
            result.residuals.emplace(std::make_tuple(d.i, d.j, k), std::move(computed));
        }
    return result;
}

bool check_levi_pushforward(unsigned g, const RFMat& a) {
    if (rf_rows(a) != g || rf_cols(a) != g)
        throw std::invalid_argument("check_levi_pushforward: A must be g x g");
    std::vector<FormalElement> images = parabolic_pullback_basis(a, rf_zeros(g, g), g);
    std::vector<FormalElement> basis;
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::omega(k, g));
    for (unsigned k = 1; k <= g; ++k) basis.push_back(FormalElement::eta(k, g));

    for (const FormalDerivation& d : all_derivations(g)) {
        // coefficients of the transported derivation
        auto coeff = [&](unsigned m, unsigned n) -> RatFunc {
            const RatFunc& im_ = a[d.i - 1][m - 1];
            const RatFunc& in_ = a[d.i - 1][n - 1];
            const RatFunc& jm_ = a[d.j - 1][m - 1];
            const RatFunc& jn_ = a[d.j - 1][n - 1];
            if (d.i == d.j) return m == n ? im_ * im_ : im_ * in_;
            return m == n ? RatFunc(2) * im_ * jm_ : im_ * jn_ + in_ * jm_;
        };
        for (const FormalElement& x : basis) {
            FormalElement lhs = apply_nabla(d, pullback_element(images, x));
            FormalElement transported(g);
            for (const FormalDerivation& w : all_derivations(g))
                transported = transported + coeff(w.i, w.j) * apply_nabla(w, x);
            if (lhs != pullback_element(images, transported)) return false;
        }
    }
    return true;
}

} // namespace ramanujan
