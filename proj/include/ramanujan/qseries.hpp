#pragma once

#include "ramanujan/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace ramanujan {

// Truncated formal power series in q over Rat.
//
// A series of order N stores the coefficients of q^0 .. q^{N-1} and is
// understood modulo q^N.  Arithmetic never extends knowledge: binary
// operations return the minimum order of their operands, with no implicit
// zero-padding.  Equality is structural (same order, same coefficients).
class QSeries {
public:
    explicit QSeries(unsigned order); // zero series mod q^order; order >= 1
    static QSeries constant(const Rat& c, unsigned order);
    static QSeries q_power(unsigned k, unsigned order);
    static QSeries from_coeffs(std::vector<Rat> coeffs); // order = size

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    const Rat& coeff(unsigned n) const; // throws std::out_of_range for n >= order

    bool is_zero() const;
    std::optional<unsigned> first_nonzero() const;
    bool has_integer_coefficients() const;
    Rat max_abs_coeff() const;

    QSeries truncated(unsigned new_order) const; // new_order <= order

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& c, const QSeries& s);
    friend QSeries operator*(const QSeries& s, const Rat& c) { return c * s; }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    QSeries pow(unsigned e) const;

    // Multiplicative inverse via Newton iteration on truncations.
    // Requires a nonzero constant term.
    QSeries inverse() const;
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

    // theta = q * d/dq: multiplies the coefficient of q^n by n.
    QSeries theta() const;

    std::string str(unsigned max_terms = 8) const;

    bool operator==(const QSeries&) const = default;

private:
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

// Sum of d^k over the divisors d of n.  Throws on n = 0.
Rat divisor_sigma(unsigned k, unsigned long n);

// Normalized Eisenstein series of weight 2, 4 or 6:
//   E2 = 1 - 24 sum sigma_1(n) q^n
//   E4 = 1 + 240 sum sigma_3(n) q^n
//   E6 = 1 - 504 sum sigma_5(n) q^n
QSeries eisenstein(unsigned weight, unsigned order);

// Residuals of the coupled first-order system satisfied by E2, E4, E6:
//   theta E2 - (E2^2 - E4)/12
//   theta E4 - (E2 E4 - E6)/3
//   theta E6 - (E2 E6 - E4^2)/2
// All three are identically zero.
struct RamanujanResiduals {
    QSeries r2, r4, r6;
};
RamanujanResiduals verify_ramanujan(unsigned order); // order >= 2

// Residual of the third-order equation satisfied by E2 alone:
//   theta^3 E2 - E2 * theta^2 E2 + (3/2) (theta E2)^2
QSeries verify_chazy(unsigned order); // order >= 2

// Integral curve of the degree-(2,4,6) polynomial field in the b-chart:
// (E2, theta E2 / 2, theta^2 E2 / 6).  Satisfies theta b2 = 2 b4 and
// theta b4 = 3 b6 by construction; theta b6 = b2 b6 - b4^2 is equivalent
// to the third-order equation above.
struct ChazyTriple {
    QSeries b2, b4, b6;
};
ChazyTriple chazy_triple(unsigned order); // order >= 2

// Horner evaluation of the stored partial sum at a point of the open unit
// disc, plus a heuristic tail estimate C|q|^N/(1-|q|) where C is the
// observed max |coeff(n)|/n^7 growth proxy.  The estimate is reported,
// never treated as a rigorous bound.  Throws for |q| >= 1.
struct SeriesValue {
    std::complex<double> value;
    double tail_estimate;
};
SeriesValue evaluate(const QSeries& s, std::complex<double> q);

} // namespace ramanujan
