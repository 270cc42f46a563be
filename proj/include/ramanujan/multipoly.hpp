#pragma once

#include "ramanujan/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramanujan {

// Exponent vector, one entry per variable of the owning polynomial.
using ExpVec = std::vector<std::uint32_t>;

// Strict "greater than" in graded lexicographic order (total degree first,
// then lex on the exponents).  Used as the std::map comparator so iteration
// runs from the leading term downwards, which fixes the canonical printing
// and structural-equality order.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Rat.
//
// Canonical form: the variable list is strictly increasing by name, every
// stored coefficient is nonzero, every exponent vector has exactly one slot
// per variable, and variables that appear in no term are dropped.  Two
// polynomials are mathematically equal iff they are structurally equal.
// Binary operations align the two variable lists by name first.
class MultiPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GradedLexGreater>;

    MultiPoly() = default; // zero

    static MultiPoly constant(const Rat& c);
    static MultiPoly variable(const std::string& name);
    // Terms are given against `vars` (which need not be sorted); the result
    // is brought to canonical form.
    static MultiPoly from_terms(const std::vector<std::string>& vars,
                                const std::vector<std::pair<ExpVec, Rat>>& terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
    // Value of a constant polynomial (throws otherwise).
    Rat constant_value() const;

    unsigned total_degree() const; // 0 for the zero polynomial
    unsigned degree_in(const std::string& var) const;

    // Leading term in graded lex (throws on zero).
    const Rat& leading_coeff() const;
    const ExpVec& leading_exps() const;

    // Coefficient of the monomial given by name -> exponent (absent = 0).
    Rat coeff(const std::map<std::string, unsigned>& monomial) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const Rat& c, const MultiPoly& p);
    friend MultiPoly operator*(const MultiPoly& p, const Rat& c) { return c * p; }

    MultiPoly pow(unsigned e) const;

    // Partial derivative; unknown variables differentiate to zero.
    MultiPoly diff(const std::string& var) const;

    // Every variable of *this must be assigned.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;
    Rat eval(const std::map<std::string, Rat>& point) const;
    std::complex<double> eval(const std::map<std::string, std::complex<double>>& point) const;

    // p = content * primitive, where primitive has coprime integer
    // coefficients and positive leading coefficient; content carries sign
    // and denominators.  Zero splits as (0, 0).
    std::pair<Rat, MultiPoly> content_and_primitive() const;

    // True iff every coefficient denominator factors over `primes`.
    bool coefficients_supported_by(const std::vector<unsigned long>& primes) const;
    bool has_integer_coefficients() const;

    // Canonical text form: terms in graded-lex descending order, explicit
    // '*' and '^', coefficients as integers or a/b.  Parseable by parse.hpp.
    std::string str() const;

    bool operator==(const MultiPoly&) const = default;

    // --- helpers for univariate views (used by gcd / resultants) ---

    // Degree in vars()[idx].
    unsigned degree_in_index(std::size_t idx) const;
    // Coefficient of vars()[idx]^k, as a polynomial (canonical form, so the
    // variable itself is dropped from the result).
    MultiPoly coeff_of_power(std::size_t idx, unsigned k) const;
    // this * vars()[idx]^k -- idx refers to `vars`, which must contain the
    // variable already.
    static MultiPoly monomial(const std::vector<std::string>& vars, std::size_t idx, unsigned k);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void normalize();
    // Rewrites both polynomials over the union of their variable lists.
    static void align(MultiPoly& a, MultiPoly& b);
    friend MultiPoly gcd_poly(MultiPoly a, MultiPoly b);
    friend std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d);
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Primitive gcd with positive leading coefficient (1 for coprime inputs,
// 0 iff both inputs are 0).  Content/primitive-part reduction in each
// variable plus a primitive pseudo-remainder sequence.
MultiPoly gcd_poly(MultiPoly a, MultiPoly b);

// Exact quotient p / d, or nullopt if d does not divide p.  Throws on d = 0.
std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d);

// Resultant of p and q viewed as univariate polynomials in `var`
// (Sylvester determinant, fraction-free elimination).  Used as an
// independent oracle in tests.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

} // namespace ramanujan
