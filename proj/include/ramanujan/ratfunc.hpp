#pragma once

#include "ramanujan/multipoly.hpp"

#include <map>
#include <string>

namespace ramanujan {

// Rational function: quotient of MultiPolys in canonical form.
//
// Canonical form: gcd(num, den) = 1 (after content normalization), the
// denominator has coprime integer coefficients with positive leading
// coefficient in graded lex, and zero is 0/1.  Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(MultiPoly::constant(Rat(1))) {}
    RatFunc(const Rat& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(Rat(1))) {}
    RatFunc(int c) : RatFunc(Rat(c)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(MultiPoly::constant(Rat(1))) {}
    RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) { normalize(); }

    static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws on zero divisor
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const; // throws on zero
    RatFunc pow(long e) const;

    RatFunc diff(const std::string& var) const; // quotient rule

    Rat eval(const std::map<std::string, Rat>& point) const; // throws if den vanishes
    std::complex<double> eval(const std::map<std::string, std::complex<double>>& point) const;

    std::string str() const; // "num" if polynomial, else "(num)/(den)"

    bool operator==(const RatFunc&) const = default;

private:
    MultiPoly num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

// Substitution homomorphisms.  Every variable of the subject must be
// assigned; assignments may be arbitrary rational functions.
RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& assignment);
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& assignment);

} // namespace ramanujan
