#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramanujan {

// Exact rational number, always kept in lowest terms with positive
// denominator; zero is 0/1.  Thin wrapper over GMP's mpq_class that pins the
// canonical form and adds the predicates the rest of the library needs.
// There is deliberately no floating-point constructor: doubles enter the
// picture only at the numeric boundary (see flow.hpp) via to_double().
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : v_(n) {}

    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n" or "n/d", optionally signed.
    static Rat from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat abs() const { return is_negative() ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(denominator(), numerator());
    }

    // Integer exponent; negative exponents require a nonzero base.
    Rat pow(long e) const;

    // True iff every prime factor of the denominator lies in `primes`.
    bool denominator_supported_by(const std::vector<unsigned long>& primes) const;

    double to_double() const { return v_.get_d(); }

    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// gcd of |a| and |b| as a nonnegative rational: gcd(nums)/lcm(dens).
// gcd(0, b) = |b|.  Used for polynomial content computations.
Rat rat_content_gcd(const Rat& a, const Rat& b);

} // namespace ramanujan
