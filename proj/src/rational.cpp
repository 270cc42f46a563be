#include "ramanujan/rational.hpp"

#include <ostream>

namespace ramanujan {

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(s));
        return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(num, den);
}

bool Rat::denominator_supported_by(const std::vector<unsigned long>& primes) const {
    mpz_class d = denominator();
    for (unsigned long p : primes) {
        if (p < 2) throw std::invalid_argument("Rat: invalid prime in support set");
        while (mpz_divisible_ui_p(d.get_mpz_t(), p)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
    }
    return d == 1;
}

std::string Rat::str() const {
    std::string out = numerator().get_str();
    if (!is_integer()) out += "/" + denominator().get_str();
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_content_gcd(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rat(g, l);
}

} // namespace ramanujan
