#include "ramanujan/ratfunc.hpp"

#include <ostream>

namespace ramanujan {

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(Rat(1));
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = gcd_poly(num_, den_);
        if (!g.is_constant()) {
            num_ = *exact_div(num_, g);
            den_ = *exact_div(den_, g);
        }
    }
    // scale so den has coprime integer coefficients and positive leading coeff
    auto [c, prim] = den_.content_and_primitive();
    den_ = std::move(prim);
    num_ = c.inverse() * num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc f = *this;
    f.num_ = -f.num_;
    return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(Rat(1));
    RatFunc base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) r *= base;
        k >>= 1ul;
        if (k > 0) base *= base;
    }
    return r;
}

RatFunc RatFunc::diff(const std::string& var) const {
    return RatFunc(num_.diff(var) * den_ - num_ * den_.diff(var), den_ * den_);
}

Rat RatFunc::eval(const std::map<std::string, Rat>& point) const {
    Rat d = den_.eval(point);
    if (d.is_zero()) throw std::domain_error("RatFunc: denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::complex<double> RatFunc::eval(const std::map<std::string, std::complex<double>>& point) const {
    std::complex<double> d = den_.eval(point);
    if (d == std::complex<double>(0.0, 0.0))
        throw std::domain_error("RatFunc: denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& assignment) {
    for (const auto& v : p.vars())
        if (!assignment.count(v))
            throw std::invalid_argument("substitute: variable '" + v + "' unassigned");
    std::vector<std::vector<RatFunc>> powers(p.vars().size(), std::vector<RatFunc>{RatFunc(Rat(1))});
    auto power = [&](std::size_t j, unsigned k) -> const RatFunc& {
        while (powers[j].size() <= k)
            powers[j].push_back(powers[j].back() * assignment.at(p.vars()[j]));
        return powers[j][k];
    };
    RatFunc out;
    for (const auto& [e, c] : p.terms()) {
        RatFunc t{c};
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) t *= power(j, e[j]);
        out += t;
    }
    return out;
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& assignment) {
    RatFunc d = substitute(f.den(), assignment);
    if (d.is_zero()) throw std::domain_error("substitute: denominator maps to zero");
    return substitute(f.num(), assignment) / d;
}

} // namespace ramanujan
