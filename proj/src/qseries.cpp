#include "ramanujan/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ramanujan {

QSeries::QSeries(unsigned order) {
    if (order == 0) throw std::invalid_argument("QSeries: order must be >= 1");
    coeffs_.assign(order, Rat(0));
}

QSeries QSeries::constant(const Rat& c, unsigned order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::q_power(unsigned k, unsigned order) {
    QSeries s(order);
    if (k < order) s.coeffs_[k] = Rat(1);
    return s;
}

QSeries QSeries::from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("QSeries: order must be >= 1");
    QSeries s(static_cast<unsigned>(coeffs.size()));
    s.coeffs_ = std::move(coeffs);
    return s;
}

const Rat& QSeries::coeff(unsigned n) const {
    if (n >= coeffs_.size()) throw std::out_of_range("QSeries::coeff: index beyond truncation order");
    return coeffs_[n];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_zero(); });
}

std::optional<unsigned> QSeries::first_nonzero() const {
    for (unsigned n = 0; n < coeffs_.size(); ++n)
        if (!coeffs_[n].is_zero()) return n;
    return std::nullopt;
}

bool QSeries::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_integer(); });
}

Rat QSeries::max_abs_coeff() const {
    Rat m(0);
    for (const Rat& c : coeffs_) {
        Rat a = c.is_negative() ? -c : c;
        if (a > m) m = a;
    }
    return m;
}

QSeries QSeries::truncated(unsigned new_order) const {
    if (new_order == 0 || new_order > coeffs_.size())
        throw std::invalid_argument("QSeries::truncated: order must be in [1, order]");
    QSeries s(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order, s.coeffs_.begin());
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (Rat& c : s.coeffs_) c = -c;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    for (unsigned n = 0; n < s.order(); ++n) s.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    for (unsigned n = 0; n < s.order(); ++n) s.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order(), b.order()));
    for (unsigned i = 0; i < s.order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j < s.order(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return s;
}

QSeries operator*(const Rat& c, const QSeries& s) {
    QSeries r = s;
    for (Rat& x : r.coeffs_) x = c * x;
    return r;
}

QSeries QSeries::pow(unsigned e) const {
    QSeries acc = QSeries::constant(Rat(1), order());
    QSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

QSeries QSeries::inverse() const {
    if (coeffs_[0].is_zero())
        throw std::domain_error("QSeries::inverse: constant term must be nonzero");
    // Newton: g <- g (2 - f g), doubling the number of correct coefficients.
    std::vector<Rat> g{coeffs_[0].inverse()};
    unsigned prec = 1;
    while (prec < order()) {
        prec = std::min(2 * prec, order());
        QSeries fk = truncated(prec);
        std::vector<Rat> gpad(g);
        gpad.resize(prec, Rat(0));
        QSeries gs = QSeries::from_coeffs(gpad);
        QSeries next = gs * (QSeries::constant(Rat(2), prec) - fk * gs);
        g.assign(next.coeffs_.begin(), next.coeffs_.end());
    }
    return QSeries::from_coeffs(g);
}

QSeries QSeries::theta() const {
    QSeries s = *this;
    for (unsigned n = 0; n < s.order(); ++n) s.coeffs_[n] = Rat(static_cast<long>(n)) * s.coeffs_[n];
    return s;
}

std::string QSeries::str(unsigned max_terms) const {
    std::ostringstream os;
    unsigned printed = 0;
    for (unsigned n = 0; n < order() && printed < max_terms; ++n) {
        const Rat& c = coeffs_[n];
        if (c.is_zero()) continue;
        if (printed == 0) {
            if (c.is_negative()) os << "-";
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        Rat a = c.is_negative() ? -c : c;
        if (n == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    os << " + O(q^" << order() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.str(); }

Rat divisor_sigma(unsigned k, unsigned long n) {
    if (n == 0) throw std::invalid_argument("divisor_sigma: n must be >= 1");
    mpz_class total = 0;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_class dk, ek;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        total += dk;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(ek.get_mpz_t(), e, k);
            total += ek;
        }
    }
    return Rat(total);
}

QSeries eisenstein(unsigned weight, unsigned order) {
    long scale;
    unsigned k;
    switch (weight) {
    case 2: scale = -24; k = 1; break;
    case 4: scale = 240; k = 3; break;
    case 6: scale = -504; k = 5; break;
    default: throw std::invalid_argument("eisenstein: weight must be 2, 4 or 6");
    }
    std::vector<Rat> c(order, Rat(0));
    c[0] = Rat(1);
    for (unsigned n = 1; n < order; ++n) c[n] = Rat(scale) * divisor_sigma(k, n);
    return QSeries::from_coeffs(std::move(c));
}

RamanujanResiduals verify_ramanujan(unsigned order) {
    if (order < 2) throw std::invalid_argument("verify_ramanujan: order must be >= 2");
    QSeries e2 = eisenstein(2, order), e4 = eisenstein(4, order), e6 = eisenstein(6, order);
    return RamanujanResiduals{
        e2.theta() - Rat(1, 12) * (e2 * e2 - e4),
        e4.theta() - Rat(1, 3) * (e2 * e4 - e6),
        e6.theta() - Rat(1, 2) * (e2 * e6 - e4 * e4),
    };
}

QSeries verify_chazy(unsigned order) {
    if (order < 2) throw std::invalid_argument("verify_chazy: order must be >= 2");
    QSeries e2 = eisenstein(2, order);
    QSeries t1 = e2.theta();
    QSeries t2 = t1.theta();
    QSeries t3 = t2.theta();
    return t3 - e2 * t2 + Rat(3, 2) * (t1 * t1);
}

ChazyTriple chazy_triple(unsigned order) {
    if (order < 2) throw std::invalid_argument("chazy_triple: order must be >= 2");
    QSeries e2 = eisenstein(2, order);
    QSeries t1 = e2.theta();
    QSeries t2 = t1.theta();
    return ChazyTriple{e2, Rat(1, 2) * t1, Rat(1, 6) * t2};
}

SeriesValue evaluate(const QSeries& s, std::complex<double> q) {
    const double aq = std::abs(q);
    if (aq >= 1.0) throw std::domain_error("evaluate: |q| must be < 1");
    // Horner from the top coefficient down.
    std::complex<double> acc(0.0, 0.0);
    for (unsigned n = s.order(); n-- > 0;) acc = acc * q + s.coeff(n).to_double();
    // Growth proxy: coefficients of the series of interest grow at most
    // polynomially; use max |c_n| / n^7 over stored terms.
    double c = 0.0;
    for (unsigned n = 1; n < s.order(); ++n) {
        double mag = std::abs(s.coeff(n).to_double());
        double proxy = mag / std::pow(static_cast<double>(n), 7.0);
        c = std::max(c, proxy);
    }
    double tail = c * std::pow(aq, static_cast<double>(s.order())) / (1.0 - aq);
    return SeriesValue{acc, tail};
}

} // namespace ramanujan
