#include "ramanujan/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace ramanujan {

bool GradedLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t ea = i < a.size() ? a[i] : 0;
        const std::uint32_t eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

namespace {

bool valid_var_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Index of each element of `from` inside `to` (to must contain from).
std::vector<std::size_t> index_map(const std::vector<std::string>& from,
                                   const std::vector<std::string>& to) {
    std::vector<std::size_t> idx(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        idx[i] = static_cast<std::size_t>(it - to.begin());
    }
    return idx;
}

ExpVec remap(const ExpVec& e, const std::vector<std::size_t>& idx, std::size_t width) {
    ExpVec out(width, 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[idx[i]] = e[i];
    return out;
}

} // namespace

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) {
        vars_.clear();
        return;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) used[j] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<std::string> kept;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (used[j]) kept.push_back(vars_[j]);
    TermMap compressed;
    for (const auto& [e, c] : terms_) {
        ExpVec ne;
        ne.reserve(kept.size());
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (used[j]) ne.push_back(e[j]);
        compressed.emplace(std::move(ne), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(compressed);
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    for (MultiPoly* p : {&a, &b}) {
        if (p->vars_ == u) continue;
        auto idx = index_map(p->vars_, u);
        TermMap t;
        for (const auto& [e, c] : p->terms_) t.emplace(remap(e, idx, u.size()), c);
        p->vars_ = u;
        p->terms_ = std::move(t);
    }
}

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(ExpVec{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (!valid_var_name(name)) throw std::invalid_argument("MultiPoly: bad variable name '" + name + "'");
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(ExpVec{1}, Rat(1));
    return p;
}

MultiPoly MultiPoly::from_terms(const std::vector<std::string>& vars,
                                const std::vector<std::pair<ExpVec, Rat>>& terms) {
    for (const auto& v : vars)
        if (!valid_var_name(v)) throw std::invalid_argument("MultiPoly: bad variable name '" + v + "'");
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("MultiPoly: duplicate variable name");
    auto idx = index_map(vars, sorted);
    MultiPoly p;
    p.vars_ = std::move(sorted);
    for (const auto& [e, c] : terms) {
        if (e.size() != vars.size())
            throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
        auto [it, fresh] = p.terms_.emplace(remap(e, idx, p.vars_.size()), c);
        if (!fresh) it->second += c;
    }
    p.normalize();
    return p;
}

Rat MultiPoly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    if (is_zero()) return 0;
    unsigned d = 0;
    for (auto e : terms_.begin()->first) d += e; // leading term has maximal degree
    return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return 0;
    return degree_in_index(static_cast<std::size_t>(it - vars_.begin()));
}

unsigned MultiPoly::degree_in_index(std::size_t idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<unsigned>(e[idx]));
    return d;
}

const Rat& MultiPoly::leading_coeff() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading term of zero");
    return terms_.begin()->second;
}

const ExpVec& MultiPoly::leading_exps() const {
    if (is_zero()) throw std::domain_error("MultiPoly: leading term of zero");
    return terms_.begin()->first;
}

Rat MultiPoly::coeff(const std::map<std::string, unsigned>& monomial) const {
    for (const auto& [name, e] : monomial)
        if (e > 0 && !std::binary_search(vars_.begin(), vars_.end(), name)) return Rat(0);
    ExpVec key(vars_.size(), 0);
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        auto it = monomial.find(vars_[j]);
        if (it != monomial.end()) key[j] = it->second;
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    for (const auto& [e, c] : y.terms_) {
        auto [it, fresh] = x.terms_.emplace(e, c);
        if (!fresh) it->second += c;
    }
    x.normalize();
    return x;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    MultiPoly x = a, y = b;
    MultiPoly::align(x, y);
    MultiPoly out;
    out.vars_ = x.vars_;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            ExpVec e(ea.size());
            for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
            Rat c = ca * cb;
            auto [it, fresh] = out.terms_.emplace(std::move(e), c);
            if (!fresh) it->second += c;
        }
    }
    out.normalize();
    return out;
}

MultiPoly operator*(const Rat& c, const MultiPoly& p) {
    if (c.is_zero()) return MultiPoly();
    MultiPoly out = p;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(Rat(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::diff(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MultiPoly();
    const std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        ExpVec ne = e;
        ne[idx] -= 1;
        out.terms_.emplace(std::move(ne), c * Rat(static_cast<long>(e[idx])));
    }
    out.normalize();
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
    for (const auto& v : vars_)
        if (!assignment.count(v))
            throw std::invalid_argument("MultiPoly::substitute: variable '" + v + "' unassigned");
    // power caches per variable
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (std::size_t j = 0; j < vars_.size(); ++j)
        powers[j].push_back(MultiPoly::constant(Rat(1)));
    auto power = [&](std::size_t j, unsigned k) -> const MultiPoly& {
        while (powers[j].size() <= k)
            powers[j].push_back(powers[j].back() * assignment.at(vars_[j]));
        return powers[j][k];
    };
    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) t *= power(j, e[j]);
        out += t;
    }
    return out;
}

namespace {

template <typename V, typename Conv>
V eval_impl(const MultiPoly& p, const std::map<std::string, V>& point, Conv conv) {
    for (const auto& v : p.vars())
        if (!point.count(v))
            throw std::invalid_argument("MultiPoly::eval: variable '" + v + "' unassigned");
    V acc = conv(Rat(0));
    for (const auto& [e, c] : p.terms()) {
        V t = conv(c);
        for (std::size_t j = 0; j < e.size(); ++j) {
            V base = point.at(p.vars()[j]);
            for (std::uint32_t k = 0; k < e[j]; ++k) t = t * base;
        }
        acc = acc + t;
    }
    return acc;
}

} // namespace

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
    return eval_impl<Rat>(*this, point, [](const Rat& r) { return r; });
}

std::complex<double> MultiPoly::eval(const std::map<std::string, std::complex<double>>& point) const {
    return eval_impl<std::complex<double>>(*this, point,
                                           [](const Rat& r) { return std::complex<double>(r.to_double(), 0.0); });
}

std::pair<Rat, MultiPoly> MultiPoly::content_and_primitive() const {
    if (is_zero()) return {Rat(0), MultiPoly()};
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_content_gcd(g, c);
    if (leading_coeff().is_negative()) g = -g;
    return {g, g.inverse() * *this};
}

bool MultiPoly::coefficients_supported_by(const std::vector<unsigned long>& primes) const {
    for (const auto& [e, c] : terms_)
        if (!c.denominator_supported_by(primes)) return false;
    return true;
}

bool MultiPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c.is_negative();
        const Rat mag = c.abs();
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[j];
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        std::string piece;
        if (mono.empty()) piece = mag.str();
        else if (mag.is_one()) piece = mono;
        else piece = mag.str() + "*" + mono;
        if (first) os << (neg ? "-" : "") << piece;
        else os << (neg ? " - " : " + ") << piece;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

MultiPoly MultiPoly::coeff_of_power(std::size_t idx, unsigned k) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        ExpVec ne = e;
        ne[idx] = 0;
        out.terms_.emplace(std::move(ne), c);
    }
    out.normalize();
    return out;
}

MultiPoly MultiPoly::monomial(const std::vector<std::string>& vars, std::size_t idx, unsigned k) {
    return variable(vars.at(idx)).pow(k);
}

std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (p.is_zero()) return MultiPoly();
    MultiPoly r = p, dd = d;
    MultiPoly::align(r, dd);
    MultiPoly q;
    q.vars_ = dd.vars_;
    const ExpVec ed = dd.leading_exps();
    const Rat cd = dd.leading_coeff();
    while (!r.is_zero()) {
        MultiPoly::align(r, dd); // subtraction may compress r; dd's frame is stable
        const ExpVec& er = r.leading_exps();
        ExpVec eq(er.size());
        for (std::size_t j = 0; j < er.size(); ++j) {
            if (er[j] < ed[j]) return std::nullopt;
            eq[j] = er[j] - ed[j];
        }
        Rat cq = r.leading_coeff() / cd;
        MultiPoly t;
        t.vars_ = dd.vars_;
        t.terms_.emplace(eq, cq);
        q.terms_.emplace(std::move(eq), cq);
        r = r - t * dd;
    }
    q.normalize();
    return q;
}

namespace {

unsigned deg_v(const MultiPoly& p, const std::string& v) { return p.degree_in(v); }

MultiPoly coeff_pow_v(const MultiPoly& p, const std::string& v, unsigned k) {
    auto it = std::lower_bound(p.vars().begin(), p.vars().end(), v);
    if (it == p.vars().end() || *it != v)
        return k == 0 ? p : MultiPoly();
    return p.coeff_of_power(static_cast<std::size_t>(it - p.vars().begin()), k);
}

// gcd of all coefficients of p viewed as univariate in v.
MultiPoly content_in(const MultiPoly& p, const std::string& v) {
    MultiPoly g;
    const unsigned d = deg_v(p, v);
    for (unsigned k = 0; k <= d; ++k) {
        MultiPoly ck = coeff_pow_v(p, v, k);
        if (ck.is_zero()) continue;
        g = gcd_poly(g, ck);
        if (g.is_constant() && !g.is_zero()) return MultiPoly::constant(Rat(1));
    }
    return g;
}

// Pseudo-remainder of a by b in the variable v: lc_v(b)^(da-db+1) * a mod b.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, const std::string& v) {
    const unsigned db = deg_v(b, v);
    const MultiPoly lb = coeff_pow_v(b, v, db);
    MultiPoly r = a;
    long e = static_cast<long>(deg_v(a, v)) - static_cast<long>(db) + 1;
    while (!r.is_zero() && deg_v(r, v) >= db) {
        const unsigned dr = deg_v(r, v);
        MultiPoly t = coeff_pow_v(r, v, dr) * MultiPoly::variable(v).pow(dr - db);
        r = lb * r - t * b;
        --e;
    }
    while (e-- > 0) r = lb * r;
    return r;
}

// Primitive-PRS gcd for primitive integer-coefficient inputs.
MultiPoly pp_gcd(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(Rat(1));

    // first variable (in name order) appearing in either operand
    std::vector<std::string> u;
    std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
                   std::back_inserter(u));
    const std::string v = u.front();

    const unsigned da = deg_v(a, v), db = deg_v(b, v);
    if (da == 0) return pp_gcd(std::move(a), content_in(b, v));
    if (db == 0) return pp_gcd(content_in(a, v), std::move(b));

    const MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    const MultiPoly c = pp_gcd(ca, cb);
    MultiPoly A = *exact_div(a, ca);
    MultiPoly B = *exact_div(b, cb);
    if (deg_v(A, v) < deg_v(B, v)) std::swap(A, B);
    while (!B.is_zero()) {
        MultiPoly R = prem(A, B, v);
        A = std::move(B);
        if (R.is_zero()) {
            B = std::move(R);
        } else {
            R = R.content_and_primitive().second;
            B = *exact_div(R, content_in(R, v));
            B = B.content_and_primitive().second;
        }
    }
    MultiPoly g = *exact_div(A, content_in(A, v));
    g = g.content_and_primitive().second;
    return (c * g).content_and_primitive().second;
}

} // namespace

MultiPoly gcd_poly(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b.content_and_primitive().second;
    if (b.is_zero()) return a.content_and_primitive().second;
    return pp_gcd(a.content_and_primitive().second, b.content_and_primitive().second);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero()) return MultiPoly();
    const unsigned m = deg_v(p, var), n = deg_v(q, var);
    if (m == 0 && n == 0) return MultiPoly::constant(Rat(1));
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);

    const std::size_t N = m + n;
    std::vector<std::vector<MultiPoly>> S(N, std::vector<MultiPoly>(N));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k <= m; ++k) S[i][i + k] = coeff_pow_v(p, var, m - k);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k <= n; ++k) S[n + i][i + k] = coeff_pow_v(q, var, n - k);

    // Bareiss fraction-free elimination (all divisions exact).
    MultiPoly prev = MultiPoly::constant(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (S[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < N && S[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == N) return MultiPoly();
            std::swap(S[k], S[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                MultiPoly numer = S[k][k] * S[i][j] - S[i][k] * S[k][j];
                S[i][j] = *exact_div(numer, prev);
            }
            S[i][k] = MultiPoly();
        }
        prev = S[k][k];
    }
    MultiPoly det = S[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

} // namespace ramanujan
