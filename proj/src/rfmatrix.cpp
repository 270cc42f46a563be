#include "ramanujan/rfmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ramanujan {

namespace {

void require_rect(const RFMat& m) {
    if (m.empty()) return;
    for (const auto& row : m)
        if (row.size() != m.front().size()) throw std::invalid_argument("RFMat: ragged rows");
}

void require_same_shape(const RFMat& a, const RFMat& b) {
    require_rect(a);
    require_rect(b);
    if (rf_rows(a) != rf_rows(b) || rf_cols(a) != rf_cols(b))
        throw std::invalid_argument("RFMat: shape mismatch");
}

} // namespace

RFMat rf_zeros(std::size_t rows, std::size_t cols) {
    return RFMat(rows, std::vector<RatFunc>(cols));
}

RFMat rf_identity(std::size_t n) {
    RFMat m = rf_zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
    return m;
}

std::size_t rf_rows(const RFMat& m) { return m.size(); }
std::size_t rf_cols(const RFMat& m) { return m.empty() ? 0 : m.front().size(); }

bool rf_is_zero(const RFMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

RFMat rf_add(const RFMat& a, const RFMat& b) {
    require_same_shape(a, b);
    RFMat m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
    return m;
}

RFMat rf_sub(const RFMat& a, const RFMat& b) {
    require_same_shape(a, b);
    RFMat m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= b[i][j];
    return m;
}

RFMat rf_mul(const RFMat& a, const RFMat& b) {
    require_rect(a);
    require_rect(b);
    if (rf_cols(a) != rf_rows(b)) throw std::invalid_argument("RFMat: shape mismatch in mul");
    RFMat m = rf_zeros(rf_rows(a), rf_cols(b));
    for (std::size_t i = 0; i < rf_rows(a); ++i)
        for (std::size_t k = 0; k < rf_cols(a); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < rf_cols(b); ++j) {
                if (b[k][j].is_zero()) continue;
                m[i][j] += a[i][k] * b[k][j];
            }
        }
    return m;
}

RFMat rf_neg(const RFMat& m) {
    RFMat r = m;
    for (auto& row : r)
        for (auto& x : row) x = -x;
    return r;
}

RFMat rf_scale(const RatFunc& c, const RFMat& m) {
    RFMat r = m;
    for (auto& row : r)
        for (auto& x : row) x = c * x;
    return r;
}

RFMat rf_transpose(const RFMat& m) {
    require_rect(m);
    RFMat r = rf_zeros(rf_cols(m), rf_rows(m));
    for (std::size_t i = 0; i < rf_rows(m); ++i)
        for (std::size_t j = 0; j < rf_cols(m); ++j) r[j][i] = m[i][j];
    return r;
}

RFMat rf_inverse(const RFMat& m) {
    require_rect(m);
    const std::size_t n = rf_rows(m);
    if (n != rf_cols(m)) throw std::invalid_argument("rf_inverse: square matrix required");
    RFMat a = m, inv = rf_identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw std::domain_error("rf_inverse: singular matrix");
        if (p != k) {
            std::swap(a[p], a[k]);
            std::swap(inv[p], inv[k]);
        }
        RatFunc piv = a[k][k].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] *= piv;
            inv[k][j] *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            RatFunc f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

RFMat rf_diff(const RFMat& m, const std::string& var) {
    RFMat r = m;
    for (auto& row : r)
        for (auto& x : row) x = x.diff(var);
    return r;
}

RFMat rf_substitute(const RFMat& m, const std::map<std::string, RatFunc>& assignment) {
    RFMat r = m;
    for (auto& row : r)
        for (auto& x : row) x = substitute(x, assignment);
    return r;
}

std::string rf_str(const RFMat& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j].str();
    }
    os << "]";
    return os.str();
}

} // namespace ramanujan
