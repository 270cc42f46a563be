#include "ramanujan/ratmat.hpp"

#include <sstream>
#include <stdexcept>

namespace ramanujan {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Rat& RatMat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMat::at");
    return data_[i * cols_ + j];
}

const Rat& RatMat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMat::at");
    return data_[i * cols_ + j];
}

bool RatMat::is_zero() const {
    for (const Rat& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMat::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMat::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

RatMat RatMat::operator-() const {
    RatMat m = *this;
    for (Rat& x : m.data_) x = -x;
    return m;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMat: shape mismatch in +");
    RatMat m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMat: shape mismatch in -");
    RatMat m = a;
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch in *");
    RatMat m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

RatMat operator*(const Rat& c, const RatMat& m) {
    RatMat r = m;
    for (Rat& x : r.data_) x = c * x;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rat RatMat::det() const {
    if (!is_square()) throw std::invalid_argument("RatMat::det: square matrix required");
    RatMat a = *this;
    Rat d(1);
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t p = k;
        while (p < rows_ && a.at(p, k).is_zero()) ++p;
        if (p == rows_) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(k, j));
            d = -d;
        }
        d *= a.at(k, k);
        Rat inv = a.at(k, k).inverse();
        for (std::size_t i = k + 1; i < rows_; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rat f = a.at(i, k) * inv;
            for (std::size_t j = k; j < cols_; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

RatMat RatMat::inverse() const {
    if (!is_square()) throw std::invalid_argument("RatMat::inverse: square matrix required");
    RatMat a = *this, inv = identity(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t p = k;
        while (p < rows_ && a.at(p, k).is_zero()) ++p;
        if (p == rows_) throw std::domain_error("RatMat::inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(a.at(p, j), a.at(k, j));
                std::swap(inv.at(p, j), inv.at(k, j));
            }
        Rat piv = a.at(k, k).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            a.at(k, j) *= piv;
            inv.at(k, j) *= piv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            Rat f = a.at(i, k);
            for (std::size_t j = 0; j < cols_; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatMat RatMat::rref() const {
    RatMat a = *this;
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
        std::size_t p = r;
        while (p < rows_ && a.at(p, lead).is_zero()) ++p;
        if (p == rows_) {
            ++lead;
            --r;
            continue;
        }
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat piv = a.at(r, lead).inverse();
        for (std::size_t j = 0; j < cols_; ++j) a.at(r, j) *= piv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a.at(i, lead).is_zero()) continue;
            Rat f = a.at(i, lead);
            for (std::size_t j = 0; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++lead;
    }
    return a;
}

std::size_t RatMat::rank() const {
    RatMat r = rref();
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) {
                ++n;
                break;
            }
    return n;
}

RatMat RatMat::column_echelon() const {
    RatMat r = transpose().rref();
    // drop zero rows, transpose back
    std::vector<std::vector<Rat>> kept;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) {
                zero = false;
                break;
            }
        if (!zero) {
            std::vector<Rat> row(r.cols());
            for (std::size_t j = 0; j < r.cols(); ++j) row[j] = r.at(i, j);
            kept.push_back(std::move(row));
        }
    }
    return RatMat::from_cols(rows_, kept);
}

RatMat RatMat::nullspace() const {
    RatMat r = rref();
    std::vector<std::size_t> pivot_col;                  // pivot column per pivot row
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[f] = Rat(1);
        for (std::size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = -r.at(pr, f);
        basis.push_back(std::move(v));
    }
    return RatMat::from_cols(cols_, basis).column_echelon();
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("RatMat::solve: dimension mismatch");
    RatMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    RatMat r = aug.rref();
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t lead = cols_ + 1;
        for (std::size_t j = 0; j < cols_ + 1; ++j)
            if (!r.at(i, j).is_zero()) {
                lead = j;
                break;
            }
        if (lead == cols_ + 1) continue;    // zero row
        if (lead == cols_) return std::nullopt; // 0 = nonzero
        x[lead] = r.at(i, cols_);            // free variables stay zero
    }
    return x;
}

std::vector<Rat> RatMat::col(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

RatMat RatMat::from_cols(std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
    RatMat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("RatMat::from_cols: ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatMat RatMat::cols_slice(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("RatMat::cols_slice");
    RatMat m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) m.at(i, j) = at(i, first + j);
    return m;
}

RatMat RatMat::hcat(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("RatMat::hcat: row mismatch");
    RatMat m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, a.cols_ + j) = b.at(i, j);
    }
    return m;
}

bool RatMat::col_span_contains(const std::vector<Rat>& v) const {
    return solve(v).has_value();
}

std::string RatMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatMat& m) { return os << m.str(); }

} // namespace ramanujan
