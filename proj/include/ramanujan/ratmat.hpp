#pragma once

#include "ramanujan/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramanujan {

// Dense matrix over Rat.  Row-major storage, exact arithmetic throughout.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j);
    const Rat& at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    RatMat operator-() const;
    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator*(const Rat& c, const RatMat& m);

    RatMat transpose() const;

    Rat det() const;              // square only
    RatMat inverse() const;       // throws std::domain_error if singular
    std::size_t rank() const;

    // Reduced row echelon form.
    RatMat rref() const;
    // Reduced column echelon form with zero columns dropped: the canonical
    // representative of the column span, so span equality is operator==.
    RatMat column_echelon() const;
    // Basis of the right nullspace as the columns of the result (possibly
    // zero columns wide), in canonical column-echelon form.
    RatMat nullspace() const;

    // One solution of A x = b with every free variable set to zero, or
    // nullopt if the system is inconsistent.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    // Column j as a vector / build from column vectors.
    std::vector<Rat> col(std::size_t j) const;
    static RatMat from_cols(std::size_t rows, const std::vector<std::vector<Rat>>& cols);
    RatMat cols_slice(std::size_t first, std::size_t count) const;
    static RatMat hcat(const RatMat& a, const RatMat& b);

    // True iff v lies in the column span.
    bool col_span_contains(const std::vector<Rat>& v) const;

    std::string str() const;

    bool operator==(const RatMat&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMat& m);

} // namespace ramanujan
