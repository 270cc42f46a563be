#pragma once

#include "ramanujan/ratfunc.hpp"

#include <vector>

namespace ramanujan {

// Small dense matrix of rational functions, stored as rows of rows.
// Shapes are always explicit at call sites; helpers validate rectangularity.
using RFMat = std::vector<std::vector<RatFunc>>;

RFMat rf_zeros(std::size_t rows, std::size_t cols);
RFMat rf_identity(std::size_t n);

std::size_t rf_rows(const RFMat& m);
std::size_t rf_cols(const RFMat& m);

bool rf_is_zero(const RFMat& m);

RFMat rf_add(const RFMat& a, const RFMat& b);
RFMat rf_sub(const RFMat& a, const RFMat& b);
RFMat rf_mul(const RFMat& a, const RFMat& b);
RFMat rf_neg(const RFMat& m);
RFMat rf_scale(const RatFunc& c, const RFMat& m);
RFMat rf_transpose(const RFMat& m);

// Gauss-Jordan over the rational function field; throws std::domain_error
// if the matrix is singular.
RFMat rf_inverse(const RFMat& m);

// Entrywise partial derivative / substitution.
RFMat rf_diff(const RFMat& m, const std::string& var);
RFMat rf_substitute(const RFMat& m, const std::map<std::string, RatFunc>& assignment);

std::string rf_str(const RFMat& m);

} // namespace ramanujan
