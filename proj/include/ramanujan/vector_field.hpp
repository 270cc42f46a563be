#pragma once

#include "ramanujan/connection.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ramanujan {

// Vector field on an affine chart: one d/dc component per coordinate, in
// coordinate order.
struct PolyVectorField {
    std::vector<std::string> chart;
    std::vector<RatFunc> coeffs;

    PolyVectorField(std::vector<std::string> chart_coords, std::vector<RatFunc> components);

    bool is_zero() const;
    std::string str() const;

    bool operator==(const PolyVectorField&) const = default;
};

// The quadratic field in either of its two printed presentations:
//   "b": 2*b4 d/db2 + 3*b6 d/db4 + (b2*b6 - b4^2) d/db6
//   "e": (e2^2 - e4)/12 d/de2 + (e2*e4 - e6)/3 d/de4 + (e2*e6 - e4^2)/2 d/de6
PolyVectorField ramanujan_field(const std::string& chart_name);

// [v, w]_c = sum_d (v_d d_d(w_c) - w_d d_d(v_c)).  Charts must match.
PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);

// Invertible chart map given by explicit substitutions both ways: `forward`
// sends each target coordinate to its expression in source coordinates,
// `inverse` each source coordinate to its expression in target coordinates.
// Construction verifies that the two compositions are the identity.  Formal
// parameters (symbols that are not chart coordinates, e.g. a scaling unit u)
// may appear in the expressions and pass through substitutions untouched.
class ChartIso {
public:
    ChartIso(std::vector<std::string> source_coords, std::vector<std::string> target_coords,
             std::map<std::string, RatFunc> forward, std::map<std::string, RatFunc> inverse);

    static ChartIso identity(const std::vector<std::string>& coords);

    const std::vector<std::string>& source_coords() const { return source_; }
    const std::vector<std::string>& target_coords() const { return target_; }
    const std::map<std::string, RatFunc>& forward() const { return forward_; }
    const std::map<std::string, RatFunc>& inverse() const { return inverse_; }

private:
    std::vector<std::string> source_, target_;
    std::map<std::string, RatFunc> forward_, inverse_;
};

// Composite x -> first(x) -> second(first(x)); first.target must be
// second.source.
ChartIso compose(const ChartIso& first, const ChartIso& second);

// Substitution extending `assignment` by the identity on any unassigned
// symbols of f (the pass-through rule for formal parameters).
RatFunc substitute_through(const RatFunc& f, const std::map<std::string, RatFunc>& assignment);

// Chain rule: (iso_* v)_c = substitute(sum_i v_i * d(forward_c)/dx_i, inverse).
PolyVectorField pushforward(const PolyVectorField& v, const ChartIso& iso);

// The polynomial change of variables between the two cubic presentations:
// (b2, b4, b6) -> (e2, e4, e6) = (b2, b2^2 - 24*b4, b2^3 - 36*b2*b4 + 216*b6).
ChartIso iso_b_to_e();

// (b2, b4, b6) -> (u^2*b2, u^4*b4, u^6*b6) with u a formal invertible symbol.
ChartIso weight_scaling_iso();

// For each pair 1 <= i <= j <= g, the unique field theta with
// contract(conn, theta) = E(i, j), where E(i, j) is zero except for entries
// [g+j-1][i-1] = [g+i-1][j-1] = 1 (the connection sends omega_i to eta_j,
// omega_j to eta_i, and kills the rest of the frame).  The chart must have
// exactly 2g^2 + g coordinates and pass the pairing-compatibility check; the
// linear system must have full rank and the solution must be polynomial.
std::map<std::pair<unsigned, unsigned>, PolyVectorField>
solve_higher_ramanujan(const ConnectionChart& conn);

// True iff every pairwise Lie bracket of the given fields vanishes.
bool verify_commutation(const std::vector<PolyVectorField>& fields);

} // namespace ramanujan
