#pragma once

#include "ramanujan/rfmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace ramanujan {

// An affine chart: named coordinates with one inverted polynomial (delta).
struct ChartDomain {
    std::string name;
    std::vector<std::string> coords;
    MultiPoly delta;

    bool operator==(const ChartDomain&) const = default;
};

// True iff p = c * d^k (up to rational content) for some k >= 0, i.e. the
// primitive part of p divides a power of the primitive part of d.
bool divides_power_of(const MultiPoly& p, const MultiPoly& d);

// Connection matrices on a chart in a fixed 2g-frame (omega_1..omega_g,
// eta_1..eta_g).  Row convention throughout:
//     nabla_{d/dc} b_j = sum_i b_i * omega(c)[i][j],
// i.e. the columns of omega(c) expand the derivatives of the frame sections.
// Every entry must be regular on the chart: its denominator divides a
// rational multiple of a power of delta.
class ConnectionChart {
public:
    ConnectionChart(ChartDomain domain, unsigned g, std::map<std::string, RFMat> omega);

    const ChartDomain& domain() const { return domain_; }
    unsigned g() const { return g_; }
    std::size_t frame_dim() const { return 2 * static_cast<std::size_t>(g_); }
    const RFMat& omega(const std::string& coord) const;
    const std::map<std::string, RFMat>& omega_all() const { return omega_; }

    bool operator==(const ConnectionChart&) const = default;

private:
    ChartDomain domain_;
    unsigned g_;
    std::map<std::string, RFMat> omega_;
};

// Chart morphism f: source -> target together with the frame comparison.
// coordinate_map sends each target coordinate to its expression in source
// coordinates; frame_change P expands the pulled-back target frame in the
// source frame, row convention:
//     (pulled-back target frame) = (source frame) * P.
// Construction validates that the target delta pulls back to a unit (a
// rational multiple of a power of the source delta).
class ChartMorphism {
public:
    ChartMorphism(ChartDomain source, ChartDomain target,
                  std::map<std::string, RatFunc> coordinate_map, RFMat frame_change);

    static ChartMorphism identity(const ChartDomain& domain, unsigned g);

    const ChartDomain& source() const { return source_; }
    const ChartDomain& target() const { return target_; }
    const std::map<std::string, RatFunc>& coordinate_map() const { return coordinate_map_; }
    const RFMat& frame_change() const { return frame_change_; }

    // Pullback of a function on the target.
    RatFunc pull(const RatFunc& f) const { return substitute(f, coordinate_map_); }

private:
    ChartDomain source_, target_;
    std::map<std::string, RatFunc> coordinate_map_;
    RFMat frame_change_;
};

// Composite morphism first -> second (first.target must be second.source):
// coordinates compose by substitution, frames by P_first * first^*(P_second).
ChartMorphism compose(const ChartMorphism& first, const ChartMorphism& second);

// Transport of the connection to the source chart of m (whose target chart
// must carry conn).  With P = m.frame_change and f = m.coordinate_map,
//     omega_src(c) = P * (f^* omega)(c) * P^{-1} + P * d(P^{-1})/dc,
// where (f^* omega)(c) = sum_{c'} subst(omega_tgt(c')) * d f_{c'} / dc.
ConnectionChart pullback_connection(const ConnectionChart& conn, const ChartMorphism& m);

// Symplectic compatibility against the constant standard form J:
// omega(c)^T J + J omega(c) = 0, reported per coordinate.
std::map<std::string, bool> check_symplectic_compatibility(const ConnectionChart& conn);

// sum_c v_c * omega(c) for a vector field with components in coordinate
// order.  Throws on component-count mismatch.
RFMat contract(const ConnectionChart& conn, const std::vector<RatFunc>& field_components);

// Kodaira-Spencer matrix K[i][k] = <omega_k, nabla_v omega_i> = the
// eta_k-component of nabla_v omega_i.  Throws std::domain_error if the
// result is not symmetric (an inconsistent chart).
RFMat kodaira_spencer(const ConnectionChart& conn, const std::vector<RatFunc>& field_components);

// Curvature flatness: d_c omega(c') - d_{c'} omega(c) + [omega(c), omega(c')]
// vanishes for every coordinate pair.
bool check_flatness(const ConnectionChart& conn);

// Entry-by-entry differences between two charts on the same domain
// (coordinate, row, column, left entry, right entry) in canonical text form.
struct ChartDiffEntry {
    std::string coord;
    unsigned row, col;
    std::string left, right;
};
std::vector<ChartDiffEntry> diff_charts(const ConnectionChart& a, const ConnectionChart& b);

} // namespace ramanujan
