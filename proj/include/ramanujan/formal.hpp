#pragma once

#include "ramanujan/rfmatrix.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ramanujan {

// Element of the free module on the symbols omega_1..omega_g, eta_1..eta_g,
// with coefficients in the rational-function field of whatever flat scalar
// symbols appear (matrix entries, formal constants).  Flat means every
// derivation in this module annihilates them.
struct FormalElement {
    unsigned g;
    std::vector<RatFunc> coeffs; // omega block first, then eta block

    explicit FormalElement(unsigned g_);
    static FormalElement omega(unsigned k, unsigned g); // 1-based index
    static FormalElement eta(unsigned k, unsigned g);

    const RatFunc& omega_coeff(unsigned k) const; // 1-based
    const RatFunc& eta_coeff(unsigned k) const;

    bool is_zero() const;
    std::string str() const;

    FormalElement operator-() const;
    friend FormalElement operator+(const FormalElement& a, const FormalElement& b);
    friend FormalElement operator-(const FormalElement& a, const FormalElement& b);
    friend FormalElement operator*(const RatFunc& c, const FormalElement& x);

    bool operator==(const FormalElement&) const = default;
};

// The derivation indexed by a pair 1 <= i <= j: on basis symbols it acts by
//   omega_i -> eta_j,  omega_j -> eta_i,  every other omega_k -> 0,
//   every eta_k -> 0,
// and extends linearly with all scalars flat.
struct FormalDerivation {
    unsigned i, j;
    FormalDerivation(unsigned i_, unsigned j_); // validates 1 <= i <= j
};

// All index pairs for a given g, in lexicographic order.
std::vector<FormalDerivation> all_derivations(unsigned g);

FormalElement apply_nabla(const FormalDerivation& d, const FormalElement& x);

// Standard pairing: <omega_i, eta_j> = delta_ij, both blocks isotropic,
// antisymmetric, bilinear over scalars.
RatFunc formal_pairing(const FormalElement& x, const FormalElement& y);

// Every pair of derivations commutes on every basis symbol.
bool check_commutation(unsigned g);

// <nabla_d x, y> + <x, nabla_d y> = 0 on all basis pairs for all d (the
// pairing is flat because the scalars are).
bool check_pairing_flatness(unsigned g);

// Matrix K[m][k] = eta_k-coefficient of nabla_d omega_m (1-based indices
// mapped to 0-based storage): the deformation direction cut out by d.
RFMat kappa_matrix(const FormalDerivation& d, unsigned g);

// Images of the basis under pullback by the block matrix [[A, B], [0, (A^T)^{-1}]]:
//   p^* omega_k = sum_l omega_l A_lk,
//   p^* eta_k   = sum_l omega_l B_lk + sum_l eta_l (A^{-1})_kl.
// A must be invertible (g x g); B must be g x g.
std::vector<FormalElement> parabolic_pullback_basis(const RFMat& a, const RFMat& b, unsigned g);

// x with each basis symbol replaced by its image, scalars untouched.
FormalElement pullback_element(const std::vector<FormalElement>& images, const FormalElement& x);

// For every i <= j and k, the derivation applied to the pulled-back eta
// section picks out exactly the B-block:
//   nabla_{(i,j)}(p^* eta_k) = eta_j B_ik + eta_i B_jk   (i < j)
//                            = eta_i B_ik                (i = j),
// so the residuals vanish simultaneously iff B = 0.
struct EtaObstructionResult {
    bool closed_form_matches; // computed derivation equals the displayed form
    bool all_zero;            // every residual vanishes
    bool b_is_zero;
    std::map<std::tuple<unsigned, unsigned, unsigned>, FormalElement> residuals; // (i, j, k)
};
EtaObstructionResult check_parabolic_eta_obstruction(unsigned g, const RFMat& a, const RFMat& b);

// Transformation law under the block-diagonal element with invertible A:
// for all i <= j and every basis symbol x,
//   nabla_{(i,j)}(p^* x) = p^*( sum_{m <= n} c_mn nabla_{(m,n)} x ),
// with c_mn = A_im A_jn + A_in A_jm (m < n), c_mm = 2 A_im A_jm for i < j,
// and  c_mn = A_im A_in (m < n),            c_mm = A_im^2      for i = j.
bool check_levi_pushforward(unsigned g, const RFMat& a);

} // namespace ramanujan
