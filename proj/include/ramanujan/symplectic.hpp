#pragma once

#include "ramanujan/ratmat.hpp"

#include <random>
#include <utility>

namespace ramanujan {

// 2g-dimensional vector space over Rat with a non-degenerate alternating
// pairing <x, y> = x^T * gram * y.
class SymplecticSpace {
public:
    // Standard form: <e_i, f_j> = delta_ij, i.e. gram = [[0, I], [-I, 0]].
    static SymplecticSpace standard(unsigned g);
    // Arbitrary gram matrix; must be 2g x 2g, antisymmetric, invertible.
    SymplecticSpace(unsigned g, RatMat gram);

    unsigned g() const { return g_; }
    std::size_t dim() const { return 2 * static_cast<std::size_t>(g_); }
    const RatMat& gram() const { return gram_; }

    Rat pair(const std::vector<Rat>& x, const std::vector<Rat>& y) const;

    // Subspaces are given by spanning columns; canonicalized to reduced
    // column echelon so that equal spans compare equal.
    RatMat subspace(const RatMat& spanning_cols) const;
    bool is_isotropic(const RatMat& spanning_cols) const;   // throws on dependent columns
    bool is_lagrangian(const RatMat& spanning_cols) const;
    RatMat annihilator(const RatMat& spanning_cols) const;  // {v : <s, v> = 0 for all s}

    // Greedy isotropic enlargement: extend by the first echelon-basis vector
    // of the current annihilator that is not already in the span.
    RatMat find_lagrangian() const;

private:
    unsigned g_;
    RatMat gram_;
};

// Basis (omega_1..omega_g, eta_1..eta_g) with <omega_i, omega_j> =
// <eta_i, eta_j> = 0 and <omega_i, eta_j> = delta_ij.  Validated on
// construction against the given space.
class SymplecticBasis {
public:
    SymplecticBasis(const SymplecticSpace& space, RatMat omega_block, RatMat eta_block);

    const RatMat& omega_block() const { return omega_; }
    const RatMat& eta_block() const { return eta_; }
    // 2g x 2g matrix [omega | eta].
    RatMat cols() const { return RatMat::hcat(omega_, eta_); }
    unsigned g() const { return static_cast<unsigned>(omega_.cols()); }

    bool operator==(const SymplecticBasis&) const = default;

private:
    RatMat omega_, eta_;
};

// Block-structure predicates for 2g x 2g matrices in the standard space.
bool is_symplectic_matrix(const RatMat& m);   // AB^T = BA^T, CD^T = DC^T, AD^T - BC^T = I
bool is_siegel_parabolic(const RatMat& m);    // symplectic with zero lower-left block
bool is_levi(const RatMat& m);                // parabolic with zero upper-right block

enum class GroupKind { Sp, P, L };

// 2g x 2g exact matrix validated against its claimed subgroup.
class GroupElement {
public:
    GroupElement(RatMat matrix, GroupKind claimed); // throws if membership fails
    const RatMat& matrix() const { return matrix_; }
    GroupKind kind() const { return kind_; }

private:
    RatMat matrix_;
    GroupKind kind_;
};

// Right parabolic action b . p = (omega A, omega B + eta (A^T)^{-1}):
// the new basis columns are cols(b) * p.
SymplecticBasis act_parabolic(const SymplecticSpace& space, const SymplecticBasis& b,
                              const GroupElement& p);

// The unique parabolic p with b1 . p = b2.  Throws if the omega-spans
// differ (no parabolic transition exists).
GroupElement transition_parabolic(const SymplecticSpace& space, const SymplecticBasis& b1,
                                  const SymplecticBasis& b2);

// Completion of a Lagrangian frame F to a symplectic basis with
// omega_block = F exactly.  Dual vectors are solved with free variables
// zero; the antisymmetric self-pairing A of the dual lift is corrected by
// the strictly-lower-triangular matrix C with C - C^T = A.
SymplecticBasis complete_to_symplectic(const SymplecticSpace& space, const RatMat& f_basis);

// Unique omega-block spanning the same Lagrangian as F that pairs dually
// with the complementary Lagrangian frame G: result = (omega, G).
SymplecticBasis dual_lagrangian_basis(const SymplecticSpace& space, const RatMat& f_basis,
                                      const RatMat& g_basis);

// Pairing matrix (<alpha_i, eta_j>)_{ij} and its symmetry flag.
std::pair<RatMat, bool> sg_symmetry_check(const SymplecticSpace& space,
                                          const std::vector<std::vector<Rat>>& alphas,
                                          const SymplecticBasis& b);

// Deterministic random elements for property tests (standard space).
RatMat random_invertible(unsigned n, std::mt19937_64& rng);
GroupElement random_parabolic(unsigned g, std::mt19937_64& rng);
GroupElement random_levi(unsigned g, std::mt19937_64& rng);
GroupElement random_symplectic(unsigned g, std::mt19937_64& rng);
SymplecticBasis random_symplectic_basis(unsigned g, std::mt19937_64& rng);
RatMat random_lagrangian_frame(unsigned g, std::mt19937_64& rng);

} // namespace ramanujan
