#include "ramanujan/symplectic.hpp"

#include <stdexcept>

namespace ramanujan {

namespace {

void require_even_square(const RatMat& m) {
    if (!m.is_square() || m.rows() % 2 != 0 || m.rows() == 0)
        throw std::invalid_argument("matrix must be square of even positive dimension");
}

struct Blocks {
    RatMat a, b, c, d;
};

Blocks split(const RatMat& m) {
    const std::size_t g = m.rows() / 2;
    RatMat a(g, g), b(g, g), c(g, g), d(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            a.at(i, j) = m.at(i, j);
            b.at(i, j) = m.at(i, j + g);
            c.at(i, j) = m.at(i + g, j);
            d.at(i, j) = m.at(i + g, j + g);
        }
    return {a, b, c, d};
}

} // namespace

SymplecticSpace SymplecticSpace::standard(unsigned g) {
    RatMat gram(2 * static_cast<std::size_t>(g), 2 * static_cast<std::size_t>(g));
    for (unsigned i = 0; i < g; ++i) {
        gram.at(i, g + i) = Rat(1);
        gram.at(g + i, i) = Rat(-1);
    }
    return SymplecticSpace(g, gram);
}

SymplecticSpace::SymplecticSpace(unsigned g, RatMat gram) : g_(g), gram_(std::move(gram)) {
    if (g_ == 0) throw std::invalid_argument("SymplecticSpace: g must be positive");
    if (gram_.rows() != dim() || gram_.cols() != dim())
        throw std::invalid_argument("SymplecticSpace: gram must be 2g x 2g");
    if (!gram_.is_antisymmetric())
        throw std::invalid_argument("SymplecticSpace: gram must be alternating");
    if (gram_.det().is_zero())
        throw std::invalid_argument("SymplecticSpace: gram must be non-degenerate");
}

Rat SymplecticSpace::pair(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (x.size() != dim() || y.size() != dim())
        throw std::invalid_argument("SymplecticSpace::pair: dimension mismatch");
    Rat total(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        Rat row(0);
        for (std::size_t j = 0; j < dim(); ++j) {
            if (gram_.at(i, j).is_zero()) continue;
            row += gram_.at(i, j) * y[j];
        }
        total += x[i] * row;
    }
    return total;
}

RatMat SymplecticSpace::subspace(const RatMat& spanning_cols) const {
    if (spanning_cols.rows() != dim())
        throw std::invalid_argument("SymplecticSpace::subspace: ambient dimension mismatch");
    return spanning_cols.column_echelon();
}

bool SymplecticSpace::is_isotropic(const RatMat& s) const {
    if (s.rows() != dim()) throw std::invalid_argument("is_isotropic: ambient dimension mismatch");
    if (s.rank() != s.cols()) throw std::invalid_argument("is_isotropic: dependent spanning set");
    return (s.transpose() * gram_ * s).is_zero();
}

bool SymplecticSpace::is_lagrangian(const RatMat& s) const {
    return is_isotropic(s) && s.cols() == g_;
}

RatMat SymplecticSpace::annihilator(const RatMat& s) const {
    if (s.rows() != dim()) throw std::invalid_argument("annihilator: ambient dimension mismatch");
    if (s.rank() != s.cols()) throw std::invalid_argument("annihilator: dependent spanning set");
    return (s.transpose() * gram_).nullspace();
}

RatMat SymplecticSpace::find_lagrangian() const {
    RatMat span(dim(), 0);
    while (span.cols() < g_) {
        RatMat ann = span.cols() == 0 ? RatMat::identity(dim()).column_echelon() : annihilator(span);
        bool extended = false;
        for (std::size_t j = 0; j < ann.cols(); ++j) {
            std::vector<Rat> v = ann.col(j);
            if (span.cols() != 0 && span.col_span_contains(v)) continue;
            span = subspace(RatMat::hcat(span, RatMat::from_cols(dim(), {v})));
            extended = true;
            break;
        }
        if (!extended) throw std::logic_error("find_lagrangian: isotropic extension failed");
    }
    return span;
}

SymplecticBasis::SymplecticBasis(const SymplecticSpace& space, RatMat omega_block, RatMat eta_block)
    : omega_(std::move(omega_block)), eta_(std::move(eta_block)) {
    const std::size_t n = space.dim();
    const unsigned g = space.g();
    if (omega_.rows() != n || eta_.rows() != n || omega_.cols() != g || eta_.cols() != g)
        throw std::invalid_argument("SymplecticBasis: blocks must be 2g x g");
    RatMat all = cols();
    if (all.rank() != n) throw std::invalid_argument("SymplecticBasis: vectors are dependent");
    RatMat p = all.transpose() * space.gram() * all; // full pairing matrix
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = 0; j < g; ++j) {
            if (!p.at(i, j).is_zero() || !p.at(g + i, g + j).is_zero())
                throw std::invalid_argument("SymplecticBasis: blocks are not isotropic");
            Rat expect = (i == j) ? Rat(1) : Rat(0);
            if (p.at(i, g + j) != expect)
                throw std::invalid_argument("SymplecticBasis: omega/eta pairing is not dual");
        }
}

bool is_symplectic_matrix(const RatMat& m) {
    require_even_square(m);
    auto [a, b, c, d] = split(m);
    const std::size_t g = a.rows();
    RatMat ident = RatMat::identity(g);
    return (a * b.transpose()) == (b * a.transpose()) &&
           (c * d.transpose()) == (d * c.transpose()) &&
           (a * d.transpose() - b * c.transpose()) == ident;
}

bool is_siegel_parabolic(const RatMat& m) {
    require_even_square(m);
    return split(m).c.is_zero() && is_symplectic_matrix(m);
}

bool is_levi(const RatMat& m) {
    require_even_square(m);
    auto blocks = split(m);
    return blocks.b.is_zero() && blocks.c.is_zero() && is_symplectic_matrix(m);
}

GroupElement::GroupElement(RatMat matrix, GroupKind claimed) : matrix_(std::move(matrix)), kind_(claimed) {
    bool ok = false;
    switch (kind_) {
    case GroupKind::Sp: ok = is_symplectic_matrix(matrix_); break;
    case GroupKind::P: ok = is_siegel_parabolic(matrix_); break;
    case GroupKind::L: ok = is_levi(matrix_); break;
    }
    if (!ok) throw std::invalid_argument("GroupElement: matrix fails the claimed membership");
}

SymplecticBasis act_parabolic(const SymplecticSpace& space, const SymplecticBasis& b,
                              const GroupElement& p) {
    if (p.kind() != GroupKind::P && !is_siegel_parabolic(p.matrix()))
        throw std::invalid_argument("act_parabolic: element is not parabolic");
    RatMat moved = b.cols() * p.matrix();
    const unsigned g = b.g();
    return SymplecticBasis(space, moved.cols_slice(0, g), moved.cols_slice(g, g));
}

GroupElement transition_parabolic(const SymplecticSpace& space, const SymplecticBasis& b1,
                                  const SymplecticBasis& b2) {
    if (space.subspace(b1.omega_block()) != space.subspace(b2.omega_block()))
        throw std::invalid_argument("transition_parabolic: omega-spans differ");
    RatMat p = b1.cols().inverse() * b2.cols();
    return GroupElement(p, GroupKind::P);
}

SymplecticBasis complete_to_symplectic(const SymplecticSpace& space, const RatMat& f_basis) {
    if (!space.is_lagrangian(f_basis))
        throw std::invalid_argument("complete_to_symplectic: input frame is not Lagrangian");
    const unsigned g = space.g();
    // Dual lift: solve <F_i, v_j> = delta_ij with free variables zero.
    RatMat system = f_basis.transpose() * space.gram(); // g x 2g
    std::vector<std::vector<Rat>> dual;
    for (unsigned j = 0; j < g; ++j) {
        std::vector<Rat> e(g, Rat(0));
        e[j] = Rat(1);
        auto v = system.solve(e);
        if (!v) throw std::logic_error("complete_to_symplectic: dual system inconsistent");
        dual.push_back(*v);
    }
    RatMat fprime = RatMat::from_cols(space.dim(), dual);
    // Self-pairing of the lift is antisymmetric; correct with the strictly
    // lower triangular C satisfying C - C^T = A, i.e. eta = F' + F C.
    RatMat a = fprime.transpose() * space.gram() * fprime;
    RatMat c(g, g);
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = 0; j < i; ++j) c.at(i, j) = a.at(i, j);
    RatMat eta = fprime + f_basis * c;
    return SymplecticBasis(space, f_basis, eta);
}

SymplecticBasis dual_lagrangian_basis(const SymplecticSpace& space, const RatMat& f_basis,
                                      const RatMat& g_basis) {
    if (!space.is_lagrangian(f_basis) || !space.is_lagrangian(g_basis))
        throw std::invalid_argument("dual_lagrangian_basis: frames must be Lagrangian");
    RatMat m = f_basis.transpose() * space.gram() * g_basis; // M_kj = <F_k, G_j>
    RatMat c;
    try {
        c = m.inverse();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("dual_lagrangian_basis: spans are not complementary");
    }
    RatMat omega = f_basis * c.transpose(); // <omega_i, G_j> = (C M)_ij^T ... = delta_ij
    return SymplecticBasis(space, omega, g_basis);
}

std::pair<RatMat, bool> sg_symmetry_check(const SymplecticSpace& space,
                                          const std::vector<std::vector<Rat>>& alphas,
                                          const SymplecticBasis& b) {
    RatMat m(alphas.size(), b.g());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (unsigned j = 0; j < b.g(); ++j) m.at(i, j) = space.pair(alphas[i], b.eta_block().col(j));
    return {m, m.is_symmetric()};
}

RatMat random_invertible(unsigned n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        RatMat m(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.at(i, j) = Rat(d(rng));
        if (!m.det().is_zero()) return m;
    }
}

GroupElement random_parabolic(unsigned g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    RatMat a = random_invertible(g, rng);
    RatMat s(g, g); // symmetric
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = i; j < g; ++j) {
            Rat v(d(rng));
            s.at(i, j) = v;
            s.at(j, i) = v;
        }
    RatMat ainvt = a.inverse().transpose();
    RatMat b = s * ainvt; // then A B^T = A (A^T)^{-1} S = ... symmetric by construction
    RatMat m(2 * static_cast<std::size_t>(g), 2 * static_cast<std::size_t>(g));
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = 0; j < g; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, g + j) = b.at(i, j);
            m.at(g + i, g + j) = ainvt.at(i, j);
        }
    return GroupElement(m, GroupKind::P);
}

GroupElement random_levi(unsigned g, std::mt19937_64& rng) {
    RatMat a = random_invertible(g, rng);
    RatMat ainvt = a.inverse().transpose();
    RatMat m(2 * static_cast<std::size_t>(g), 2 * static_cast<std::size_t>(g));
    for (unsigned i = 0; i < g; ++i)
        for (unsigned j = 0; j < g; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(g + i, g + j) = ainvt.at(i, j);
        }
    return GroupElement(m, GroupKind::L);
}

GroupElement random_symplectic(unsigned g, std::mt19937_64& rng) {
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    RatMat j(n, n); // the standard form itself is symplectic
    for (unsigned i = 0; i < g; ++i) {
        j.at(i, g + i) = Rat(1);
        j.at(g + i, i) = Rat(-1);
    }
    RatMat m = random_parabolic(g, rng).matrix();
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) != 0) m = m * j * random_parabolic(g, rng).matrix();
    return GroupElement(m, GroupKind::Sp);
}

SymplecticBasis random_symplectic_basis(unsigned g, std::mt19937_64& rng) {
    SymplecticSpace space = SymplecticSpace::standard(g);
    RatMat m = random_symplectic(g, rng).matrix();
    return SymplecticBasis(space, m.cols_slice(0, g), m.cols_slice(g, g));
}

RatMat random_lagrangian_frame(unsigned g, std::mt19937_64& rng) {
    RatMat omega = random_symplectic(g, rng).matrix().cols_slice(0, g);
    return omega * random_invertible(g, rng);
}

} // namespace ramanujan
