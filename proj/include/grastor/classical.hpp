#pragma once

#include <vector>

#include "grastor/geometry.hpp"

namespace grastor {

// --- homotope algebra --------------------------------------------------------

// x ·_a y = x + y - x a y (associative, neutral 0). Rectangular shapes allowed
// with a in the opposite matrix space.
Matrix homotope_product(const Matrix& x, const Matrix& y, const Matrix& a);

// j_a(x) = -(1 - x a)^{-1} x, the ·_a inverse of x.
Matrix homotope_inverse(const Matrix& x, const Matrix& a);

bool homotope_invertible(const Matrix& x, const Matrix& a);  // 1 - xa invertible

// [X, Y]_A = X A Y - Y A X.
Matrix lie_bracket_homotope(const Matrix& x, const Matrix& y, const Matrix& a);

// Same bracket extracted from the group commutator of e1 X and e2 Y under the
// chart law U · V = U + V - V A U over the second dual-number extension; this
// is the independent route and must agree with lie_bracket_homotope.
Matrix lie_bracket_via_dual_numbers(const Matrix& x, const Matrix& y, const Matrix& a);

// --- classical homotope groups ----------------------------------------------

enum class GroupFamily : uint8_t { gl, gl_rect, orthogonal, symplectic, unitary };

// Family parameter A with the family's symmetry checked at construction:
// orthogonal A^T = A, symplectic A^T = -A, unitary conj(A)^T = A.
struct HomotopeGroupSpec {
    GroupFamily family;
    Matrix a;
    HomotopeGroupSpec(GroupFamily family, Matrix a);
};

// Membership: 1 - AX invertible plus the family's defining equation
// (orthogonal X + X^T = X^T A X, symplectic X^T - X = X^T A X,
//  unitary X + conj(X)^T = conj(X)^T A X).
bool group_membership(const HomotopeGroupSpec& spec, const Matrix& x);
bool hull_membership(const HomotopeGroupSpec& spec, const Matrix& x);  // no invertibility

struct MatrixTable {
    std::vector<Matrix> elements;
    std::vector<std::vector<uint32_t>> table;  // indices of products under ·_A
    size_t order() const { return elements.size(); }
    size_t index_of(const Matrix& m) const;
};

// Enumerates the group over a finite field and tabulates ·_A; group axioms
// are verified on the finished table.
MatrixTable enumerate_group(const HomotopeGroupSpec& spec, uint64_t limit = 1u << 20);

// The semigroup hull (defining equation without the invertibility condition);
// closure under ·_A is verified, 0 is the unit.
MatrixTable semigroup_hull(const HomotopeGroupSpec& spec, uint64_t limit = 1u << 20);

std::vector<Matrix> enumerate_matrices(const Ring& ring, size_t rows, size_t cols,
                                       uint64_t limit = 1u << 20);

// --- orbit classification -----------------------------------------------------

enum class ParameterFamily : uint8_t { sym, asym, herm };

struct Orbit {
    Matrix representative;  // first member in enumeration order
    uint64_t size = 0;
};
struct OrbitReport {
    ParameterFamily family;
    size_t n;
    std::vector<Orbit> orbits;
};

// Partition of the parameter space under A -> g A g^T (herm: g A conj(g)^T)
// via a union-find sweep over GL generators.
OrbitReport classify_orbits(ParameterFamily family, size_t n, const Ring& ring,
                            uint64_t limit = 1u << 20);

// --- associative pair / triple structures -------------------------------------

// <u, v, w>^+ = Gamma(u, o+, v, o-, w): u, w in C_{o-}, v in C_{o+};
// sign = -1 gives the dual configuration.
Subspace pair_product(const GeometryContext& ctx, const Subspace& u, const Subspace& v,
                      const Subspace& w, int sign = +1);

// <x y z> = Gamma(x, o+, tau(y), o-, z) for a base point exchanging tau.
Subspace triple_product_second_kind(const GeometryContext& ctx, const InvolutionMap& tau,
                                    const Subspace& x, const Subspace& y, const Subspace& z);

// Chart form of the algebra involution induced by a unital base point
// preserving tau: X -> chart(tau(graph X)).
Matrix restriction_involution(const GeometryContext& ctx, const InvolutionMap& tau,
                              const Matrix& x_chart);

}  // namespace grastor
