#pragma once

#include <optional>
#include <vector>

#include "grastor/relation.hpp"

namespace grastor {

// Scope for base-point dependent constructions: ambient K^n with an optional
// transversal base pair (o+, o-) and optional unit e making (o+, e, o-) a
// transversal triple.
class GeometryContext {
public:
    GeometryContext(const Ring& ring, size_t n) : ring_(ring), n_(n) {}

    // K^{2m} with o+ = first block, o- = second block, e = diagonal.
    static GeometryContext standard(const Ring& ring, size_t half_n);

    GeometryContext& with_base_pair(Subspace o_plus, Subspace o_minus);
    GeometryContext& with_unit(Subspace e);

    const Ring& ring() const { return ring_; }
    size_t ambient_dim() const { return n_; }
    const Subspace& o_plus() const;
    const Subspace& o_minus() const;
    const Subspace& unit() const;
    bool has_base_pair() const { return o_plus_.has_value(); }
    bool has_unit() const { return e_.has_value(); }

private:
    Ring ring_;
    size_t n_;
    std::optional<Subspace> o_plus_, o_minus_, e_;
};

// --- the product map -------------------------------------------------------

// Restricted Gamma(x,a,y,b,z) = M_{xabz}(y) with M = P^a_x - P^z_b as an
// operator; requires x, z (and by default y) in C_{ab}.
Subspace gamma_restricted(const Subspace& x, const Subspace& a, const Subspace& y,
                          const Subspace& b, const Subspace& z, bool strict_y = true);

// Global Gamma by the defining set formula
// { ω : ω = ζ + α = ζ + η + ξ = ξ + β, ξ∈x, α∈a, η∈y, β∈b, ζ∈z };
// this is the acceptance reference.
Subspace gamma_oracle(const Subspace& x, const Subspace& a, const Subspace& y, const Subspace& b,
                      const Subspace& z);

// Global Gamma through the relation calculus: (1 - P^x_a P^b_y)(z).
Subspace gamma_global(const Subspace& x, const Subspace& a, const Subspace& y, const Subspace& b,
                      const Subspace& z);

// M_{xabz} = P^a_x - P^z_b as an operator (admissible tuples only).
Matrix middle_matrix(const Subspace& x, const Subspace& a, const Subspace& b, const Subspace& z);

// The linear relations M_{xabz} = P^a_x - P^z_b and L_{xayb} = 1 - P^x_a P^b_y.
LinearRelation middle_op(const Subspace& x, const Subspace& a, const Subspace& b,
                         const Subspace& z);
LinearRelation left_op(const Subspace& x, const Subspace& a, const Subspace& y,
                       const Subspace& b);

// Pi_s(x, a, y) = (s P^x_a + P^a_x)(y); restricted (x ⊤ a, y ⊤ a).
Subspace pi_scalar(const Subspace& x, const Subspace& a, const Subspace& y, const Scalar& s);

// --- base point operators ---------------------------------------------------

// M_{o+ o- o- o+}: minus one on both affine parts.
Matrix neg_matrix(const GeometryContext& ctx);
// j = M_{e o+ o- e}: inversion, exchanges o+ and o-, fixes e.
Matrix inversion_j(const GeometryContext& ctx);
// Translation by a in the abelian group (C_{o+}, o-): requires a ⊤ o+.
Matrix translation_matrix(const GeometryContext& ctx, const Subspace& a);
// delta^lambda = lambda P^{o+}_{o-} + P^{o-}_{o+}.
Matrix dilation_matrix(const GeometryContext& ctx, const Scalar& lambda);
// The real Cayley transform R = (1 -1; 1 1) in the (o+, e) block frame.
Matrix cayley_matrix(const GeometryContext& ctx);

// --- affine charts ----------------------------------------------------------

// x ⊤ o- is the graph {v + Xv : v ∈ o+} of X : o+ → o-; these convert both
// ways in the standard block frame.
Matrix chart_plus(const GeometryContext& ctx, const Subspace& x);
Subspace graph_plus(const GeometryContext& ctx, const Matrix& x_chart);
Matrix chart_minus(const GeometryContext& ctx, const Subspace& a);
Subspace graph_minus(const GeometryContext& ctx, const Matrix& a_chart);

// --- involutions -------------------------------------------------------------

// Involution of the geometry, realized as x ↦ g · (orthocomplement_beta(x)).
// Closed under the two constructors dual() and tilde() only, which keeps the
// order-2 property auditable.
class InvolutionMap {
public:
    static InvolutionMap orthocomplement_of(const FormDescriptor& beta);
    InvolutionMap dual(const GeometryContext& ctx) const;    // tau' = M_{o+o-o-o+} ∘ tau
    InvolutionMap tilde(const GeometryContext& ctx) const;   // tau~ = j ∘ tau

    Subspace apply(const Subspace& x) const;
    const FormDescriptor& form() const { return form_; }
    const Matrix& pre() const { return pre_; }

    bool is_base_point_preserving(const GeometryContext& ctx) const;
    bool is_base_point_exchanging(const GeometryContext& ctx) const;
    bool is_unital(const GeometryContext& ctx) const;  // additionally fixes e

private:
    InvolutionMap(FormDescriptor form, Matrix pre) : form_(std::move(form)), pre_(std::move(pre)) {}
    FormDescriptor form_;
    Matrix pre_;
};

// --- torsors and groups ------------------------------------------------------

// G(tau; a) = U_{a, tau(a)} ∩ Y, materialized; ternary law
// (x y z) = Gamma(x, a, y, tau(a), z).
struct LagrangianTorsor {
    Subspace a, b;  // b = tau(a)
    std::vector<Subspace> elements;
    bool member(const Subspace& x) const;
    Subspace ternary(const Subspace& x, const Subspace& y, const Subspace& z) const;
};
LagrangianTorsor lagrangian_torsor(const GeometryContext& ctx, const InvolutionMap& tau,
                                   const Subspace& a, uint64_t limit = default_enumeration_limit());

// U(tau; a, o, b) = {x in U_{ab} : tau(x) = x^{-1}}, group with unit o and
// product x·z = Gamma(x, a, o, b, z); inverse M_{oabo}. Closure and the
// group axioms are checked during construction.
struct SubspaceGroup {
    Subspace a, o, b;
    std::vector<Subspace> elements;          // elements[origin] == o
    size_t origin = 0;
    std::vector<std::vector<uint32_t>> table;  // product indices
    size_t order() const { return elements.size(); }
    size_t index_of(const Subspace& x) const;
};
SubspaceGroup tau_unitary_group(const GeometryContext& ctx, const InvolutionMap& tau,
                                const Subspace& a, const Subspace& o, const Subspace& b,
                                uint64_t limit = default_enumeration_limit());

// Materialize the torsor G(tau; a) as a group with origin o (o must belong).
SubspaceGroup torsor_as_group(const GeometryContext& ctx, const InvolutionMap& tau,
                              const Subspace& a, const Subspace& o,
                              uint64_t limit = default_enumeration_limit());

// Verifies that t~_a maps G(tau'; a) isomorphically onto
// U(tau; t~_a(a), o+, o-); requires tau base point preserving, tau(a) = a,
// a transversal to both base points, char != 2.
struct ConjugationReport {
    Matrix translation;
    Subspace two_a;
    SubspaceGroup source, target;
    std::vector<uint32_t> element_map;  // source index -> target index
};
ConjugationReport conjug_isomorphism(const GeometryContext& ctx, const InvolutionMap& tau,
                                     const Subspace& a,
                                     uint64_t limit = default_enumeration_limit());

}  // namespace grastor
