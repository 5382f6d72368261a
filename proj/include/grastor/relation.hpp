#pragma once

#include "grastor/form.hpp"
#include "grastor/subspace.hpp"

namespace grastor {

// Linear relation F in W = K^n: a subspace of K^{2n} with coordinates split
// as (input | output). compose(G, F) means "first F, then G", matching the
// operator notation G∘F; this is the single composition-order convention of
// the calculus.
class LinearRelation {
public:
    LinearRelation() = default;
    LinearRelation(size_t half_dim, Subspace carrier);

    static LinearRelation identity(const Ring& ring, size_t n);
    static LinearRelation graph(const Matrix& m);  // {(v, m v)}
    static LinearRelation from_carrier(const Subspace& carrier_in_2n);

    size_t half_dim() const { return n_; }
    const Subspace& carrier() const { return carrier_; }
    const Ring& ring() const { return carrier_.ring(); }
    size_t dim() const { return carrier_.dim(); }

    bool is_graph() const;           // single valued and everywhere defined
    Matrix as_matrix() const;        // requires is_graph()

    friend bool operator==(const LinearRelation& x, const LinearRelation& y) {
        return x.n_ == y.n_ && x.carrier_ == y.carrier_;
    }
    friend bool operator!=(const LinearRelation& x, const LinearRelation& y) { return !(x == y); }
    bool leq(const LinearRelation& other) const { return carrier_.leq(other.carrier_); }

private:
    size_t n_ = 0;
    Subspace carrier_;
};

struct RelationParts {
    Subspace domain, image, kernel, indefiniteness;
};
RelationParts rel_parts(const LinearRelation& f);

LinearRelation compose(const LinearRelation& g, const LinearRelation& f);  // g ∘ f
LinearRelation rel_inverse(const LinearRelation& f);
Subspace rel_apply(const LinearRelation& f, const Subspace& z);
LinearRelation rel_diff(const LinearRelation& f, const LinearRelation& g);  // f - g
LinearRelation rel_plus_identity(const LinearRelation& f);  // 1 + f

// Generalized projection P^a_x = {(ζ, ω) : ω ∈ x, ω − ζ ∈ a}; image x,
// kernel a, no transversality required. Built directly from basis vectors,
// independently of the solver path, so the two can cross-check each other.
LinearRelation gen_projection(const Subspace& x, const Subspace& a);

// Asserts F ∘ P^a_x ∘ F^{-1} = P^{F(a)}_{F(x)} and returns (F(x), F(a));
// a failure is an implementation bug, reported as InvariantViolation.
std::pair<Subspace, Subspace> rel_conjugate(const LinearRelation& f, const Subspace& x,
                                            const Subspace& a);

// Adjoint relation w.r.t. a nondegenerate form: the orthocomplement of the
// carrier for Omega((u,v),(u',v')) = beta(u,v') - beta(v,u') on W ⊕ W.
LinearRelation rel_adjoint(const LinearRelation& f, const FormDescriptor& beta);

}  // namespace grastor
