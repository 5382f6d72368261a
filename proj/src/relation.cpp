#include "grastor/relation.hpp"

#include "grastor/error.hpp"

namespace grastor {

namespace {

// Copy block [j0, j0+len) of each basis row times +/-1 into the system or
// map matrix columns [c0, c0+k): small helper for stacked constraint setups.
void put_block(Matrix& target, const Matrix& basis, size_t j0, size_t len, size_t c0, bool negate) {
    for (size_t i = 0; i < basis.rows(); ++i)
        for (size_t j = 0; j < len; ++j) {
            Scalar v = basis.at(i, j0 + j);
            target.at(j, c0 + i) = negate ? -v : v;
        }
}

}  // namespace

LinearRelation::LinearRelation(size_t half_dim, Subspace carrier)
    : n_(half_dim), carrier_(std::move(carrier)) {
    if (carrier_.ambient_dim() != 2 * n_)
        throw DimensionError("relation carrier must live in K^{2n}");
}

LinearRelation LinearRelation::identity(const Ring& ring, size_t n) {
    Matrix rows(ring, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        rows.at(i, i) = Scalar::one(ring);
        rows.at(i, n + i) = Scalar::one(ring);
    }
    return LinearRelation(n, Subspace::from_span(rows));
}

LinearRelation LinearRelation::graph(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("graph expects an endomorphism");
    size_t n = m.rows();
    Matrix rows(m.ring(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        rows.at(i, i) = Scalar::one(m.ring());
        for (size_t j = 0; j < n; ++j) rows.at(i, n + j) = m.at(j, i);  // (e_i, m e_i)
    }
    return LinearRelation(n, Subspace::from_span(rows));
}

LinearRelation LinearRelation::from_carrier(const Subspace& carrier) {
    if (carrier.ambient_dim() % 2 != 0) throw DimensionError("carrier ambient must be even");
    return LinearRelation(carrier.ambient_dim() / 2, carrier);
}

bool LinearRelation::is_graph() const {
    RelationParts p = rel_parts(*this);
    return p.domain.dim() == n_ && p.indefiniteness.dim() == 0;
}

Matrix LinearRelation::as_matrix() const {
    if (!is_graph()) throw NotAdmissible("relation is not the graph of an operator");
    // rows (v | w) with v running through a basis of W determine w = M v
    const Matrix& b = carrier_.basis();
    Matrix v_part = b.block(0, 0, b.rows(), n_);
    Matrix w_part = b.block(0, n_, b.rows(), n_);
    // M v^T = w^T for each row: M = w_part^T · (v_part^T)^{-1}
    return w_part.transpose() * v_part.transpose().inverse();
}

RelationParts rel_parts(const LinearRelation& f) {
    size_t n = f.half_dim();
    const Matrix& b = f.carrier().basis();
    const Ring& ring = f.ring();
    RelationParts p;
    p.domain = Subspace::from_span(b.block(0, 0, b.rows(), n));
    p.image = Subspace::from_span(b.block(0, n, b.rows(), n));

    // kernel: carrier ∩ (W × 0), read in the first block
    Matrix w0(ring, n, 2 * n);
    for (size_t i = 0; i < n; ++i) w0.at(i, i) = Scalar::one(ring);
    Subspace k2n = meet(f.carrier(), Subspace::from_span(w0));
    p.kernel = Subspace::from_span(k2n.basis().block(0, 0, k2n.dim(), n));

    Matrix w1(ring, n, 2 * n);
    for (size_t i = 0; i < n; ++i) w1.at(i, n + i) = Scalar::one(ring);
    Subspace i2n = meet(f.carrier(), Subspace::from_span(w1));
    p.indefiniteness = Subspace::from_span(i2n.basis().block(0, n, i2n.dim(), n));
    return p;
}

LinearRelation compose(const LinearRelation& g, const LinearRelation& f) {
    if (g.half_dim() != f.half_dim() || !(g.ring() == f.ring()))
        throw DimensionError("compose: relation mismatch");
    size_t n = f.half_dim();
    const Ring& ring = f.ring();
    size_t kf = f.dim(), kg = g.dim();
    // unknowns (c, d): output block of c·B_f equals input block of d·B_g
    Matrix system(ring, n, kf + kg);
    put_block(system, f.carrier().basis(), n, n, 0, false);
    put_block(system, g.carrier().basis(), 0, n, kf, true);
    // solution ↦ (input of f | output of g)
    Matrix map(ring, 2 * n, kf + kg);
    put_block(map, f.carrier().basis(), 0, n, 0, false);
    for (size_t i = 0; i < kg; ++i)
        for (size_t j = 0; j < n; ++j) map.at(n + j, kf + i) = g.carrier().basis().at(i, n + j);
    return LinearRelation(n, solve_and_map(system, map));
}

LinearRelation rel_inverse(const LinearRelation& f) {
    size_t n = f.half_dim();
    const Matrix& b = f.carrier().basis();
    return LinearRelation(n, Subspace::from_span(
                                 b.block(0, n, b.rows(), n).hcat(b.block(0, 0, b.rows(), n))));
}

Subspace rel_apply(const LinearRelation& f, const Subspace& z) {
    if (z.ambient_dim() != f.half_dim()) throw DimensionError("rel_apply: ambient mismatch");
    size_t n = f.half_dim();
    const Ring& ring = f.ring();
    size_t kz = z.dim(), kf = f.dim();
    // unknowns (c, d): c·B_z = input block of d·B_f; keep the output block
    Matrix system(ring, n, kz + kf);
    put_block(system, z.basis(), 0, n, 0, false);
    put_block(system, f.carrier().basis(), 0, n, kz, true);
    Matrix map(ring, n, kz + kf);
    for (size_t i = 0; i < kf; ++i)
        for (size_t j = 0; j < n; ++j) map.at(j, kz + i) = f.carrier().basis().at(i, n + j);
    return solve_and_map(system, map);
}

LinearRelation rel_diff(const LinearRelation& f, const LinearRelation& g) {
    if (g.half_dim() != f.half_dim() || !(g.ring() == f.ring()))
        throw DimensionError("rel_diff: relation mismatch");
    size_t n = f.half_dim();
    const Ring& ring = f.ring();
    size_t kf = f.dim(), kg = g.dim();
    // unknowns (c, d): input blocks agree; result (ξ | α − β)
    Matrix system(ring, n, kf + kg);
    put_block(system, f.carrier().basis(), 0, n, 0, false);
    put_block(system, g.carrier().basis(), 0, n, kf, true);
    Matrix map(ring, 2 * n, kf + kg);
    put_block(map, f.carrier().basis(), 0, n, 0, false);
    for (size_t i = 0; i < kf; ++i)
        for (size_t j = 0; j < n; ++j) map.at(n + j, i) = f.carrier().basis().at(i, n + j);
    for (size_t i = 0; i < kg; ++i)
        for (size_t j = 0; j < n; ++j) map.at(n + j, kf + i) = -g.carrier().basis().at(i, n + j);
    return LinearRelation(n, solve_and_map(system, map));
}

LinearRelation rel_plus_identity(const LinearRelation& f) {
    // 1 + F = A·F for A(v, w) = (v, v + w)
    size_t n = f.half_dim();
    const Matrix& b = f.carrier().basis();
    Matrix in = b.block(0, 0, b.rows(), n);
    Matrix out = b.block(0, n, b.rows(), n);
    return LinearRelation(n, Subspace::from_span(in.hcat(in + out)));
}

LinearRelation gen_projection(const Subspace& x, const Subspace& a) {
    if (x.ambient_dim() != a.ambient_dim() || !(x.ring() == a.ring()))
        throw DimensionError("gen_projection: ambient mismatch");
    size_t n = x.ambient_dim();
    // rows (u | u) for u in x and (v | 0) for v in a
    Matrix rows = x.basis().hcat(x.basis()).vcat(
        a.basis().hcat(Matrix::zero(a.ring(), a.dim(), n)));
    return LinearRelation(n, Subspace::from_span(rows));
}

std::pair<Subspace, Subspace> rel_conjugate(const LinearRelation& f, const Subspace& x,
                                            const Subspace& a) {
    LinearRelation lhs = compose(f, compose(gen_projection(x, a), rel_inverse(f)));
    Subspace fx = rel_apply(f, x);
    Subspace fa = rel_apply(f, a);
    if (lhs != gen_projection(fx, fa))
        throw InvariantViolation("conjugation lemma failed: F p F^{-1} != P^{F(a)}_{F(x)}");
    return {fx, fa};
}

LinearRelation rel_adjoint(const LinearRelation& f, const FormDescriptor& beta) {
    if (beta.ambient_dim() != f.half_dim()) throw DimensionError("rel_adjoint: ambient mismatch");
    size_t n = f.half_dim();
    const Ring& ring = f.ring();
    // Omega((u,v),(u',v')) = beta(u,v') - beta(v,u') has block Gram
    // G = [[0, B], [-B, 0]]; F* = {p' : conj(p') G p^T = 0 for p in F},
    // i.e. the kernel of rows conj(r · G^T) over the carrier basis r.
    Matrix g(ring, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            g.at(i, n + j) = beta.gram().at(i, j);
            g.at(n + i, j) = -beta.gram().at(i, j);
        }
    Matrix eq =
        (f.carrier().basis() * g.transpose()).map([](const Scalar& s) { return s.conj(); });
    return LinearRelation(n, kernel_space(eq));
}

}  // namespace grastor
