#include "grastor/geometry.hpp"

#include "grastor/error.hpp"

namespace grastor {

GeometryContext GeometryContext::standard(const Ring& ring, size_t half_n) {
    GeometryContext ctx(ring, 2 * half_n);
    Matrix op(ring, half_n, 2 * half_n), om(ring, half_n, 2 * half_n), di(ring, half_n, 2 * half_n);
    for (size_t i = 0; i < half_n; ++i) {
        op.at(i, i) = Scalar::one(ring);
        om.at(i, half_n + i) = Scalar::one(ring);
        di.at(i, i) = Scalar::one(ring);
        di.at(i, half_n + i) = Scalar::one(ring);
    }
    ctx.with_base_pair(Subspace::from_span(op), Subspace::from_span(om));
    ctx.with_unit(Subspace::from_span(di));
    return ctx;
}

GeometryContext& GeometryContext::with_base_pair(Subspace o_plus, Subspace o_minus) {
    if (!is_transversal(o_plus, o_minus)) throw NotTransversal("base pair must be transversal");
    o_plus_ = std::move(o_plus);
    o_minus_ = std::move(o_minus);
    return *this;
}

GeometryContext& GeometryContext::with_unit(Subspace e) {
    if (!has_base_pair()) throw MissingBasePoint("unit needs a base pair");
    if (!is_transversal(e, *o_plus_) || !is_transversal(e, *o_minus_))
        throw NotTransversal("unit must be transversal to both base points");
    e_ = std::move(e);
    return *this;
}

const Subspace& GeometryContext::o_plus() const {
    if (!o_plus_) throw MissingBasePoint("context has no base pair");
    return *o_plus_;
}
const Subspace& GeometryContext::o_minus() const {
    if (!o_minus_) throw MissingBasePoint("context has no base pair");
    return *o_minus_;
}
const Subspace& GeometryContext::unit() const {
    if (!e_) throw MissingBasePoint("context has no unit");
    return *e_;
}

// ---------------------------------------------------------------------------
// Gamma

Matrix middle_matrix(const Subspace& x, const Subspace& a, const Subspace& b, const Subspace& z) {
    if (!is_transversal(x, a) || !is_transversal(z, b))
        throw NotAdmissible("M_{xabz} needs x ⊤ a and z ⊤ b");
    return projection_matrix(x, a) - projection_matrix(b, z);
}

Subspace gamma_restricted(const Subspace& x, const Subspace& a, const Subspace& y,
                          const Subspace& b, const Subspace& z, bool strict_y) {
    if (!is_transversal(x, a) || !is_transversal(x, b) || !is_transversal(z, a) ||
        !is_transversal(z, b))
        throw NotAdmissible("restricted Gamma needs x, z in C_{ab}");
    if (strict_y && (!is_transversal(y, a) || !is_transversal(y, b)))
        throw NotAdmissible("restricted Gamma needs y in C_{ab} (strict mode)");
    return apply(middle_matrix(x, a, b, z), y);
}

Subspace gamma_oracle(const Subspace& x, const Subspace& a, const Subspace& y, const Subspace& b,
                      const Subspace& z) {
    const size_t n = x.ambient_dim();
    const Ring& ring = x.ring();
    if (a.ambient_dim() != n || y.ambient_dim() != n || b.ambient_dim() != n ||
        z.ambient_dim() != n)
        throw DimensionError("gamma: ambient mismatch");
    // unknowns: coefficients of ξ, α, η, β, ζ in the five bases;
    // constraints: α − η − ξ = 0 and ζ + α − ξ − β = 0 (each n equations);
    // result ω = ζ + α.
    const size_t kx = x.dim(), ka = a.dim(), ky = y.dim(), kb = b.dim(), kz = z.dim();
    const size_t cols = kx + ka + ky + kb + kz;
    Matrix system(ring, 2 * n, cols);
    auto fill = [&](const Subspace& s, size_t col0, size_t eq0, bool neg) {
        for (size_t i = 0; i < s.dim(); ++i)
            for (size_t j = 0; j < n; ++j) {
                Scalar v = s.basis().at(i, j);
                system.at(eq0 + j, col0 + i) = neg ? -v : v;
            }
    };
    // eq block 1: α − η − ξ = 0
    fill(x, 0, 0, true);
    fill(a, kx, 0, false);
    fill(y, kx + ka, 0, true);
    // eq block 2: ζ + α − ξ − β = 0
    fill(x, 0, n, true);
    fill(a, kx, n, false);
    fill(b, kx + ka + ky, n, true);
    fill(z, kx + ka + ky + kb, n, false);

    Matrix map(ring, n, cols);  // ω = ζ + α
    for (size_t i = 0; i < ka; ++i)
        for (size_t j = 0; j < n; ++j) map.at(j, kx + i) = a.basis().at(i, j);
    for (size_t i = 0; i < kz; ++i)
        for (size_t j = 0; j < n; ++j) map.at(j, kx + ka + ky + kb + i) = z.basis().at(i, j);
    return solve_and_map(system, map);
}

LinearRelation middle_op(const Subspace& x, const Subspace& a, const Subspace& b,
                         const Subspace& z) {
    return rel_diff(gen_projection(x, a), gen_projection(b, z));
}

LinearRelation left_op(const Subspace& x, const Subspace& a, const Subspace& y,
                       const Subspace& b) {
    LinearRelation pxa = gen_projection(a, x);  // P^x_a: image a, kernel x
    LinearRelation pby = gen_projection(y, b);  // P^b_y: image y, kernel b
    return rel_diff(LinearRelation::identity(x.ring(), x.ambient_dim()), compose(pxa, pby));
}

Subspace gamma_global(const Subspace& x, const Subspace& a, const Subspace& y, const Subspace& b,
                      const Subspace& z) {
    return rel_apply(left_op(x, a, y, b), z);
}

Subspace pi_scalar(const Subspace& x, const Subspace& a, const Subspace& y, const Scalar& s) {
    if (!is_transversal(x, a) || !is_transversal(y, a))
        throw NotAdmissible("Pi_s needs x ⊤ a and y ⊤ a");
    Matrix m = projection_matrix(a, x).scaled(s) + projection_matrix(x, a);
    return apply(m, y);
}

// ---------------------------------------------------------------------------
// base point operators

Matrix neg_matrix(const GeometryContext& ctx) {
    return middle_matrix(ctx.o_plus(), ctx.o_minus(), ctx.o_minus(), ctx.o_plus());
}

Matrix inversion_j(const GeometryContext& ctx) {
    return middle_matrix(ctx.unit(), ctx.o_plus(), ctx.o_minus(), ctx.unit());
}

Matrix translation_matrix(const GeometryContext& ctx, const Subspace& a) {
    if (!is_transversal(ctx.o_plus(), a))
        throw NotAdmissible("translation needs a ⊤ o+ (a in the minus chart)");
    return middle_matrix(ctx.o_plus(), a, ctx.o_minus(), ctx.o_plus()) * neg_matrix(ctx);
}

Matrix dilation_matrix(const GeometryContext& ctx, const Scalar& lambda) {
    if (!lambda.is_invertible()) throw NotInvertible("dilation scalar must be invertible");
    return projection_matrix(ctx.o_minus(), ctx.o_plus()).scaled(lambda) +
           projection_matrix(ctx.o_plus(), ctx.o_minus());
}

Matrix cayley_matrix(const GeometryContext& ctx) {
    if (Scalar::of(ctx.ring(), 2).is_zero())
        throw CharacteristicTwo("the Cayley transform needs 2 invertible");
    // R = (1 -1; 1 1) in the frame W = o+ ⊕ o+, the second copy identified
    // through e: for u in o+ let phi(u) be the unique element of o- with
    // u + phi(u) in e. Columns of the frame are (basis of o+, phi(basis)).
    const Subspace& op = ctx.o_plus();
    const Subspace& om = ctx.o_minus();
    const Subspace& e = ctx.unit();
    size_t m = op.dim(), n = ctx.ambient_dim();
    if (om.dim() != m) throw NotAdmissible("Cayley needs dim o+ = dim o-");
    // phi = -P^e_{o-} restricted to o+ (u = ê - w, ê in e, w in o-)
    Matrix phi = -projection_matrix(om, e);
    Matrix frame(ctx.ring(), n, n);  // columns: u_i then phi(u_i)
    Matrix opb_t = op.basis().transpose();
    Matrix phi_opb_t = phi * opb_t;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            frame.at(i, j) = opb_t.at(i, j);
            frame.at(i, m + j) = phi_opb_t.at(i, j);
        }
    // the classical Cayley block matrix (1 -1; 1 1) acts on row vectors;
    // under the column-action convention the same operator is its transpose
    Matrix r_block(ctx.ring(), n, n);
    Scalar one = Scalar::one(ctx.ring());
    for (size_t j = 0; j < m; ++j) {
        r_block.at(j, j) = one;
        r_block.at(j, m + j) = one;
        r_block.at(m + j, j) = -one;
        r_block.at(m + j, m + j) = one;
    }
    return frame * r_block * frame.inverse();
}

// ---------------------------------------------------------------------------
// charts

// Charts follow the library's row-vector reading: x ⊤ o- is the row span of
// (basis(o+) + X · basis(o-)), i.e. {v + v X : v ∈ o+} with v a row. Under
// this identification the algebra product of the geometry is ordinary matrix
// multiplication (the column reading would give the opposite algebra).
Matrix chart_plus(const GeometryContext& ctx, const Subspace& x) {
    const Subspace& op = ctx.o_plus();
    const Subspace& om = ctx.o_minus();
    if (!is_transversal(x, om)) throw NotAdmissible("chart_plus needs x ⊤ o-");
    size_t m = op.dim(), n = ctx.ambient_dim();
    (void)n;
    Matrix frame = op.basis().vcat(om.basis()).transpose();  // n x n
    Matrix coords = frame.inverse() * x.basis().transpose(); // (o+ | o-) coords of basis of x
    Matrix top = coords.block(0, 0, m, x.dim());
    Matrix bottom = coords.block(m, 0, om.dim(), x.dim());
    return (bottom * top.inverse()).transpose();
}

Subspace graph_plus(const GeometryContext& ctx, const Matrix& x_chart) {
    const Subspace& op = ctx.o_plus();
    const Subspace& om = ctx.o_minus();
    size_t m = op.dim();
    if (x_chart.rows() != m || x_chart.cols() != om.dim())
        throw DimensionError("chart shape mismatch");
    Matrix rows = op.basis() + x_chart * om.basis();
    return Subspace::from_span(rows);
}

Matrix chart_minus(const GeometryContext& ctx, const Subspace& a) {
    GeometryContext swapped(ctx.ring(), ctx.ambient_dim());
    swapped.with_base_pair(ctx.o_minus(), ctx.o_plus());
    return chart_plus(swapped, a);
}

Subspace graph_minus(const GeometryContext& ctx, const Matrix& a_chart) {
    GeometryContext swapped(ctx.ring(), ctx.ambient_dim());
    swapped.with_base_pair(ctx.o_minus(), ctx.o_plus());
    return graph_plus(swapped, a_chart);
}

// ---------------------------------------------------------------------------
// involutions

InvolutionMap InvolutionMap::orthocomplement_of(const FormDescriptor& beta) {
    return InvolutionMap(beta, Matrix::identity(beta.ring(), beta.ambient_dim()));
}

InvolutionMap InvolutionMap::dual(const GeometryContext& ctx) const {
    if (!is_base_point_preserving(ctx) && !is_base_point_exchanging(ctx))
        throw NotCompatible("dual involution needs a base point preserving or exchanging map");
    return InvolutionMap(form_, neg_matrix(ctx) * pre_);
}

InvolutionMap InvolutionMap::tilde(const GeometryContext& ctx) const {
    if (!is_unital(ctx) || !is_base_point_preserving(ctx))
        throw NotCompatible("tilde involution needs a unital base point preserving map");
    return InvolutionMap(form_, inversion_j(ctx) * pre_);
}

Subspace InvolutionMap::apply(const Subspace& x) const {
    return grastor::apply(pre_, orthocomplement(form_, x));
}

bool InvolutionMap::is_base_point_preserving(const GeometryContext& ctx) const {
    return apply(ctx.o_plus()) == ctx.o_plus() && apply(ctx.o_minus()) == ctx.o_minus();
}

bool InvolutionMap::is_base_point_exchanging(const GeometryContext& ctx) const {
    return apply(ctx.o_plus()) == ctx.o_minus() && apply(ctx.o_minus()) == ctx.o_plus();
}

bool InvolutionMap::is_unital(const GeometryContext& ctx) const {
    return apply(ctx.unit()) == ctx.unit();
}

// ---------------------------------------------------------------------------
// torsors and groups

bool LagrangianTorsor::member(const Subspace& x) const {
    for (const auto& el : elements)
        if (el == x) return true;
    return false;
}

Subspace LagrangianTorsor::ternary(const Subspace& x, const Subspace& y,
                                   const Subspace& z) const {
    return gamma_restricted(x, a, y, b, z);
}

LagrangianTorsor lagrangian_torsor(const GeometryContext& ctx, const InvolutionMap& tau,
                                   const Subspace& a, uint64_t limit) {
    LagrangianTorsor t;
    t.a = a;
    t.b = tau.apply(a);
    for (const auto& x : enumerate_subspaces(ctx.ring(), ctx.ambient_dim(), limit)) {
        // G(tau, a) = U_a ∩ Y: fixed points transversal to a (Lemma clue ii)
        if (tau.apply(x) == x && is_transversal(x, a)) t.elements.push_back(x);
    }
    return t;
}

namespace {

SubspaceGroup build_group(const std::vector<Subspace>& members, const Subspace& a,
                          const Subspace& o, const Subspace& b) {
    SubspaceGroup g;
    g.a = a;
    g.o = o;
    g.b = b;
    g.elements = members;
    g.origin = g.index_of(o);
    size_t n = members.size();
    g.table.assign(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Subspace prod = gamma_restricted(members[i], a, o, b, members[j]);
            size_t k = 0;
            while (k < n && !(members[k] == prod)) ++k;
            if (k == n)
                throw InvariantViolation("group is not closed under Gamma(x, a, o, b, z)");
            g.table[i][j] = static_cast<uint32_t>(k);
        }
    // group axioms on the finished table
    for (size_t i = 0; i < n; ++i)
        if (g.table[i][g.origin] != i || g.table[g.origin][i] != i)
            throw InvariantViolation("origin is not a unit of the group table");
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n; ++j)
            if (g.table[i][j] == g.origin && g.table[j][i] == g.origin) has_inverse = true;
        if (!has_inverse) throw InvariantViolation("group table element without inverse");
    }
    return g;
}

}  // namespace

size_t SubspaceGroup::index_of(const Subspace& x) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == x) return i;
    throw NotInGroup("subspace is not a group element");
}

SubspaceGroup tau_unitary_group(const GeometryContext& ctx, const InvolutionMap& tau,
                                const Subspace& a, const Subspace& o, const Subspace& b,
                                uint64_t limit) {
    if (!(tau.apply(a) == a) || !(tau.apply(o) == o) || !(tau.apply(b) == b))
        throw NotCompatible("tau-unitary group needs a, o, b fixed by tau");
    if (!is_transversal(o, a) || !is_transversal(o, b))
        throw NotAdmissible("origin must lie in U_{ab}");
    std::vector<Subspace> members;
    for (const auto& x : enumerate_subspaces(ctx.ring(), ctx.ambient_dim(), limit)) {
        if (!is_transversal(x, a) || !is_transversal(x, b)) continue;
        Subspace inv = apply(middle_matrix(o, a, b, o), x);
        if (tau.apply(x) == inv) members.push_back(x);
    }
    return build_group(members, a, o, b);
}

SubspaceGroup torsor_as_group(const GeometryContext& ctx, const InvolutionMap& tau,
                              const Subspace& a, const Subspace& o, uint64_t limit) {
    LagrangianTorsor t = lagrangian_torsor(ctx, tau, a, limit);
    if (!t.member(o)) throw NotInGroup("origin is not a torsor element");
    return build_group(t.elements, t.a, o, t.b);
}

ConjugationReport conjug_isomorphism(const GeometryContext& ctx, const InvolutionMap& tau,
                                     const Subspace& a, uint64_t limit) {
    if (Scalar::of(ctx.ring(), 2).is_zero())
        throw CharacteristicTwo("the chart identification 2a needs 2 invertible");
    if (!tau.is_base_point_preserving(ctx))
        throw NotCompatible("Theorem conjug needs a base point preserving involution");
    if (!(tau.apply(a) == a)) throw NotCompatible("parameter a must be tau-fixed");
    if (!is_transversal(a, ctx.o_minus()) || !is_transversal(ctx.o_plus(), a))
        throw NotAdmissible("parameter a must be transversal to both base points");

    ConjugationReport rep;
    rep.translation = translation_matrix(ctx, a);
    rep.two_a = apply(rep.translation, a);
    InvolutionMap tau_prime = tau.dual(ctx);
    rep.source = torsor_as_group(ctx, tau_prime, a, ctx.o_plus(), limit);
    rep.target = tau_unitary_group(ctx, tau, rep.two_a, ctx.o_plus(), ctx.o_minus(), limit);
    if (rep.source.order() != rep.target.order())
        throw InvariantViolation("conjug: group orders differ");

    rep.element_map.resize(rep.source.order());
    for (size_t i = 0; i < rep.source.order(); ++i) {
        Subspace image = apply(rep.translation, rep.source.elements[i]);
        rep.element_map[i] = static_cast<uint32_t>(rep.target.index_of(image));
    }
    // homomorphism check on the full tables
    for (size_t i = 0; i < rep.source.order(); ++i)
        for (size_t j = 0; j < rep.source.order(); ++j) {
            uint32_t lhs = rep.element_map[rep.source.table[i][j]];
            uint32_t rhs = rep.target.table[rep.element_map[i]][rep.element_map[j]];
            if (lhs != rhs) throw InvariantViolation("conjug: translation is not a homomorphism");
        }
    return rep;
}

}  // namespace grastor
