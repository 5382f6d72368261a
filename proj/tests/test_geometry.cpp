#include <doctest.h>

#include "grastor/geometry.hpp"

using namespace grastor;

namespace {

Subspace span2(const Ring& r, std::vector<std::vector<long>> rows) {
    return Subspace::span_of_ints(r, 2, std::move(rows));
}

}  // namespace

TEST_CASE("restricted Gamma torsor laws and the operator M") {
    Ring gf2 = Ring::gf(2);
    Subspace e1 = span2(gf2, {{1, 0}}), e2 = span2(gf2, {{0, 1}}), diag = span2(gf2, {{1, 1}});
    // M = P^a_x - P^x_a = identity over GF(2) fixes y
    CHECK(gamma_restricted(e1, e2, diag, e2, e1) == diag);
    CHECK(middle_matrix(e1, e2, e2, e1) == Matrix::identity(gf2, 2));

    Ring gf3 = Ring::gf(3);
    auto all = enumerate_subspaces(gf3, 2);
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& x : all) {
                if (!is_transversal(x, a) || !is_transversal(x, b)) continue;
                for (const auto& y : all) {
                    if (!is_transversal(y, a) || !is_transversal(y, b)) continue;
                    CHECK(gamma_restricted(x, a, y, b, y) == x);
                    CHECK(gamma_restricted(y, a, y, b, x) == x);
                }
            }
    CHECK_THROWS_AS(gamma_restricted(e1, e1, e2, e2, e1), NotAdmissible);
}

TEST_CASE("gamma examples and the Newgamma identities") {
    Ring gf2 = Ring::gf(2);
    // Gamma(x, a, a, x, z) = x meet (a join z)
    Subspace x = Subspace::span_of_ints(gf2, 3, {{1, 0, 0}, {0, 1, 0}});
    Subspace a = Subspace::span_of_ints(gf2, 3, {{0, 0, 1}});
    Subspace z = Subspace::span_of_ints(gf2, 3, {{1, 0, 1}});
    Subspace expected = Subspace::span_of_ints(gf2, 3, {{1, 0, 0}});
    CHECK(gamma_global(x, a, a, x, z) == expected);
    CHECK(gamma_oracle(x, a, a, x, z) == expected);

    auto all = enumerate_subspaces(gf2, 3);
    for (const auto& xx : all)
        for (const auto& aa : all)
            for (const auto& zz : all) {
                CHECK(gamma_global(xx, aa, aa, xx, zz) == meet(xx, join(aa, zz)));
                // (P^a_x)^{-1}(z) = a join (x meet z)
                CHECK(rel_apply(rel_inverse(gen_projection(xx, aa)), zz) ==
                      join(aa, meet(xx, zz)));
            }
}

TEST_CASE("left and middle operators: inverses as image identities") {
    Ring gf2 = Ring::gf(2);
    auto all = enumerate_subspaces(gf2, 2);
    for (const auto& x : all)
        for (const auto& a : all)
            for (const auto& y : all)
                for (const auto& b : all) {
                    LinearRelation l = left_op(x, a, y, b);
                    LinearRelation li = rel_inverse(l);
                    LinearRelation l2 = left_op(y, a, x, b);
                    LinearRelation m = middle_op(x, a, b, y);
                    LinearRelation mi = rel_inverse(m);
                    LinearRelation m2 = middle_op(y, a, b, x);
                    for (const auto& z : all) {
                        CHECK(rel_apply(l, z) == gamma_global(x, a, y, b, z));
                        CHECK(rel_apply(li, z) == rel_apply(l2, z));
                        CHECK(rel_apply(mi, z) == rel_apply(m2, z));
                    }
                }
}

TEST_CASE("middle operator sign and inversion identities over GF(3)") {
    Ring gf3 = Ring::gf(3);
    auto all = enumerate_subspaces(gf3, 2);
    for (const auto& x : all)
        for (const auto& a : all) {
            if (!is_transversal(x, a)) continue;
            for (const auto& b : all)
                for (const auto& z : all) {
                    if (!is_transversal(z, b)) continue;
                    Matrix m = middle_matrix(x, a, b, z);
                    CHECK(m == -middle_matrix(a, x, z, b));
                    CHECK(m == middle_matrix(z, b, a, x));
                    if (is_transversal(x, b) && is_transversal(z, a)) {
                        CHECK(m.inverse() == middle_matrix(z, a, b, x));
                        CHECK(m.inverse() == middle_matrix(x, b, a, z));
                    }
                }
        }
}

TEST_CASE("Pi dilations") {
    Ring gf5 = Ring::gf(5);
    Subspace x = Subspace::span_of_ints(gf5, 2, {{1, 0}});
    Subspace a = Subspace::span_of_ints(gf5, 2, {{0, 1}});
    Subspace y = Subspace::span_of_ints(gf5, 2, {{1, 1}});
    CHECK(pi_scalar(x, a, y, Scalar::one(gf5)) == y);
    CHECK(pi_scalar(x, a, y, Scalar::zero(gf5)) == x);
    CHECK(pi_scalar(x, a, y, Scalar::of(gf5, 2)) ==
          Subspace::span_of_ints(gf5, 2, {{1, 2}}));
    CHECK_THROWS_AS(pi_scalar(x, x, y, Scalar::one(gf5)), NotAdmissible);
}

TEST_CASE("standard context operators") {
    Ring gf3 = Ring::gf(3);
    GeometryContext ctx = GeometryContext::standard(gf3, 1);
    CHECK(inversion_j(ctx) == Matrix::of_ints(gf3, {{0, 1}, {1, 0}}));
    CHECK(apply(inversion_j(ctx), ctx.o_plus()) == ctx.o_minus());
    CHECK(apply(inversion_j(ctx), ctx.unit()) == ctx.unit());
    CHECK(neg_matrix(ctx) == Matrix::of_ints(gf3, {{1, 0}, {0, -1}}));
    // t_0 = identity (zero of the minus chart is o-)
    CHECK(translation_matrix(ctx, ctx.o_minus()) == Matrix::identity(gf3, 2));
    // cayley at half_n = 1: the block matrix (1 -1; 1 1) read on row vectors,
    // i.e. its transpose under the column-action convention
    CHECK(cayley_matrix(ctx) == Matrix::of_ints(gf3, {{1, 1}, {-1, 1}}));
    // R sends (o-, e, o+, -e) to (e, o+, -e, o-)
    Matrix r = cayley_matrix(ctx);
    Subspace minus_e = apply(neg_matrix(ctx), ctx.unit());
    CHECK(apply(r, ctx.o_minus()) == ctx.unit());
    CHECK(apply(r, ctx.unit()) == ctx.o_plus());
    CHECK(apply(r, ctx.o_plus()) == minus_e);
    CHECK(apply(r, minus_e) == ctx.o_minus());
    // chart round trips
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix xc = Matrix::random(gf3, 1, 1, rng);
        CHECK(chart_plus(ctx, graph_plus(ctx, xc)) == xc);
        CHECK(chart_minus(ctx, graph_minus(ctx, xc)) == xc);
    }
}

TEST_CASE("the three involutions of the standard symplectic context") {
    for (uint32_t p : {3u, 5u}) {
        Ring ring = Ring::gf(p);
        GeometryContext ctx = GeometryContext::standard(ring, 1);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 1, ring));
        CHECK(tau.is_base_point_preserving(ctx));
        CHECK(tau.is_unital(ctx));
        InvolutionMap tau_prime = tau.dual(ctx);
        InvolutionMap tau_tilde = tau.tilde(ctx);
        CHECK(tau_prime.is_base_point_preserving(ctx));
        CHECK_FALSE(tau_prime.is_unital(ctx));
        CHECK(tau_tilde.is_base_point_exchanging(ctx));
        CHECK(tau_tilde.is_unital(ctx));
        // pointwise: tau' = perp of the hyperbolic form, tau~ = perp of the
        // signature form; note tau~ exchanges the base points while tau'
        // preserves them, which pins the correspondence
        FormDescriptor f_form = standard_form(StandardFamily::hyperbolic, 1, ring);
        FormDescriptor i_form = standard_form(StandardFamily::signature, 1, ring);
        for (const auto& x : enumerate_subspaces(ring, 2)) {
            CHECK(tau_prime.apply(x) == orthocomplement(f_form, x));
            CHECK(tau_tilde.apply(x) == orthocomplement(i_form, x));
            CHECK(tau_prime.apply(tau_prime.apply(x)) == x);
            CHECK(tau_tilde.apply(tau_tilde.apply(x)) == x);
        }
        // (tau')' = tau
        InvolutionMap tau_pp = tau_prime.dual(ctx);
        for (const auto& x : enumerate_subspaces(ring, 2))
            CHECK(tau_pp.apply(x) == tau.apply(x));
    }
}

TEST_CASE("Cayley conjugation: rho tau rho^{-1} = tau, rho tau~ rho^{-1} = tau'") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, size_t>>{{3, 1}, {5, 1}, {3, 2}}) {
        Ring ring = Ring::gf(p);
        GeometryContext ctx = GeometryContext::standard(ring, m);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, m, ring));
        InvolutionMap tau_prime = tau.dual(ctx);
        InvolutionMap tau_tilde = tau.tilde(ctx);
        Matrix rho = cayley_matrix(ctx);
        Matrix rho_inv = rho.inverse();
        for (const auto& x : enumerate_subspaces(ring, 2 * m)) {
            CHECK(apply(rho, tau.apply(apply(rho_inv, x))) == tau.apply(x));
            CHECK(apply(rho, tau_tilde.apply(apply(rho_inv, x))) == tau_prime.apply(x));
        }
    }
    Ring gf2 = Ring::gf(2);
    GeometryContext ctx2 = GeometryContext::standard(gf2, 1);
    CHECK_THROWS_AS(cayley_matrix(ctx2), CharacteristicTwo);
}

TEST_CASE("translations and dilations compose") {
    Ring gf5 = Ring::gf(5);
    GeometryContext ctx = GeometryContext::standard(gf5, 2);
    Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix ac = Matrix::random(gf5, 2, 2, rng), bc = Matrix::random(gf5, 2, 2, rng);
        CHECK(translation_matrix(ctx, graph_minus(ctx, ac)) *
                  translation_matrix(ctx, graph_minus(ctx, bc)) ==
              translation_matrix(ctx, graph_minus(ctx, ac + bc)));
    }
    for (long lam = 1; lam < 5; ++lam)
        for (long mu = 1; mu < 5; ++mu)
            CHECK(dilation_matrix(ctx, Scalar::of(gf5, lam)) *
                      dilation_matrix(ctx, Scalar::of(gf5, mu)) ==
                  dilation_matrix(ctx, Scalar::of(gf5, lam * mu)));
}

TEST_CASE("Lagrangian torsor G(tau; a)") {
    Ring gf2 = Ring::gf(2);
    GeometryContext ctx = GeometryContext::standard(gf2, 1);
    InvolutionMap tau =
        InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 1, gf2));
    Subspace a = Subspace::span_of_ints(gf2, 2, {{1, 0}});
    LagrangianTorsor t = lagrangian_torsor(ctx, tau, a);
    REQUIRE(t.elements.size() == 2);  // the two lines distinct from a
    CHECK(t.member(Subspace::span_of_ints(gf2, 2, {{0, 1}})));
    CHECK(t.member(Subspace::span_of_ints(gf2, 2, {{1, 1}})));
    for (const auto& x : t.elements)
        for (const auto& y : t.elements)
            for (const auto& z : t.elements) {
                Subspace w = t.ternary(x, y, z);
                CHECK(t.member(w));
                // abelian since a is Lagrangian; opposite torsor at tau(a)
                CHECK(w == t.ternary(z, y, x));
                LagrangianTorsor opp = lagrangian_torsor(ctx, tau, tau.apply(a));
                CHECK(opp.ternary(x, y, z) == t.ternary(z, y, x));
            }
}

TEST_CASE("tau-unitary groups") {
    Ring gf3 = Ring::gf(3);
    GeometryContext ctx = GeometryContext::standard(gf3, 1);
    InvolutionMap tau =
        InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 1, gf3));
    // (a, o, b) = (e, o+, o-) is fixed elementwise by the symplectic perp
    SubspaceGroup g = tau_unitary_group(ctx, tau, ctx.unit(), ctx.o_plus(), ctx.o_minus());
    CHECK(g.order() == 2);  // matches |{x in GF(3)*: x x = 1}| = |{1, 2}|
    CHECK(g.elements[g.origin] == ctx.o_plus());
    // the brute-force unitary count in the algebra chart: x a x* = 1 with
    // a = e, * = transpose = identity at size 1
    uint64_t brute = 0;
    for (long v = 1; v < 3; ++v)
        if ((v * v) % 3 == 1) ++brute;
    CHECK(brute == g.order());
    // base-point-exchanging tau is rejected (it cannot fix o+ and o-)
    InvolutionMap tau_tilde = tau.tilde(ctx);
    CHECK_THROWS_AS(tau_unitary_group(ctx, tau_tilde, ctx.unit(), ctx.o_plus(), ctx.o_minus()),
                    NotCompatible);
}

TEST_CASE("unitalMaintheorem iii: |G(tau'; e)| equals the x a x* = 1 count") {
    for (uint32_t p : {3u, 5u}) {
        Ring ring = Ring::gf(p);
        GeometryContext ctx = GeometryContext::standard(ring, 1);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 1, ring));
        InvolutionMap tau_prime = tau.dual(ctx);
        LagrangianTorsor g = lagrangian_torsor(ctx, tau_prime, ctx.unit());
        uint64_t brute = 0;  // {x in M(1,1;K)^x : x 1 x^t = 1}
        for (uint64_t v = 1; v < p; ++v)
            if (v * v % p == 1) ++brute;
        CHECK(g.elements.size() == brute);
    }
}

TEST_CASE("Theorem conjug at half_n = 1 over GF(3) and GF(5)") {
    for (uint32_t p : {3u, 5u}) {
        Ring ring = Ring::gf(p);
        GeometryContext ctx = GeometryContext::standard(ring, 1);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 1, ring));
        size_t tested = 0;
        for (const auto& a : enumerate_subspaces(ring, 2)) {
            if (!(tau.apply(a) == a)) continue;
            if (!is_transversal(a, ctx.o_minus()) || !is_transversal(ctx.o_plus(), a)) continue;
            ConjugationReport rep = conjug_isomorphism(ctx, tau, a);
            CHECK(rep.source.order() == rep.target.order());
            ++tested;
        }
        CHECK(tested == p - 1);  // the lines transversal to both base points
    }
}
