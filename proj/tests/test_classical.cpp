#include <doctest.h>

#include <set>

#include "grastor/classical.hpp"

using namespace grastor;

namespace {

// independent oracle: the classical matrix group {g : g^t A g = A}
std::vector<Matrix> direct_isometry_group(const Matrix& a) {
    std::vector<Matrix> out;
    for (const auto& g : enumerate_matrices(a.ring(), a.rows(), a.cols()))
        if (g.is_invertible() && g.transpose() * a * g == a) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("homotope product and inverse") {
    Ring q = Ring::rationals();
    Matrix x = Matrix::of_ints(q, {{2}}), a1 = Matrix::of_ints(q, {{1}});
    CHECK(homotope_product(x, x, Matrix::zero(q, 1, 1)) == Matrix::of_ints(q, {{4}}));
    CHECK(homotope_product(x, x, a1) == Matrix::zero(q, 1, 1));  // 2+2-2*1*2

    Ring gf5 = Ring::gf(5);
    Matrix one1 = Matrix::of_ints(gf5, {{1}});
    Matrix a2 = Matrix::of_ints(gf5, {{2}});
    Matrix j = homotope_inverse(one1, a2);
    CHECK(homotope_product(one1, j, a2).is_zero());
    CHECK(homotope_product(j, one1, a2).is_zero());
    CHECK(homotope_inverse(x, Matrix::zero(q, 1, 1)) == -x);

    // associativity on random triples
    Rng rng(31);
    for (int trial = 0; trial < 3000; ++trial) {
        Matrix u = Matrix::random(gf5, 2, 2, rng), v = Matrix::random(gf5, 2, 2, rng);
        Matrix w = Matrix::random(gf5, 2, 2, rng), p = Matrix::random(gf5, 2, 2, rng);
        CHECK(homotope_product(homotope_product(u, v, p), w, p) ==
              homotope_product(u, homotope_product(v, w, p), p));
        // x -> 1 - xa is a homomorphism into the multiplicative monoid
        Matrix i2 = Matrix::identity(gf5, 2);
        CHECK((i2 - homotope_product(u, v, p) * p) == (i2 - u * p) * (i2 - v * p));
    }
    // rectangular shapes: A in the opposite space
    Matrix xr = Matrix::of_ints(q, {{1, 2, 0}, {0, 1, 1}});   // 2x3
    Matrix ar = Matrix::of_ints(q, {{1, 0}, {0, 1}, {1, 1}}); // 3x2
    CHECK(homotope_product(xr, xr, ar) == xr + xr - xr * ar * xr);
}

TEST_CASE("Lie brackets: direct and by dual numbers") {
    Ring q = Ring::rationals();
    Matrix e12 = Matrix::of_ints(q, {{0, 1}, {0, 0}});
    Matrix e21 = Matrix::of_ints(q, {{0, 0}, {1, 0}});
    Matrix e11 = Matrix::of_ints(q, {{1, 0}, {0, 0}});
    CHECK(lie_bracket_homotope(e12, e21, Matrix::identity(q, 2)) ==
          Matrix::of_ints(q, {{1, 0}, {0, -1}}));
    CHECK(lie_bracket_homotope(e12, e21, Matrix::zero(q, 2, 2)).is_zero());
    CHECK(lie_bracket_homotope(e12, e21, e11) == Matrix::of_ints(q, {{0, 0}, {0, -1}}));
    CHECK(lie_bracket_via_dual_numbers(e12, e21, e11) == lie_bracket_homotope(e12, e21, e11));
    CHECK(lie_bracket_via_dual_numbers(e12, e12, e11).is_zero());

    Ring gf7 = Ring::gf(7);
    Rng rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        size_t m = 1 + rng.below(3);
        Matrix x = Matrix::random(gf7, m, m, rng);
        Matrix y = Matrix::random(gf7, m, m, rng);
        Matrix a = Matrix::random(gf7, m, m, rng);
        CHECK(lie_bracket_via_dual_numbers(x, y, a) == lie_bracket_homotope(x, y, a));
    }
    // the first-order product expansion: with the chart law U.V = U + V - VAU,
    // (e1 X)(e2 Y) = e1 X + e2 Y - e1 e2 Y A X exactly
    Ring tt = gf7.with_dual_depth(2);
    Scalar e1 = Scalar::epsilon(tt, 1), e2 = Scalar::epsilon(tt, 2);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix x = Matrix::random(gf7, 2, 2, rng), y = Matrix::random(gf7, 2, 2, rng);
        Matrix a = Matrix::random(gf7, 2, 2, rng);
        auto lift = [&](const Matrix& m, const Scalar& eps) {
            Matrix out(tt, 2, 2);
            for (size_t i = 0; i < 2; ++i)
                for (size_t k = 0; k < 2; ++k)
                    out.at(i, k) = eps * Scalar::parse(tt, m.at(i, k).to_string());
            return out;
        };
        Matrix gx = lift(x, e1), gy = lift(y, e2), ga = lift(a, Scalar::one(tt));
        Matrix prod = gx + gy - gy * ga * gx;
        Matrix expected = gx + gy - lift(y * a * x, e1 * e2);
        CHECK(prod == expected);
    }
}

TEST_CASE("closure of Sym and Asym under homotope brackets") {
    Ring gf7 = Ring::gf(7);
    Rng rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        Matrix c = Matrix::random(gf7, 3, 3, rng);
        Matrix d = Matrix::random(gf7, 3, 3, rng);
        Matrix e = Matrix::random(gf7, 3, 3, rng);
        Matrix skew1 = c - c.transpose(), skew2 = d - d.transpose();
        Matrix symm = e + e.transpose();
        // [Asym, Asym]_A in Asym for symmetric A
        Matrix br = lie_bracket_homotope(skew1, skew2, symm);
        CHECK(br == -br.transpose());
        // [Sym, Sym]_A in Sym for skew A
        Matrix sym1 = c + c.transpose(), sym2 = d + d.transpose();
        Matrix skewp = e - e.transpose();
        Matrix br2 = lie_bracket_homotope(sym1, sym2, skewp);
        CHECK(br2 == br2.transpose());
    }
}

TEST_CASE("factor-2 bracket of the fixed-point Lie algebra (GF(5))") {
    Ring gf5 = Ring::gf(5);
    Rng rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        size_t m = 1 + rng.below(2);
        Matrix c = Matrix::random(gf5, m, m, rng), d = Matrix::random(gf5, m, m, rng);
        Matrix e = Matrix::random(gf5, m, m, rng);
        Matrix x = c + c.transpose(), z = d + d.transpose();
        Matrix a = e - e.transpose();
        Matrix lhs = lie_bracket_via_dual_numbers(x, z, a + a);
        Matrix rhs = lie_bracket_homotope(x, z, a) + lie_bracket_homotope(x, z, a);
        CHECK(lhs == rhs);
        CHECK(lhs == lhs.transpose());
    }
}

TEST_CASE("group enumeration with two independent oracles") {
    Ring gf3 = Ring::gf(3);
    // |GL_2(0; GF(3))| = 81: the additive group of M(2,2)
    MatrixTable gl0 = enumerate_group(HomotopeGroupSpec(GroupFamily::gl, Matrix::zero(gf3, 2, 2)));
    CHECK(gl0.order() == 81);

    // |O_2(I; GF(3))| = 8, against {g : g^t g = 1} through X -> 1 - X
    HomotopeGroupSpec ospec(GroupFamily::orthogonal, Matrix::identity(gf3, 2));
    MatrixTable o2 = enumerate_group(ospec);
    auto o2_direct = direct_isometry_group(Matrix::identity(gf3, 2));
    CHECK(o2.order() == 8);
    CHECK(o2_direct.size() == 8);
    std::set<std::string> mapped, direct;
    for (const auto& x : o2.elements)
        mapped.insert((Matrix::identity(gf3, 2) - x).to_string());
    for (const auto& g : o2_direct) direct.insert(g.to_string());
    CHECK(mapped == direct);

    // |Sp_1(Omega_1; GF(3))| = 24 = |Sp(2,3)| via g = 1 - A X
    Matrix omega = Matrix::of_ints(gf3, {{0, 1}, {-1, 0}});
    HomotopeGroupSpec spspec(GroupFamily::symplectic, omega);
    MatrixTable sp = enumerate_group(spspec);
    auto sp_direct = direct_isometry_group(omega);
    CHECK(sp.order() == 24);
    CHECK(sp_direct.size() == 24);
    std::set<std::string> spmapped, spdirect;
    for (const auto& x : sp.elements) spmapped.insert((omega * x).map([](const Scalar& s) {
                                                          return -s;
                                                      }).to_string());
    for (const auto& g : sp_direct)
        spdirect.insert((g - Matrix::identity(gf3, 2)).to_string());
    // 1 - AX runs over the direct group <=> -AX = g - 1
    CHECK(spmapped == spdirect);
}

TEST_CASE("semigroup hulls") {
    Ring gf3 = Ring::gf(3);
    // A = 0: the hull of the orthogonal family is Asym, a group under +
    MatrixTable asym =
        semigroup_hull(HomotopeGroupSpec(GroupFamily::orthogonal, Matrix::zero(gf3, 2, 2)));
    CHECK(asym.order() == 3);  // 2x2 skew over GF(3): zero diagonal forced
    for (const auto& m : asym.elements) CHECK(m.transpose() == -m);

    MatrixTable ohull =
        semigroup_hull(HomotopeGroupSpec(GroupFamily::orthogonal, Matrix::identity(gf3, 2)));
    MatrixTable ogroup =
        enumerate_group(HomotopeGroupSpec(GroupFamily::orthogonal, Matrix::identity(gf3, 2)));
    CHECK(ohull.order() >= ogroup.order());
    // closure was verified during tabulation; equality here because every
    // member has 1 - AX invertible
    CHECK(ohull.order() == ogroup.order());
}

TEST_CASE("unitary family over GF(9)") {
    Ring gf9 = Ring::gf2(3);
    HomotopeGroupSpec uspec(GroupFamily::unitary, Matrix::identity(gf9, 1));
    MatrixTable u1 = enumerate_group(uspec);
    // {x : x + conj(x) = conj(x) x, 1 - x invertible} maps onto
    // {g : conj(g) g = 1} = the norm-1 circle of GF(9), order q + 1 = 4
    uint64_t direct = 0;
    for (const auto& g : enumerate_matrices(gf9, 1, 1))
        if (!g.at(0, 0).is_zero() && (g.at(0, 0).conj() * g.at(0, 0)).is_one()) ++direct;
    CHECK(direct == 4);
    CHECK(u1.order() == direct);
}

TEST_CASE("orbit classification over GF(3)") {
    Ring gf3 = Ring::gf(3);
    OrbitReport asym = classify_orbits(ParameterFamily::asym, 2, gf3);
    CHECK(asym.orbits.size() == 2);  // rank 0 and rank 2

    OrbitReport sym = classify_orbits(ParameterFamily::sym, 2, gf3);
    // rank 0; rank 1 splits by discriminant class; rank 2 splits by
    // discriminant class: 1 + 2 + 2 orbits of sizes 1, 4, 4, 6, 12
    CHECK(sym.orbits.size() == 5);
    std::multiset<uint64_t> sizes;
    uint64_t total = 0;
    for (const auto& orbit : sym.orbits) {
        sizes.insert(orbit.size);
        total += orbit.size;
    }
    CHECK(total == 27);
    CHECK(sizes == std::multiset<uint64_t>{1, 4, 4, 6, 12});

    // independent oracle: full GL(2,3) orbit of each representative
    std::vector<Matrix> gl;
    for (const auto& g : enumerate_matrices(gf3, 2, 2))
        if (g.is_invertible()) gl.push_back(g);
    CHECK(gl.size() == 48);
    for (const auto& orbit : sym.orbits) {
        std::set<std::string> members;
        for (const auto& g : gl) members.insert((g * orbit.representative * g.transpose()).to_string());
        CHECK(members.size() == orbit.size);
    }

    // hermitian parameters over GF(9): 1x1 case has {0} and the rest in one
    // orbit (the norm map onto GF(3) is surjective on units)
    OrbitReport herm = classify_orbits(ParameterFamily::herm, 1, Ring::gf2(3));
    CHECK(herm.orbits.size() == 2);
    CHECK_THROWS_AS(classify_orbits(ParameterFamily::herm, 1, gf3), NotCompatible);

    // group orders are constant along each orbit
    for (const auto& orbit : sym.orbits) {
        size_t order0 =
            enumerate_group(HomotopeGroupSpec(GroupFamily::orthogonal, orbit.representative))
                .order();
        Rng rng(orbit.size);
        for (int trial = 0; trial < 3; ++trial) {
            Matrix g = Matrix::random(gf3, 2, 2, rng);
            if (!g.is_invertible()) continue;
            Matrix moved = g * orbit.representative * g.transpose();
            CHECK(enumerate_group(HomotopeGroupSpec(GroupFamily::orthogonal, moved)).order() ==
                  order0);
        }
    }
}

TEST_CASE("pair product charts and the algebra chart") {
    Ring gf5 = Ring::gf(5);
    GeometryContext ctx = GeometryContext::standard(gf5, 1);
    // algebra product on graphs equals matrix multiplication, exhaustive n=1
    for (long xv = 0; xv < 5; ++xv)
        for (long wv = 0; wv < 5; ++wv) {
            Subspace u = graph_plus(ctx, Matrix::of_ints(gf5, {{xv}}));
            Subspace w = graph_plus(ctx, Matrix::of_ints(gf5, {{wv}}));
            Subspace prod = pair_product(ctx, u, ctx.unit(), w);
            CHECK(chart_plus(ctx, prod) == Matrix::of_ints(gf5, {{xv * wv}}));
        }
    // <u, e, e> = u
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace u = graph_plus(ctx, Matrix::random(gf5, 1, 1, rng));
        CHECK(pair_product(ctx, u, ctx.unit(), ctx.unit()) == u);
    }
}

TEST_CASE("second-kind triple product: chart X Y^t Z") {
    Ring gf3 = Ring::gf(3);
    GeometryContext ctx = GeometryContext::standard(gf3, 2);
    InvolutionMap tau =
        InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 2, gf3));
    InvolutionMap tilde = tau.tilde(ctx);
    REQUIRE(tilde.is_base_point_exchanging(ctx));
    Rng rng(10);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix cx = Matrix::random(gf3, 2, 2, rng);
        Matrix cy = Matrix::random(gf3, 2, 2, rng);
        Matrix cz = Matrix::random(gf3, 2, 2, rng);
        Subspace prod = triple_product_second_kind(ctx, tilde, graph_plus(ctx, cx),
                                                   graph_plus(ctx, cy), graph_plus(ctx, cz));
        CHECK(chart_plus(ctx, prod) == cx * cy.transpose() * cz);
    }
}

TEST_CASE("functor2 round trip: the restriction involution is the star we started from") {
    // (M(n, n; GF(3)), transpose) for n <= 2
    for (size_t m : {1u, 2u}) {
        Ring gf3 = Ring::gf(3);
        GeometryContext ctx = GeometryContext::standard(gf3, m);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, m, gf3));
        for (const auto& x : enumerate_matrices(gf3, m, m))
            CHECK(restriction_involution(ctx, tau, x) == x.transpose());
    }
    // (M(n, n; GF(9)), conjugate transpose) likewise
    for (size_t m : {1u, 2u}) {
        Ring gf9 = Ring::gf2(3);
        GeometryContext ctx = GeometryContext::standard(gf9, m);
        InvolutionMap tau =
            InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, m, gf9));
        for (const auto& x : enumerate_matrices(gf9, m, m))
            CHECK(restriction_involution(ctx, tau, x) == x.conj_transpose());
    }
    // antiautomorphism law tau(XY) = tau(Y) tau(X) on random pairs
    Ring gf3 = Ring::gf(3);
    GeometryContext ctx = GeometryContext::standard(gf3, 2);
    InvolutionMap tau =
        InvolutionMap::orthocomplement_of(standard_form(StandardFamily::symplectic, 2, gf3));
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix x = Matrix::random(gf3, 2, 2, rng), y = Matrix::random(gf3, 2, 2, rng);
        CHECK(restriction_involution(ctx, tau, x * y) ==
              restriction_involution(ctx, tau, y) * restriction_involution(ctx, tau, x));
    }
}

TEST_CASE("unitary condition equivalence in the chart") {
    // tau(x) = j_b(x) <=> x + tau(x) = x b tau(x), with tau = transpose
    Ring gf5 = Ring::gf(5);
    Rng rng(19);
    for (int trial = 0; trial < 2000; ++trial) {
        Matrix x = Matrix::random(gf5, 2, 2, rng);
        Matrix b = Matrix::random(gf5, 2, 2, rng);
        if (!homotope_invertible(x, b)) continue;
        bool cond1 = x.transpose() == homotope_inverse(x, b);
        bool cond2 = x + x.transpose() == x * b * x.transpose();
        CHECK(cond1 == cond2);
    }
}
