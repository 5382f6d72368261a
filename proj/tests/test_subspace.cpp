#include <doctest.h>

#include <set>

#include "grastor/subspace.hpp"

using namespace grastor;

TEST_CASE("kernel and image conventions") {
    Ring gf3 = Ring::gf(3);
    // kernel of [[1,0],[0,0]] is span{(0,1)}
    Subspace k = kernel_space(Matrix::of_ints(gf3, {{1, 0}, {0, 0}}));
    CHECK(k == Subspace::span_of_ints(gf3, 2, {{0, 1}}));
    CHECK(image_space(Matrix::zero(gf3, 2, 2)) == Subspace::zero(gf3, 2));
    Ring gf2 = Ring::gf(2);
    CHECK(kernel_space(Matrix::of_ints(gf2, {{1, 1}})) ==
          Subspace::span_of_ints(gf2, 2, {{1, 1}}));
}

TEST_CASE("lattice operations") {
    Ring gf2 = Ring::gf(2);
    Subspace e12 = Subspace::span_of_ints(gf2, 3, {{1, 0, 0}, {0, 1, 0}});
    Subspace e23 = Subspace::span_of_ints(gf2, 3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(meet(e12, e23) == Subspace::span_of_ints(gf2, 3, {{0, 1, 0}}));
    Subspace e1 = Subspace::span_of_ints(gf2, 2, {{1, 0}});
    Subspace e2 = Subspace::span_of_ints(gf2, 2, {{0, 1}});
    CHECK(join(e1, e2) == Subspace::full(gf2, 2));
    // meet idempotence on random subspaces
    Ring gf5 = Ring::gf(5);
    Rng rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        Subspace x = random_subspace(gf5, 4, rng);
        CHECK(meet(x, x) == x);
        Subspace y = random_subspace(gf5, 4, rng);
        CHECK(x.dim() + y.dim() == join(x, y).dim() + meet(x, y).dim());
    }
}

TEST_CASE("modular law, exhaustive on Gras(GF(2)^3)") {
    Ring gf2 = Ring::gf(2);
    auto all = enumerate_subspaces(gf2, 3);
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                if (!x.leq(z)) continue;
                CHECK(join(x, meet(y, z)) == meet(join(x, y), z));
            }
}

TEST_CASE("transversality and complements") {
    Ring gf2 = Ring::gf(2);
    Subspace e1 = Subspace::span_of_ints(gf2, 2, {{1, 0}});
    Subspace e2 = Subspace::span_of_ints(gf2, 2, {{0, 1}});
    Subspace diag = Subspace::span_of_ints(gf2, 2, {{1, 1}});
    CHECK(is_transversal(e1, e2));
    CHECK_FALSE(is_transversal(e1, e1));
    CHECK(is_transversal(e1, diag));

    Ring gf3 = Ring::gf(3);
    CHECK(complement(Subspace::span_of_ints(gf3, 2, {{1, 0}})) ==
          Subspace::span_of_ints(gf3, 2, {{0, 1}}));
    CHECK(complement(Subspace::full(gf3, 2)) == Subspace::zero(gf3, 2));
    CHECK(complement(Subspace::span_of_ints(gf2, 3, {{1, 1, 0}, {0, 0, 1}})) ==
          Subspace::span_of_ints(gf2, 3, {{0, 1, 0}}));
    // complement is a complement, for every enumerated subspace
    for (const auto& x : enumerate_subspaces(gf3, 3)) CHECK(is_transversal(x, complement(x)));
}

TEST_CASE("projection matrices") {
    Ring gf3 = Ring::gf(3);
    Subspace e1 = Subspace::span_of_ints(gf3, 2, {{1, 0}});
    Subspace e2 = Subspace::span_of_ints(gf3, 2, {{0, 1}});
    CHECK(projection_matrix(e1, e2) == Matrix::of_ints(gf3, {{1, 0}, {0, 0}}));
    CHECK(projection_matrix(Subspace::full(gf3, 2), Subspace::zero(gf3, 2)) ==
          Matrix::identity(gf3, 2));
    Subspace diag = Subspace::span_of_ints(gf3, 2, {{1, 1}});
    CHECK(projection_matrix(e1, diag) == Matrix::of_ints(gf3, {{1, -1}, {0, 0}}));
    CHECK_THROWS_AS(projection_matrix(e1, e1), NotTransversal);

    // P^2 = P and P + P' = 1, exhaustive over transversal pairs in GF(2)^3
    Ring gf2 = Ring::gf(2);
    auto all = enumerate_subspaces(gf2, 3);
    for (const auto& x : all)
        for (const auto& a : all) {
            if (!is_transversal(x, a)) continue;
            Matrix p = projection_matrix(x, a);
            CHECK(p * p == p);
            CHECK(p + projection_matrix(a, x) == Matrix::identity(gf2, 3));
            CHECK(image_space(p) == x);
            CHECK(kernel_space(p) == a);
        }
}

TEST_CASE("apply and preimage") {
    Ring gf2 = Ring::gf(2);
    Subspace e2 = Subspace::span_of_ints(gf2, 2, {{0, 1}});
    Matrix m = Matrix::of_ints(gf2, {{0, 1}, {0, 0}});  // column action: e2 -> e1
    CHECK(apply(m, e2) == Subspace::span_of_ints(gf2, 2, {{1, 0}}));
    CHECK(apply(Matrix::identity(gf2, 2), e2) == e2);
    CHECK(apply(Matrix::zero(gf2, 2, 2), e2) == Subspace::zero(gf2, 2));
    // preimage {v : m v in x}
    CHECK(preimage(m, Subspace::span_of_ints(gf2, 2, {{1, 0}})) == Subspace::full(gf2, 2));
    CHECK(preimage(m, Subspace::zero(gf2, 2)) ==
          Subspace::span_of_ints(gf2, 2, {{1, 0}}));
}

TEST_CASE("enumeration counts match the Gaussian-binomial recurrence") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(count_subspaces(Ring::gf(2), 2) == 5);
    CHECK(count_subspaces(Ring::gf(2), 4) == 67);  // 1+15+35+15+1
    CHECK(count_subspaces(Ring::gf(3), 1) == 2);
    CHECK(count_subspaces(Ring::gf(3), 4) == 212);

    for (uint32_t p : {2u, 3u}) {
        for (size_t n = 1; n <= 4; ++n) {
            Ring ring = Ring::gf(p);
            auto all = enumerate_subspaces(ring, n);
            CHECK(all.size() == count_subspaces(ring, n));
            // exactly once each, in dimension-major lexicographic order
            std::set<std::string> seen;
            for (size_t i = 0; i < all.size(); ++i) {
                CHECK(seen.insert(all[i].to_string()).second);
                if (i) CHECK(all[i - 1].cmp(all[i]) < 0);
            }
        }
    }
    CHECK(enumerate_subspaces(Ring::gf2(3), 2).size() == count_subspaces(Ring::gf2(3), 2));
    CHECK_THROWS_AS(enumerate_subspaces(Ring::rationals(), 2), NotEnumerable);
    CHECK_THROWS_AS(enumerate_subspaces(Ring::gf(2), 4, 10), NotEnumerable);
}

TEST_CASE("subspace JSON shape is canonical RREF") {
    Ring gf2 = Ring::gf(2);
    Subspace s = Subspace::span_of_ints(gf2, 3, {{1, 1, 0}, {1, 0, 1}});
    CHECK(s.basis().rref().first == s.basis());
    CHECK(s.dim() == 2);
}
