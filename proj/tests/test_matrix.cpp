#include <doctest.h>

#include "grastor/matrix.hpp"

using namespace grastor;

TEST_CASE("rref canonical forms") {
    Ring gf2 = Ring::gf(2);
    auto [r1, k1] = Matrix::of_ints(gf2, {{0, 1}, {1, 0}}).rref();
    CHECK(k1 == 2);
    CHECK(r1 == Matrix::identity(gf2, 2));

    Ring q = Ring::rationals();
    auto [r2, k2] = Matrix::of_ints(q, {{2, 4}}).rref();
    CHECK(k2 == 1);
    CHECK(r2 == Matrix::of_ints(q, {{1, 2}}));

    auto [r3, k3] = Matrix::of_ints(gf2, {{1, 1}, {1, 1}}).rref();
    CHECK(k3 == 1);
    CHECK(r3 == Matrix::of_ints(gf2, {{1, 1}}));
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng(11);
    for (uint32_t p : {2u, 3u, 5u}) {
        Ring ring = Ring::gf(p);
        for (int trial = 0; trial < 100; ++trial) {
            Matrix m = Matrix::random(ring, 3, 4, rng);
            Matrix once = m.rref().first;
            CHECK(once.rref().first == once);
        }
    }
}

TEST_CASE("rank-nullity on random matrices") {
    Rng rng(5);
    for (uint32_t p : {2u, 3u, 5u}) {
        Ring ring = Ring::gf(p);
        for (int trial = 0; trial < 350; ++trial) {
            size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
            Matrix m = Matrix::random(ring, rows, cols, rng);
            CHECK(m.kernel_basis().rows() + m.rank() == cols);
        }
    }
    Ring q = Ring::rationals();
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = Matrix::random(q, 3, 3, rng);
        CHECK(m.kernel_basis().rows() + m.rank() == 3);
    }
}

TEST_CASE("inverse over fields and dual towers") {
    Ring gf5 = Ring::gf(5);
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Matrix m = Matrix::random(gf5, 3, 3, rng);
        if (!m.is_invertible()) continue;
        CHECK(m * m.inverse() == Matrix::identity(gf5, 3));
        CHECK(m.inverse() * m == Matrix::identity(gf5, 3));
    }
    // dual tower: invertible iff the base part is; Gauss picks unit pivots
    Ring tt = Ring::gf(5).with_dual_depth(2);
    Scalar e1 = Scalar::epsilon(tt, 1);
    Matrix m = Matrix::identity(tt, 2);
    m.at(0, 1) = e1;
    m.at(1, 0) = Scalar::of(tt, 3);
    CHECK(m.is_invertible());
    CHECK(m * m.inverse() == Matrix::identity(tt, 2));
    Matrix nil = Matrix::zero(tt, 1, 1);
    nil.at(0, 0) = e1;
    CHECK_FALSE(nil.is_invertible());
}
