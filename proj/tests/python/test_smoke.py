"""Smoke tests for the python bindings: a few exact identities at desk scale."""

import grastor as g


def test_rings_and_scalars():
    gf9 = g.Ring.gf2(3)
    assert gf9.cardinality() == 9
    assert str(g.Ring.parse("gf(3^2)")) == "gf(3^2)"


def test_lattice_and_counting():
    gf2 = g.Ring.gf(2)
    assert g.count_subspaces(gf2, 4) == 67
    assert g.gaussian_binomial(4, 2, 2) == 35
    subs = g.enumerate_subspaces(gf2, 2)
    assert len(subs) == 5
    e1 = g.Subspace.span(gf2, 2, [[1, 0]])
    e2 = g.Subspace.span(gf2, 2, [[0, 1]])
    assert g.is_transversal(e1, e2)
    assert g.join(e1, e2) == g.Subspace.full(gf2, 2)
    assert g.meet(e1, e2) == g.Subspace.zero(gf2, 2)


def test_gamma_paths_agree():
    gf3 = g.Ring.gf(3)
    subs = g.enumerate_subspaces(gf3, 2)
    for x in subs:
        for a in subs:
            for z in subs:
                lhs = g.gamma(x, a, a, x, z)
                assert lhs == g.gamma_oracle(x, a, a, x, z)
                assert lhs == g.meet(x, g.join(a, z))


def test_lagrangians_and_forms():
    gf2 = g.Ring.gf(2)
    omega2 = g.standard_form(g.StandardFamily.symplectic, 2, gf2)
    lag = g.enumerate_lagrangians(omega2)
    assert len(lag) == 15
    for x in lag:
        assert g.orthocomplement(omega2, x) == x
        # semitorsor closure for a = first Lagrangian
        y = lag[0]
        a = lag[1]
        w = g.gamma(x, a, y, g.orthocomplement(omega2, a), lag[2])
        assert g.is_lagrangian(omega2, w)


def test_relations():
    gf2 = g.Ring.gf(2)
    e1 = g.Subspace.span(gf2, 2, [[1, 0]])
    e2 = g.Subspace.span(gf2, 2, [[0, 1]])
    p = g.gen_projection(e1, e2)
    assert g.compose(p, p) == p
    assert p.is_graph()


def test_groups_and_brackets():
    gf3 = g.Ring.gf(3)
    omega = g.Matrix.of_ints(gf3, [[0, 1], [-1, 0]])
    sp = g.enumerate_group(g.HomotopeGroupSpec(g.GroupFamily.symplectic, omega))
    assert sp.order() == 24
    o2 = g.enumerate_group(
        g.HomotopeGroupSpec(g.GroupFamily.orthogonal, g.Matrix.identity(gf3, 2))
    )
    assert o2.order() == 8

    gf7 = g.Ring.gf(7)
    x = g.Matrix.of_ints(gf7, [[1, 2], [3, 4]])
    y = g.Matrix.of_ints(gf7, [[0, 1], [5, 2]])
    a = g.Matrix.of_ints(gf7, [[2, 0], [1, 1]])
    assert g.lie_bracket_dual(x, y, a) == g.lie_bracket(x, y, a)


def test_verify_suite():
    rep = g.verify("klein4", p=2, n=2, exhaustive=1)
    assert rep["passed"]
    assert rep["checked"] == 5**5


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
