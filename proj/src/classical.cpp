#include "grastor/classical.hpp"

#include <map>

#include "grastor/error.hpp"

namespace grastor {

Matrix homotope_product(const Matrix& x, const Matrix& y, const Matrix& a) {
    return x + y - x * a * y;
}

bool homotope_invertible(const Matrix& x, const Matrix& a) {
    Matrix one = Matrix::identity(x.ring(), x.rows());
    return (one - x * a).is_invertible();
}

Matrix homotope_inverse(const Matrix& x, const Matrix& a) {
    Matrix one = Matrix::identity(x.ring(), x.rows());
    Matrix m = one - x * a;
    if (!m.is_invertible()) throw NotInGroup("1 - xa is singular");
    return -(m.inverse() * x);
}

Matrix lie_bracket_homotope(const Matrix& x, const Matrix& y, const Matrix& a) {
    return x * a * y - y * a * x;
}

namespace {

Matrix lift_to(const Ring& target, const Matrix& m) {
    Matrix out(target, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = Scalar::from_parts(
                target, {m.at(i, j), Scalar::zero(m.ring()), Scalar::zero(m.ring()),
                         Scalar::zero(m.ring())});
    return out;
}

}  // namespace

Matrix lie_bracket_via_dual_numbers(const Matrix& x, const Matrix& y, const Matrix& a) {
    const Ring base = x.ring();
    if (base.dual_depth() != 0) throw Error("bracket input must live at dual depth 0");
    const Ring tt = base.with_dual_depth(2);
    Scalar e1 = Scalar::epsilon(tt, 1), e2 = Scalar::epsilon(tt, 2);
    Matrix gx = lift_to(tt, x).scaled(e1);
    Matrix gy = lift_to(tt, y).scaled(e2);
    Matrix ga = lift_to(tt, a);
    // chart group law U · V = U + V - V A U; (e1 X)^{-1} = e1 (-X)
    auto mul = [&ga](const Matrix& u, const Matrix& v) { return u + v - v * ga * u; };
    Matrix commutator = mul(mul(mul(gx, gy), -gx), -gy);
    // extract the e1 e2 coefficient
    Matrix out(base, x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) {
            Scalar c = commutator.at(i, j);
            for (int k = 0; k < 3; ++k)
                if (!c.part(k).is_zero())
                    throw InvariantViolation("commutator has a non-e1e2 component");
            out.at(i, j) = c.part(3);
        }
    return out;
}

// ---------------------------------------------------------------------------
// classical groups

HomotopeGroupSpec::HomotopeGroupSpec(GroupFamily fam, Matrix param) : family(fam), a(std::move(param)) {
    switch (family) {
        case GroupFamily::gl:
            if (a.rows() != a.cols()) throw DimensionError("gl parameter must be square");
            break;
        case GroupFamily::gl_rect:
            break;
        case GroupFamily::orthogonal:
            if (!(a.transpose() == a)) throw NotCompatible("orthogonal parameter needs A^T = A");
            break;
        case GroupFamily::symplectic:
            if (!(a.transpose() == -a)) throw NotCompatible("symplectic parameter needs A^T = -A");
            break;
        case GroupFamily::unitary:
            if (!(a.conj_transpose() == a))
                throw NotCompatible("unitary parameter needs conj(A)^T = A");
            break;
    }
}

namespace {

bool defining_equation(const HomotopeGroupSpec& spec, const Matrix& x) {
    switch (spec.family) {
        case GroupFamily::gl:
        case GroupFamily::gl_rect:
            return true;
        case GroupFamily::orthogonal:
            return x + x.transpose() == x.transpose() * spec.a * x;
        case GroupFamily::symplectic:
            // the sign that matches -g* = j_a(g); see the group-oracle tests
            return x.transpose() - x == x.transpose() * spec.a * x;
        case GroupFamily::unitary:
            return x + x.conj_transpose() == x.conj_transpose() * spec.a * x;
    }
    return false;
}

}  // namespace

bool hull_membership(const HomotopeGroupSpec& spec, const Matrix& x) {
    if (x.cols() != spec.a.rows() || x.rows() != spec.a.cols())
        throw DimensionError("member shape does not match the parameter space");
    return defining_equation(spec, x);
}

bool group_membership(const HomotopeGroupSpec& spec, const Matrix& x) {
    if (!hull_membership(spec, x)) return false;
    Matrix one = Matrix::identity(x.ring(), spec.a.rows());
    return (one - spec.a * x).is_invertible();
}

std::vector<Matrix> enumerate_matrices(const Ring& ring, size_t rows, size_t cols,
                                       uint64_t limit) {
    if (!ring.is_finite_field()) throw NotEnumerable("matrix enumeration needs a finite field");
    uint64_t q = ring.cardinality();
    uint64_t total = 1;
    for (size_t i = 0; i < rows * cols; ++i) {
        total *= q;
        if (total > limit)
            throw NotEnumerable("matrix space exceeds the configured limit");
    }
    std::vector<Matrix> out;
    out.reserve(total);
    std::vector<uint64_t> odo(rows * cols, 0);
    for (;;) {
        Matrix m(ring, rows, cols);
        for (size_t t = 0; t < odo.size(); ++t)
            m.at(t / cols, t % cols) = Scalar::from_index(ring, odo[t]);
        out.push_back(std::move(m));
        size_t t = odo.size();
        bool done = odo.empty();
        while (t > 0) {
            --t;
            if (++odo[t] < q) break;
            odo[t] = 0;
            if (t == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

namespace {

MatrixTable tabulate(const HomotopeGroupSpec& spec, const std::vector<Matrix>& members,
                     bool require_group) {
    MatrixTable t;
    t.elements = members;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < members.size(); ++i) index[members[i].to_string()] = i;
    size_t n = members.size();
    t.table.assign(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix prod = homotope_product(members[i], members[j], spec.a);
            auto it = index.find(prod.to_string());
            if (it == index.end())
                throw InvariantViolation("set is not closed under the homotope product");
            t.table[i][j] = static_cast<uint32_t>(it->second);
        }
    // 0 is the unit in every case
    size_t unit = t.index_of(Matrix::zero(spec.a.ring(), spec.a.cols(), spec.a.rows()));
    for (size_t i = 0; i < n; ++i)
        if (t.table[i][unit] != i || t.table[unit][i] != i)
            throw InvariantViolation("0 is not a unit of the table");
    if (require_group) {
        for (size_t i = 0; i < n; ++i) {
            Matrix inv = homotope_inverse(t.elements[i], spec.a);
            size_t j = t.index_of(inv);
            if (t.table[i][j] != unit || t.table[j][i] != unit)
                throw InvariantViolation("j_a is not a two-sided inverse on the table");
        }
    }
    return t;
}

}  // namespace

size_t MatrixTable::index_of(const Matrix& m) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return i;
    throw NotInGroup("matrix is not an element of the table");
}

MatrixTable enumerate_group(const HomotopeGroupSpec& spec, uint64_t limit) {
    std::vector<Matrix> members;
    for (const auto& x : enumerate_matrices(spec.a.ring(), spec.a.cols(), spec.a.rows(), limit))
        if (group_membership(spec, x)) members.push_back(x);
    return tabulate(spec, members, true);
}

MatrixTable semigroup_hull(const HomotopeGroupSpec& spec, uint64_t limit) {
    std::vector<Matrix> members;
    for (const auto& x : enumerate_matrices(spec.a.ring(), spec.a.cols(), spec.a.rows(), limit))
        if (hull_membership(spec, x)) members.push_back(x);
    return tabulate(spec, members, false);
}

// ---------------------------------------------------------------------------
// orbit classification

OrbitReport classify_orbits(ParameterFamily family, size_t n, const Ring& ring, uint64_t limit) {
    if (!ring.is_finite_field()) throw NotEnumerable("orbit sweep needs a finite field");
    if (family == ParameterFamily::herm && !ring.has_conjugation())
        throw NotCompatible("hermitian parameters need a ring with conjugation");

    auto in_family = [&](const Matrix& a) {
        switch (family) {
            case ParameterFamily::sym: return a.transpose() == a;
            case ParameterFamily::asym: return a.transpose() == -a;
            case ParameterFamily::herm: return a.conj_transpose() == a;
        }
        return false;
    };
    std::vector<Matrix> space;
    std::map<std::string, size_t> index;
    for (const auto& a : enumerate_matrices(ring, n, n, limit))
        if (in_family(a)) {
            index[a.to_string()] = space.size();
            space.push_back(a);
        }

    // GL(n, q) generators: transvections 1 + E_ij (i != j) and the dilation
    // diag(zeta, 1, ..., 1) over every unit zeta (small fields, keep it plain)
    std::vector<Matrix> gens;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Matrix g = Matrix::identity(ring, n);
            g.at(i, j) = Scalar::one(ring);
            gens.push_back(g);
        }
    for (uint64_t u = 2; u < ring.cardinality(); ++u) {
        Matrix g = Matrix::identity(ring, n);
        g.at(0, 0) = Scalar::from_index(ring, u);
        gens.push_back(g);
    }

    // union-find
    std::vector<size_t> parent(space.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](size_t u, size_t v) {
        u = find(u);
        v = find(v);
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
    };
    for (size_t i = 0; i < space.size(); ++i)
        for (const auto& g : gens) {
            Matrix moved = family == ParameterFamily::herm ? g * space[i] * g.conj_transpose()
                                                           : g * space[i] * g.transpose();
            unite(i, index.at(moved.to_string()));
        }

    std::map<size_t, Orbit> orbits;
    for (size_t i = 0; i < space.size(); ++i) {
        size_t root = find(i);
        auto [it, fresh] = orbits.try_emplace(root);
        if (fresh) it->second.representative = space[root];
        ++it->second.size;
    }
    OrbitReport report{family, n, {}};
    for (auto& [root, orbit] : orbits) report.orbits.push_back(std::move(orbit));
    return report;
}

// ---------------------------------------------------------------------------
// pair and triple structures

Subspace pair_product(const GeometryContext& ctx, const Subspace& u, const Subspace& v,
                      const Subspace& w, int sign) {
    const Subspace& op = sign >= 0 ? ctx.o_plus() : ctx.o_minus();
    const Subspace& om = sign >= 0 ? ctx.o_minus() : ctx.o_plus();
    if (!is_transversal(u, om) || !is_transversal(w, om) || !is_transversal(v, op))
        throw NotAdmissible("pair product needs u, w ⊤ o∓ and v ⊤ o±");
    return gamma_global(u, op, v, om, w);
}

Subspace triple_product_second_kind(const GeometryContext& ctx, const InvolutionMap& tau,
                                    const Subspace& x, const Subspace& y, const Subspace& z) {
    if (!tau.is_base_point_exchanging(ctx))
        throw NotCompatible("second-kind triple product needs a base point exchanging involution");
    return pair_product(ctx, x, tau.apply(y), z, +1);
}

Matrix restriction_involution(const GeometryContext& ctx, const InvolutionMap& tau,
                              const Matrix& x_chart) {
    if (!tau.is_base_point_preserving(ctx) || !tau.is_unital(ctx))
        throw NotCompatible("restriction needs a unital base point preserving involution");
    return chart_plus(ctx, tau.apply(graph_plus(ctx, x_chart)));
}

}  // namespace grastor
