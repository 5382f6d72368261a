#include "grastor/subspace.hpp"

#include <cstdlib>

#include "grastor/error.hpp"

namespace grastor {

Subspace Subspace::from_span(const Matrix& rows) {
    Subspace s;
    s.ring_ = rows.ring();
    s.n_ = rows.cols();
    s.basis_ = rows.rref().first;
    return s;
}

Subspace Subspace::zero(const Ring& ring, size_t n) {
    Subspace s;
    s.ring_ = ring;
    s.n_ = n;
    s.basis_ = Matrix(ring, 0, n);
    return s;
}

Subspace Subspace::full(const Ring& ring, size_t n) {
    return from_span(Matrix::identity(ring, n));
}

Subspace Subspace::span_of_ints(const Ring& ring, size_t n,
                                const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return zero(ring, n);
    Matrix m = Matrix::of_ints(ring, rows);
    if (m.cols() != n) throw DimensionError("span row length != ambient dimension");
    return from_span(m);
}

bool Subspace::contains(const Matrix& v) const {
    if (v.cols() != n_) throw DimensionError("vector length mismatch");
    // reduce v against the RREF basis
    Matrix r = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t piv = 0;
        while (basis_.at(i, piv).is_zero()) ++piv;
        if (r.at(0, piv).is_zero()) continue;
        Scalar f = r.at(0, piv);
        for (size_t j = 0; j < n_; ++j) r.at(0, j) -= f * basis_.at(i, j);
    }
    return r.is_zero();
}

bool Subspace::leq(const Subspace& other) const {
    if (n_ != other.n_) throw DimensionError("ambient mismatch");
    if (dim() > other.dim()) return false;
    for (size_t i = 0; i < basis_.rows(); ++i)
        if (!other.contains(basis_.row(i))) return false;
    return true;
}

bool operator==(const Subspace& x, const Subspace& y) {
    return x.n_ == y.n_ && x.ring_ == y.ring_ && x.basis_ == y.basis_;
}

int Subspace::cmp(const Subspace& other) const {
    if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
    return basis_.cmp(other.basis_);
}

std::string Subspace::to_string() const { return basis_.to_string(); }

Subspace join(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim() || !(x.ring() == y.ring()))
        throw DimensionError("join: ambient mismatch");
    return Subspace::from_span(x.basis().vcat(y.basis()));
}

Subspace meet(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim() || !(x.ring() == y.ring()))
        throw DimensionError("meet: ambient mismatch");
    // solve c·Bx = d·By: kernel of the stacked-coefficient system, mapped to
    // the common vector c·Bx
    size_t kx = x.dim(), ky = y.dim(), n = x.ambient_dim();
    const Ring& ring = x.ring();
    Matrix system(ring, n, kx + ky);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < kx; ++i) system.at(j, i) = x.basis().at(i, j);
        for (size_t i = 0; i < ky; ++i) system.at(j, kx + i) = -y.basis().at(i, j);
    }
    Matrix map(ring, n, kx + ky);  // solution row ↦ c·Bx
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < kx; ++i) map.at(j, i) = x.basis().at(i, j);
    return solve_and_map(system, map);
}

bool is_transversal(const Subspace& x, const Subspace& a) {
    if (x.ambient_dim() != a.ambient_dim()) throw DimensionError("ambient mismatch");
    return x.dim() + a.dim() == x.ambient_dim() && meet(x, a).dim() == 0;
}

Subspace complement(const Subspace& x) {
    const Matrix& b = x.basis();
    size_t n = x.ambient_dim();
    std::vector<bool> pivot(n, false);
    for (size_t i = 0; i < b.rows(); ++i) {
        size_t j = 0;
        while (b.at(i, j).is_zero()) ++j;
        pivot[j] = true;
    }
    Matrix rows(x.ring(), n - b.rows(), n);
    size_t k = 0;
    for (size_t j = 0; j < n; ++j)
        if (!pivot[j]) rows.at(k++, j) = Scalar::one(x.ring());
    return Subspace::from_span(rows);
}

Matrix projection_matrix(const Subspace& x, const Subspace& a) {
    if (!is_transversal(x, a))
        throw NotTransversal("projection needs a transversal pair");
    size_t n = x.ambient_dim(), k = x.dim();
    // columns of S^T are the basis vectors of x then a; P fixes x, kills a
    Matrix s_t = x.basis().vcat(a.basis()).transpose();
    Matrix coords = s_t.inverse();  // v ↦ coordinates in the (x, a) basis
    Matrix top(x.ring(), k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) top.at(i, j) = coords.at(i, j);
    return x.basis().transpose() * top;
}

Subspace apply(const Matrix& m, const Subspace& x) {
    if (m.cols() != x.ambient_dim()) throw DimensionError("apply: shape mismatch");
    return Subspace::from_span(x.basis() * m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& x) {
    if (m.rows() != x.ambient_dim()) throw DimensionError("preimage: shape mismatch");
    // unknowns (v, c): m v = c·Bx, keep v
    size_t n = m.cols(), k = x.dim();
    const Ring& ring = m.ring();
    Matrix system(ring, m.rows(), n + k);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) system.at(i, j) = m.at(i, j);
        for (size_t j = 0; j < k; ++j) system.at(i, n + j) = -x.basis().at(j, i);
    }
    Matrix map(ring, n, n + k);
    for (size_t j = 0; j < n; ++j) map.at(j, j) = Scalar::one(ring);
    return solve_and_map(system, map);
}

Subspace kernel_space(const Matrix& m) { return Subspace::from_span(m.kernel_basis()); }

Subspace image_space(const Matrix& m) { return Subspace::from_span(m.transpose()); }

Subspace solve_and_map(const Matrix& system, const Matrix& map) {
    Matrix sol = system.kernel_basis();       // rows: solutions c
    return Subspace::from_span(sol * map.transpose());
}

uint64_t gaussian_binomial(size_t n, size_t k, uint64_t q) {
    if (k > n) return 0;
    // Pascal-type recurrence [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q
    std::vector<std::vector<uint64_t>> t(n + 1, std::vector<uint64_t>(k + 1, 0));
    for (size_t i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (size_t j = 1; j <= std::min(i, k); ++j) {
            uint64_t qj = 1;
            for (size_t e = 0; e < j; ++e) qj *= q;
            t[i][j] = (j <= i - 1 ? t[i - 1][j] * qj : 0) + t[i - 1][j - 1];
        }
    }
    return t[n][k];
}

uint64_t count_subspaces(const Ring& ring, size_t n) {
    if (!ring.is_finite_field()) throw NotEnumerable("count_subspaces needs a finite field");
    uint64_t q = ring.cardinality();
    uint64_t total = 0;
    for (size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
    return total;
}

uint64_t default_enumeration_limit() {
    if (const char* env = std::getenv("GRASTOR_LIMIT")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 200000;
}

namespace {

// All RREF matrices with the given pivot columns, free entries running
// through the field in index order (odometer, last free entry fastest).
void emit_rref(const Ring& ring, size_t n, const std::vector<size_t>& pivots,
               std::vector<Subspace>& out) {
    size_t k = pivots.size();
    // free positions: (row i, col j) with j > pivots[i], j not a pivot column
    std::vector<std::pair<size_t, size_t>> free_pos;
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    for (size_t i = 0; i < k; ++i)
        for (size_t j = pivots[i] + 1; j < n; ++j)
            if (!is_pivot[j]) free_pos.emplace_back(i, j);

    uint64_t q = ring.cardinality();
    Matrix base(ring, k, n);
    for (size_t i = 0; i < k; ++i) base.at(i, pivots[i]) = Scalar::one(ring);

    std::vector<uint64_t> odo(free_pos.size(), 0);
    for (;;) {
        Matrix m = base;
        for (size_t t = 0; t < free_pos.size(); ++t)
            m.at(free_pos[t].first, free_pos[t].second) = Scalar::from_index(ring, odo[t]);
        Subspace s;
        s = Subspace::from_span(m);  // already RREF; from_span re-checks cheaply
        out.push_back(std::move(s));
        // advance odometer
        size_t t = free_pos.size();
        while (t > 0) {
            --t;
            if (++odo[t] < q) break;
            odo[t] = 0;
            if (t == 0) return;
        }
        if (free_pos.empty()) return;
    }
}

void pivot_combinations(size_t n, size_t k, std::vector<size_t>& cur,
                        const Ring& ring, std::vector<Subspace>& out) {
    if (cur.size() == k) {
        emit_rref(ring, n, cur, out);
        return;
    }
    size_t start = cur.empty() ? 0 : cur.back() + 1;
    for (size_t j = start; j + (k - cur.size() - 1) < n; ++j) {
        cur.push_back(j);
        pivot_combinations(n, k, cur, ring, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const Ring& ring, size_t n, uint64_t limit) {
    if (!ring.is_finite_field()) throw NotEnumerable("enumeration needs a finite field");
    uint64_t total = count_subspaces(ring, n);
    if (total > limit)
        throw NotEnumerable("Grassmannian size " + std::to_string(total) +
                            " exceeds the configured limit " + std::to_string(limit));
    std::vector<Subspace> out;
    out.reserve(total);
    for (size_t k = 0; k <= n; ++k) {
        std::vector<size_t> cur;
        pivot_combinations(n, k, cur, ring, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace random_subspace(const Ring& ring, size_t n, Rng& rng) {
    size_t d = static_cast<size_t>(rng.below(n + 1));
    return Subspace::from_span(Matrix::random(ring, d, n, rng));
}

}  // namespace grastor
