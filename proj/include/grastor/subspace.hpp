#pragma once

#include <optional>
#include <vector>

#include "grastor/matrix.hpp"

namespace grastor {

uint64_t default_enumeration_limit();  // GRASTOR_LIMIT env override

// A point of the Grassmannian Gras(K^n): a subspace in canonical reduced
// row echelon basis form (rows are basis vectors, no zero rows). Equality is
// entrywise equality of the canonical bases.
class Subspace {
public:
    Subspace() = default;

    static Subspace from_span(const Matrix& rows);  // any spanning rows
    static Subspace zero(const Ring& ring, size_t n);
    static Subspace full(const Ring& ring, size_t n);
    static Subspace span_of_ints(const Ring& ring, size_t n,
                                 const std::vector<std::vector<long>>& rows);

    size_t ambient_dim() const { return n_; }
    size_t dim() const { return basis_.rows(); }
    const Ring& ring() const { return ring_; }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& row_vector) const;
    bool leq(const Subspace& other) const;  // inclusion

    friend bool operator==(const Subspace& x, const Subspace& y);
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
    int cmp(const Subspace& other) const;  // dimension-major, then lexicographic
    bool operator<(const Subspace& other) const { return cmp(other) < 0; }

    std::string to_string() const;

private:
    Ring ring_;
    size_t n_ = 0;
    Matrix basis_;  // RREF, dim x n
};

// Lattice operations.
Subspace join(const Subspace& x, const Subspace& y);
Subspace meet(const Subspace& x, const Subspace& y);
bool is_transversal(const Subspace& x, const Subspace& a);

// Deterministic complement: standard basis vectors at the non-pivot columns.
Subspace complement(const Subspace& x);

// P^a_x, the projection with kernel a and image x; requires x transversal a.
Matrix projection_matrix(const Subspace& x, const Subspace& a);

// Column action: image m·x and preimage {v : m v in x}.
Subspace apply(const Matrix& m, const Subspace& x);
Subspace preimage(const Matrix& m, const Subspace& x);

Subspace kernel_space(const Matrix& m);  // {v : m v = 0}
Subspace image_space(const Matrix& m);   // column space, read as row vectors

// Central solver shared by the relation calculus: basis rows of
// {c : c · Aᵀ = 0} mapped through `map` (solution row · mapᵀ), canonicalized.
// `system` has one column per unknown and one row per equation.
Subspace solve_and_map(const Matrix& system, const Matrix& map);

// Enumeration of Gras(K^n) in the fixed order: by dimension, then
// lexicographically on the canonical basis entries.
std::vector<Subspace> enumerate_subspaces(const Ring& ring, size_t n,
                                          uint64_t limit = default_enumeration_limit());
uint64_t count_subspaces(const Ring& ring, size_t n);
uint64_t gaussian_binomial(size_t n, size_t k, uint64_t q);

Subspace random_subspace(const Ring& ring, size_t n, Rng& rng);

}  // namespace grastor
