#pragma once

#include <vector>

#include "grastor/subspace.hpp"

namespace grastor {

enum class FormKind : uint8_t { hermitian, skew_hermitian };
enum class StandardFamily : uint8_t { symplectic, hyperbolic, signature };

// A nondegenerate sesquilinear form beta(v, w) = conj(v) B w^T, conjugate
// linear in the first slot, linear in the second. Hermitian means
// conj(B)^T = B, skew-Hermitian conj(B)^T = -B; both checked at construction.
class FormDescriptor {
public:
    FormDescriptor() = default;
    FormDescriptor(FormKind kind, Matrix gram);

    size_t ambient_dim() const { return gram_.rows(); }
    const Ring& ring() const { return gram_.ring(); }
    FormKind kind() const { return kind_; }
    const Matrix& gram() const { return gram_; }
    // beta(v, v) = 0 for every v; tracked separately because skew-Hermitian
    // and Hermitian coincide in characteristic 2
    bool alternating() const { return alternating_; }

    Scalar beta(const Matrix& v, const Matrix& w) const;  // row vectors

    friend bool operator==(const FormDescriptor&, const FormDescriptor&) = default;

private:
    FormKind kind_ = FormKind::hermitian;
    Matrix gram_;
    bool alternating_ = false;
};

// Omega_n, F_n, I_{n,n} on K^{2n} (block matrices of the named family).
FormDescriptor standard_form(StandardFamily family, size_t half_n, const Ring& ring);

// {v : beta(v, x) = 0}; dim x + dim x_perp = n.
Subspace orthocomplement(const FormDescriptor& beta, const Subspace& x);

bool is_lagrangian(const FormDescriptor& beta, const Subspace& x);
std::vector<Subspace> enumerate_lagrangians(const FormDescriptor& beta,
                                            uint64_t limit = default_enumeration_limit());

// W = x + a and W = x_perp + a_perp, both direct; checked independently.
bool is_adjoinable_pair(const FormDescriptor& beta, const Subspace& x, const Subspace& a);

// X* = B^{-1} conj(X)^T B, the unique matrix with beta(v, Xw) = beta(X*v, w).
Matrix operator_adjoint(const FormDescriptor& beta, const Matrix& m);

}  // namespace grastor
