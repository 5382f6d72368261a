#include "grastor/form.hpp"

#include "grastor/error.hpp"

namespace grastor {

FormDescriptor::FormDescriptor(FormKind kind, Matrix gram) : kind_(kind), gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("gram matrix must be square");
    if (!gram_.is_invertible()) throw DegenerateForm("gram matrix is singular");
    Matrix ct = gram_.conj_transpose();
    bool herm = ct == gram_;
    bool skew = ct == -gram_;
    if (kind_ == FormKind::hermitian && !herm) {
        if (skew) throw NotCompatible("gram is skew-Hermitian, not Hermitian");
        throw NotCompatible("gram matrix is not Hermitian");
    }
    if (kind_ == FormKind::skew_hermitian && !skew) {
        if (herm) throw NotCompatible("gram is Hermitian, not skew-Hermitian");
        throw NotCompatible("gram matrix is not skew-Hermitian");
    }
    bool zero_diag = true;
    for (size_t i = 0; i < gram_.rows(); ++i)
        if (!gram_.at(i, i).is_zero()) zero_diag = false;
    alternating_ = zero_diag && skew;
}

Scalar FormDescriptor::beta(const Matrix& v, const Matrix& w) const {
    if (v.rows() != 1 || w.rows() != 1 || v.cols() != ambient_dim() || w.cols() != ambient_dim())
        throw DimensionError("beta expects two row vectors of the ambient dimension");
    Matrix r = v.map([](const Scalar& s) { return s.conj(); }) * gram_ * w.transpose();
    return r.at(0, 0);
}

FormDescriptor standard_form(StandardFamily family, size_t half_n, const Ring& ring) {
    size_t n = 2 * half_n;
    Matrix b(ring, n, n);
    Scalar one = Scalar::one(ring);
    switch (family) {
        case StandardFamily::symplectic:
            for (size_t i = 0; i < half_n; ++i) {
                b.at(i, half_n + i) = one;
                b.at(half_n + i, i) = -one;
            }
            return FormDescriptor(FormKind::skew_hermitian, b);
        case StandardFamily::hyperbolic:
            for (size_t i = 0; i < half_n; ++i) {
                b.at(i, half_n + i) = one;
                b.at(half_n + i, i) = one;
            }
            return FormDescriptor(FormKind::hermitian, b);
        case StandardFamily::signature:
            for (size_t i = 0; i < half_n; ++i) {
                b.at(i, i) = one;
                b.at(half_n + i, half_n + i) = -one;
            }
            return FormDescriptor(FormKind::hermitian, b);
    }
    throw Error("unknown form family");
}

Subspace orthocomplement(const FormDescriptor& beta, const Subspace& x) {
    if (x.ambient_dim() != beta.ambient_dim()) throw DimensionError("ambient mismatch");
    // beta(v, u) = 0 for all basis rows u of x: conjugate the equation to a
    // linear system in v: rows conj(u · gram^T)
    Matrix eq = (x.basis() * beta.gram().transpose()).map([](const Scalar& s) { return s.conj(); });
    return kernel_space(eq);
}

bool is_lagrangian(const FormDescriptor& beta, const Subspace& x) {
    return orthocomplement(beta, x) == x;
}

std::vector<Subspace> enumerate_lagrangians(const FormDescriptor& beta, uint64_t limit) {
    std::vector<Subspace> out;
    for (const auto& x : enumerate_subspaces(beta.ring(), beta.ambient_dim(), limit))
        if (is_lagrangian(beta, x)) out.push_back(x);
    return out;
}

bool is_adjoinable_pair(const FormDescriptor& beta, const Subspace& x, const Subspace& a) {
    if (!is_transversal(x, a)) return false;
    return is_transversal(orthocomplement(beta, x), orthocomplement(beta, a));
}

Matrix operator_adjoint(const FormDescriptor& beta, const Matrix& m) {
    if (m.rows() != beta.ambient_dim() || m.cols() != beta.ambient_dim())
        throw DimensionError("operator adjoint expects an ambient endomorphism");
    return beta.gram().inverse() * m.conj_transpose() * beta.gram();
}

}  // namespace grastor
