#include "cnormal/mspace.hpp"

#include "cnormal/matrix_ops.hpp"

namespace cnormal {

Subspace m_space(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "m_space");
    const int n = static_cast<int>(a.rows());
    const AbsoluteValues abs = absolute_values(a);

    // normalize so the power stack keeps scale ~1 and kernels stay detectable
    const double c = std::max(1.0, abs.singular_values.size() ? abs.singular_values.maxCoeff() : 0.0);
    const CMatrix p = abs.abs_a / c;
    const CMatrix q = abs.abs_a_star / c;

    CMatrix pk = CMatrix::Identity(n, n), qk = CMatrix::Identity(n, n);
    CMatrix stacked(n * n, n);
    for (int k = 0; k < n; ++k) {
        pk = pk * p;
        qk = qk * q;
        stacked.middleRows(k * n, n) = pk - qk;
    }
    const Subspace agreement = kernel(stacked, tol, 1.0);
    return orthocomplement(agreement);
}

Subspace m_space_fixpoint(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "m_space_fixpoint");
    const AbsoluteValues abs = absolute_values(a);
    const double c = std::max(1.0, abs.singular_values.size() ? abs.singular_values.maxCoeff() : 0.0);
    const CMatrix p = abs.abs_a / c;
    const CMatrix q = abs.abs_a_star / c;

    Subspace f = kernel(CMatrix(p - q), tol, 1.0);
    while (f.dim() > 0) {
        Subspace next = subspace_intersect(f, preimage_in(p, f, tol), tol);
        next = subspace_intersect(next, preimage_in(q, f, tol), tol);
        if (next.dim() == f.dim()) break;
        f = std::move(next);
    }
    return orthocomplement(f);
}

MspaceReduction reduce_to_mspace(const CMatrix& a, const ToleranceConfig& tol) {
    const Subspace m = m_space(a, tol);
    const AbsoluteValues abs = absolute_values(a);

    // both factors must be reduced by M(A); a large off-block signals a
    // numerically broken M(A)
    const double scale = 1.0 + frob(a);
    const CMatrix proj_out = CMatrix::Identity(m.ambient_dim, m.ambient_dim) - m.projector();
    const double off_p = frob(proj_out * abs.abs_a * m.frame);
    const double off_q = frob(proj_out * abs.abs_a_star * m.frame);
    if (std::max(off_p, off_q) > 1e4 * tol.residual_abs * scale)
        throw ReductionResidual("reduce_to_mspace: |A| or |A*| not reduced by computed M(A)");

    MspaceReduction out{CMatrix(m.frame.adjoint() * abs.abs_a * m.frame),
                        CMatrix(m.frame.adjoint() * abs.abs_a_star * m.frame), m};
    out.p_m = (out.p_m + out.p_m.adjoint()) / 2.0;
    out.q_m = (out.q_m + out.q_m.adjoint()) / 2.0;
    return out;
}

}  // namespace cnormal
