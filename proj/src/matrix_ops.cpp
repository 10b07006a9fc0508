#include "cnormal/matrix_ops.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cnormal {

namespace {

// Rotate each column so its first significant entry is real positive.
// Keeps frames reproducible across decompositions of equal inputs.
void normalize_column_phases(CMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const double mag = std::abs(m(i, j));
            if (mag > 1e-6) {
                m.col(j) *= std::conj(m(i, j)) / mag;
                break;
            }
        }
    }
}

}  // namespace

HermitianEig hermitian_eig(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "hermitian_eig");
    const double scale = frob(a);
    if (frob(a - a.adjoint()) > tol.residual_abs * (1.0 + scale))
        throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<CMatrix> es((a + a.adjoint()) / 2.0);
    if (es.info() != Eigen::Success)
        throw Error("hermitian_eig: eigensolver failed to converge");

    HermitianEig out{es.eigenvalues(), es.eigenvectors()};
    normalize_column_phases(out.frame);
    return out;
}

CMatrix psd_sqrt(const CMatrix& a, const ToleranceConfig& tol) {
    HermitianEig eig = hermitian_eig(a, tol);
    const double lam_max = eig.eigenvalues.size() ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    if (eig.eigenvalues.minCoeff() < -tol.residual_abs * (1.0 + lam_max))
        throw NotPsd("psd_sqrt: input has a significantly negative eigenvalue");

    RVector s = eig.eigenvalues.cwiseMax(0.0);
    const double snap = 100.0 * std::numeric_limits<double>::epsilon() *
                        static_cast<double>(a.rows()) * std::max(1.0, lam_max);
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) <= snap) s(i) = 0.0;  // keep exact kernels exact

    CMatrix root = eig.frame * s.cwiseSqrt().asDiagonal() * eig.frame.adjoint();
    return (root + root.adjoint()) / 2.0;
}

AbsoluteValues absolute_values(const CMatrix& a) {
    require_square(a, "absolute_values");
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Index n = a.rows();

    // reorder ascending (Eigen yields descending)
    RVector s(n);
    CMatrix v(n, n), w(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s(i) = svd.singularValues()(n - 1 - i);
        v.col(i) = svd.matrixV().col(n - 1 - i);
        w.col(i) = svd.matrixU().col(n - 1 - i);
    }

    AbsoluteValues out;
    out.singular_values = s;
    out.abs_a = v * s.asDiagonal() * v.adjoint();
    out.abs_a_star = w * s.asDiagonal() * w.adjoint();
    out.abs_a = (out.abs_a + out.abs_a.adjoint()) / 2.0;
    out.abs_a_star = (out.abs_a_star + out.abs_a_star.adjoint()) / 2.0;
    return out;
}

CMatrix polar_unitary(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "polar_unitary");
    const Eigen::Index n = a.rows();
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector& s = svd.singularValues();  // descending
    const double smax = s.size() ? s(0) : 0.0;
    const double thresh = tol.rank_rel * smax;

    Eigen::Index r = 0;
    while (r < n && s(r) > thresh) ++r;

    CMatrix u = CMatrix::Zero(n, n);
    if (r > 0)
        u = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();

    if (r < n) {
        // Map a deterministic basis of ker|A| onto a deterministic basis of
        // ker|A*|.  Both bases come from the same routine, so for A with
        // |A| = |A*| the completion acts as the identity on the kernel.
        auto complement_frame = [&](const CMatrix& range_part) {
            Eigen::JacobiSVD<CMatrix> proj(CMatrix(CMatrix::Identity(n, n) - range_part * range_part.adjoint()),
                                           Eigen::ComputeFullU);
            CMatrix f = proj.matrixU().leftCols(n - r);
            normalize_column_phases(f);
            return f;
        };
        CMatrix kv = complement_frame(svd.matrixV().leftCols(r));
        CMatrix kw = complement_frame(svd.matrixU().leftCols(r));
        u += kw * kv.adjoint();
    }
    return u;
}

Classification classify(const CMatrix& a, const ToleranceConfig& tol) {
    require_square(a, "classify");
    const Eigen::Index n = a.rows();
    const double na = frob(a);
    const CMatrix ata = a.adjoint() * a;
    const CMatrix aat = a * a.adjoint();

    Classification c;
    c.normal = frob(ata - aat) <= tol.residual_abs * (1.0 + na) * (1.0 + na);
    c.unitary = frob(ata - CMatrix::Identity(n, n)) <= tol.residual_abs * (1.0 + na) * (1.0 + na);
    c.hermitian = frob(a - a.adjoint()) <= tol.residual_abs * (1.0 + na);
    c.partial_isometry =
        frob(ata * ata - ata) <= tol.residual_abs * (1.0 + na * na) * (1.0 + na * na);
    return c;
}

std::vector<std::pair<int, int>> cluster_ascending(const RVector& vals, double cluster_rel) {
    std::vector<std::pair<int, int>> groups;
    const int n = static_cast<int>(vals.size());
    if (n == 0) return groups;
    const double vmax = vals.cwiseAbs().maxCoeff();
    const double tol_v = cluster_rel * std::max(1.0, vmax);
    const double tol_sq = cluster_rel * std::max(1.0, vmax * vmax);

    int begin = 0;
    for (int i = 1; i < n; ++i) {
        const double dv = vals(i) - vals(i - 1);
        const double dsq = vals(i) * vals(i) - vals(i - 1) * vals(i - 1);
        if (dv <= tol_v || std::abs(dsq) <= tol_sq) continue;
        groups.emplace_back(begin, i);
        begin = i;
    }
    groups.emplace_back(begin, n);
    return groups;
}

}  // namespace cnormal
