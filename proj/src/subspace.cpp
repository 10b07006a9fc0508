#include "cnormal/subspace.hpp"

#include <algorithm>

#include <Eigen/SVD>

namespace cnormal {

namespace {

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

Subspace make_subspace(int ambient, CMatrix frame) {
    normalize_column_phases(frame);
    return Subspace{ambient, std::move(frame)};
}

}  // namespace

Subspace Subspace::zero(int ambient) {
    return Subspace{ambient, CMatrix(ambient, 0)};
}

Subspace Subspace::full(int ambient) {
    return Subspace{ambient, CMatrix::Identity(ambient, ambient)};
}

Subspace kernel(const CMatrix& a, const ToleranceConfig& tol, double scale) {
    if (a.cols() < 1) throw DimensionMismatch("kernel: empty matrix");
    const int n = static_cast<int>(a.cols());
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const RVector& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const double thresh = tol.rank_rel * std::max(scale, smax);

    int r = 0;
    while (r < s.size() && s(r) > thresh) ++r;
    return make_subspace(n, svd.matrixV().rightCols(n - r));
}

Subspace image(const CMatrix& a, const ToleranceConfig& tol) {
    if (a.rows() < 1) throw DimensionMismatch("image: empty matrix");
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU);
    const RVector& s = svd.singularValues();
    const double smax = s.size() ? s(0) : 0.0;
    const double thresh = tol.rank_rel * smax;

    int r = 0;
    while (r < s.size() && s(r) > thresh) ++r;
    return make_subspace(static_cast<int>(a.rows()), svd.matrixU().leftCols(r));
}

Subspace orthocomplement(const Subspace& s) {
    const int n = s.ambient_dim;
    if (s.dim() == 0) return Subspace::full(n);
    if (s.dim() == n) return Subspace::zero(n);
    Eigen::JacobiSVD<CMatrix> svd(CMatrix(CMatrix::Identity(n, n) - s.projector()),
                                  Eigen::ComputeFullU);
    return make_subspace(n, svd.matrixU().leftCols(n - s.dim()));
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2, const ToleranceConfig& tol) {
    if (s1.ambient_dim != s2.ambient_dim)
        throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
    const int n = s1.ambient_dim;
    CMatrix stacked(2 * n, n);
    stacked.topRows(n) = CMatrix::Identity(n, n) - s1.projector();
    stacked.bottomRows(n) = CMatrix::Identity(n, n) - s2.projector();
    // projector stacks have natural scale 1
    return kernel(stacked, tol, 1.0);
}

Subspace preimage_in(const CMatrix& a, const Subspace& s, const ToleranceConfig& tol) {
    require_square(a, "preimage_in");
    if (static_cast<int>(a.rows()) != s.ambient_dim)
        throw DimensionMismatch("preimage_in: dimensions differ");
    const CMatrix residual_map = (CMatrix::Identity(s.ambient_dim, s.ambient_dim) - s.projector()) * a;
    return kernel(residual_map, tol, std::max(1.0, frob(a)));
}

RVector principal_angles(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim != s2.ambient_dim)
        throw DimensionMismatch("principal_angles: ambient dimensions differ");
    const int k = std::min(s1.dim(), s2.dim());
    if (k == 0) return RVector(0);
    Eigen::JacobiSVD<CMatrix> svd(CMatrix(s1.frame.adjoint() * s2.frame));
    RVector ang(k);
    for (int i = 0; i < k; ++i)  // cosines descending -> angles ascending
        ang(i) = std::acos(std::clamp(svd.singularValues()(i), 0.0, 1.0));
    return ang;
}

bool same_subspace(const Subspace& s1, const Subspace& s2, double angle_tol) {
    if (s1.ambient_dim != s2.ambient_dim || s1.dim() != s2.dim()) return false;
    if (s1.dim() == 0) return true;
    return principal_angles(s1, s2).maxCoeff() <= angle_tol;
}

}  // namespace cnormal
