#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cnormal {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Inner product convention used throughout: <u,v> is linear in u and
// conjugate-linear in v, i.e. <u,v> = v^H u.
template <typename DerivedU, typename DerivedV>
Complex inner(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
    return (v.adjoint() * u)(0, 0);
}

template <typename Derived>
double frob(const Eigen::MatrixBase<Derived>& m) {
    return m.norm();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

// Thresholds controlling every numerical comparison in the library.
struct ToleranceConfig {
    double eig_cluster_rel = 1e-8;  // relative eigenvalue clustering threshold
    double residual_abs = 1e-8;     // absolute residual threshold for operator identities
    double rank_rel = 1e-10;        // relative singular-value threshold for numerical rank

    void validate() const {
        auto ok = [](double t) { return t > 0.0 && t < 1.0; };
        if (!ok(eig_cluster_rel) || !ok(residual_abs) || !ok(rank_rel))
            throw std::invalid_argument("ToleranceConfig fields must lie in (0,1)");
    }
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct NotInvolutive : Error { using Error::Error; };
struct GramMismatch : Error { using Error::Error; };
struct NormMismatch : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct NotCommuting : Error { using Error::Error; };
struct NotPartialIsometry : Error { using Error::Error; };
struct NotInCokernel : Error { using Error::Error; };
struct NotRankOne : Error { using Error::Error; };
struct ReductionResidual : Error { using Error::Error; };
struct SpectrumMismatch : Error { using Error::Error; };

inline void require_square(const CMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw DimensionMismatch(std::string(who) + ": matrix must be square with dim >= 1");
    if (!all_finite(a))
        throw std::invalid_argument(std::string(who) + ": matrix has non-finite entries");
}

}  // namespace cnormal
