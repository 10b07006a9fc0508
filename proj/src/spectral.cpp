#include "cnormal/spectral.hpp"

#include "cnormal/matrix_ops.hpp"

#include <Eigen/SVD>

namespace cnormal {

BorelSet BorelSet::atoms(std::vector<int> indices) {
    BorelSet b;
    b.atom_indices = std::move(indices);
    return b;
}

BorelSet BorelSet::interval(double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("BorelSet: interval with lo > hi");
    BorelSet b;
    b.intervals.emplace_back(lo, hi);
    return b;
}

BorelSet BorelSet::whole_line() {
    BorelSet b;
    b.intervals.emplace_back(0.0, std::numeric_limits<double>::infinity());
    return b;
}

BorelSet BorelSet::empty() { return BorelSet{}; }

bool BorelSet::contains(double s, int atom_index, double slack) const {
    if (atom_indices) {
        for (int i : *atom_indices)
            if (i == atom_index) return true;
        return false;
    }
    for (const auto& [lo, hi] : intervals)
        if (s >= lo - slack && s <= hi + slack) return true;
    return false;
}

SpectralMeasureAbs spectral_measure_abs(const CMatrix& n, const ToleranceConfig& tol) {
    require_square(n, "spectral_measure_abs");
    const double nn = frob(n);
    if (frob(n.adjoint() * n - n * n.adjoint()) > tol.residual_abs * (1.0 + nn) * (1.0 + nn))
        throw NotNormal("spectral_measure_abs: matrix is not normal");

    Eigen::JacobiSVD<CMatrix> svd(n, Eigen::ComputeFullV);
    const Eigen::Index d = n.rows();
    RVector s(d);
    CMatrix v(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {  // ascending
        s(i) = svd.singularValues()(d - 1 - i);
        v.col(i) = svd.matrixV().col(d - 1 - i);
    }

    SpectralMeasureAbs out;
    out.n_matrix = n;
    out.cluster_tol_used = tol.eig_cluster_rel * std::max(1.0, s.size() ? s.maxCoeff() : 0.0);
    const double zero_snap = out.cluster_tol_used;

    for (const auto& [b, e] : cluster_ascending(s, tol.eig_cluster_rel)) {
        double mean = s.segment(b, e - b).mean();
        if (mean <= zero_snap) mean = 0.0;
        out.atoms.push_back({mean, v.middleCols(b, e - b)});
    }
    return out;
}

CMatrix evaluate(const SpectralMeasureAbs& e, const BorelSet& delta, const ToleranceConfig& tol) {
    const Eigen::Index n = e.n_matrix.rows();
    if (delta.atom_indices) {
        for (int j : *delta.atom_indices)
            if (j < 0 || j >= static_cast<int>(e.atoms.size()))
                throw std::out_of_range("evaluate: atom index out of range");
    }
    CMatrix p = CMatrix::Zero(n, n);
    for (int i = 0; i < static_cast<int>(e.atoms.size()); ++i)
        if (delta.contains(e.atoms[i].s, i, tol.residual_abs))
            p += e.atoms[i].frame * e.atoms[i].frame.adjoint();
    return p;
}

BlockPolar block_polar(const SpectralMeasureAbs& e, int atom_index, const ToleranceConfig& tol) {
    if (atom_index < 0 || atom_index >= static_cast<int>(e.atoms.size()))
        throw std::out_of_range("block_polar: atom index out of range");
    const auto& atom = e.atoms[atom_index];
    const Eigen::Index k = atom.frame.cols();
    if (atom.s == 0.0)
        return {0.0, CMatrix::Identity(k, k)};

    CMatrix u = (atom.frame.adjoint() * e.n_matrix * atom.frame) / atom.s;
    const double res = frob(u.adjoint() * u - CMatrix::Identity(k, k));
    if (res > tol.residual_abs * (1.0 + frob(e.n_matrix)))
        throw Error("block_polar: block factor failed unitarity check");
    return {atom.s, std::move(u)};
}

}  // namespace cnormal
