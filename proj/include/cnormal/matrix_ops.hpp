#pragma once

#include "cnormal/types.hpp"

namespace cnormal {

// Hermitian eigendecomposition with ascending eigenvalues and a deterministic
// eigenvector phase (first significant component rotated to the positive real
// axis).
struct HermitianEig {
    RVector eigenvalues;  // ascending
    CMatrix frame;        // unitary, columns aligned with eigenvalues
};

HermitianEig hermitian_eig(const CMatrix& a, const ToleranceConfig& tol = {});

// Unique PSD square root; eigenvalue noise below zero is clamped.
CMatrix psd_sqrt(const CMatrix& a, const ToleranceConfig& tol = {});

// Unitary polar factor U with A = U|A|.  On ker|A| the factor maps a
// deterministic kernel basis onto a deterministic basis of ker|A*|.
CMatrix polar_unitary(const CMatrix& a, const ToleranceConfig& tol = {});

struct Classification {
    bool normal = false;
    bool unitary = false;
    bool hermitian = false;
    bool partial_isometry = false;
};

Classification classify(const CMatrix& a, const ToleranceConfig& tol = {});

// |A| and |A*| from one SVD of A, so both carry identical spectra and exact
// zeros on the kernel (a Gram-matrix route would square the condition number).
struct AbsoluteValues {
    CMatrix abs_a;       // |A|  = V S V^H
    CMatrix abs_a_star;  // |A*| = W S W^H
    RVector singular_values;  // ascending
};

AbsoluteValues absolute_values(const CMatrix& a);

// Chain clustering of an ascending value list: consecutive entries merge when
// their gap is small on the value scale or on the squared scale (the latter
// glues numerically split zero clusters).  Returns [begin,end) index pairs.
std::vector<std::pair<int, int>> cluster_ascending(const RVector& vals, double cluster_rel);

}  // namespace cnormal
