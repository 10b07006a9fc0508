#pragma once

#include "cnormal/subspace.hpp"

namespace cnormal {

// M(A): orthocomplement of the largest subspace invariant under |A| and |A*|
// on which the two coincide.  Computed as the orthocomplement of the
// intersection of ker(|A|^n - |A*|^n) over n = 1..dim (shared characteristic
// polynomial of |A| and |A*| makes that many powers sufficient).
Subspace m_space(const CMatrix& a, const ToleranceConfig& tol = {});

// Independent route: start from ker(|A|-|A*|) and shrink to the invariance
// fixpoint F = F int preim(|A|,F) int preim(|A*|,F); returns the
// orthocomplement.  Must agree with m_space within principal-angle tolerance.
Subspace m_space_fixpoint(const CMatrix& a, const ToleranceConfig& tol = {});

// Compressions of |A| and |A*| to the M(A) frame.
struct MspaceReduction {
    CMatrix p_m;     // |A|  compressed, Hermitian
    CMatrix q_m;     // |A*| compressed, Hermitian
    Subspace space;  // M(A)
};

MspaceReduction reduce_to_mspace(const CMatrix& a, const ToleranceConfig& tol = {});

}  // namespace cnormal
