#pragma once

#include "cnormal/types.hpp"

namespace cnormal {

// Closed subspace of C^n represented by an orthonormal column frame.
// k = 0 encodes the zero subspace.
struct Subspace {
    int ambient_dim = 0;
    CMatrix frame;  // ambient_dim x k, orthonormal columns

    int dim() const { return static_cast<int>(frame.cols()); }
    CMatrix projector() const { return frame * frame.adjoint(); }

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
};

// Orthonormal basis of ker(A), singular values below rank_rel * max(scale,
// sigma_max) counting as zero.  scale = 0 gives the pure relative rule.
Subspace kernel(const CMatrix& a, const ToleranceConfig& tol = {}, double scale = 0.0);

Subspace image(const CMatrix& a, const ToleranceConfig& tol = {});

Subspace orthocomplement(const Subspace& s);

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2, const ToleranceConfig& tol = {});

// {x : A x in S}
Subspace preimage_in(const CMatrix& a, const Subspace& s, const ToleranceConfig& tol = {});

// Principal angles between two subspaces, ascending, in radians.
RVector principal_angles(const Subspace& s1, const Subspace& s2);

// Equal dimension and all principal angles below angle_tol.
bool same_subspace(const Subspace& s1, const Subspace& s2, double angle_tol);

}  // namespace cnormal
