#pragma once

#include <optional>
#include <vector>

#include "cnormal/types.hpp"

namespace cnormal {

// Spectral measure of |N| for a normal matrix N, realised as its finitely
// many atoms: distinct singular values with orthonormal eigenframes.
struct SpectralMeasureAbs {
    struct Atom {
        double s;       // singular value, exactly 0 on the snapped zero atom
        CMatrix frame;  // n x k orthonormal, eigenframe of |N| for s
    };

    CMatrix n_matrix;
    std::vector<Atom> atoms;  // s strictly increasing
    double cluster_tol_used = 0.0;
};

// Finite Borel subset of R+: either an explicit atom-index selection or a
// union of closed intervals.  Membership of an atom is tested with absolute
// slack residual_abs.
struct BorelSet {
    std::optional<std::vector<int>> atom_indices;
    std::vector<std::pair<double, double>> intervals;

    static BorelSet atoms(std::vector<int> indices);
    static BorelSet interval(double lo, double hi);
    static BorelSet whole_line();
    static BorelSet empty();

    bool contains(double s, int atom_index, double slack) const;
};

SpectralMeasureAbs spectral_measure_abs(const CMatrix& n, const ToleranceConfig& tol = {});

// Orthogonal projection E(delta) = sum of frame frame^H over atoms in delta.
CMatrix evaluate(const SpectralMeasureAbs& e, const BorelSet& delta,
                 const ToleranceConfig& tol = {});

// In the atom's frame coordinates N acts as s * U_block; the s = 0 block
// carries the identity.
struct BlockPolar {
    double s;
    CMatrix u_block;
};

BlockPolar block_polar(const SpectralMeasureAbs& e, int atom_index,
                       const ToleranceConfig& tol = {});

}  // namespace cnormal
