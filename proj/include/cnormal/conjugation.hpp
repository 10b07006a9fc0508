#pragma once

#include <optional>

#include "cnormal/types.hpp"

namespace cnormal {

// Antiunitary involution C, stored through its action C(x) = u * conj(x).
// C is isometric iff u is unitary and involutive iff additionally u = u^T,
// so validity of the pair of residuals below characterises a conjugation.
class Conjugation {
public:
    // Validates unitarity and symmetry of u within tol.residual_abs.
    Conjugation(CMatrix u, const ToleranceConfig& tol = {});

    int dim() const { return static_cast<int>(u_.rows()); }
    const CMatrix& u() const { return u_; }

private:
    CMatrix u_;
};

struct ConjugationResiduals {
    double isometry;    // ||u^H u - I||
    double involution;  // ||u conj(u) - I||
};

CVector apply(const Conjugation& c, const CVector& x);

Conjugation standard_conjugation(int dim);

// Assembles C with C f_i = g_i from two unitary frames; candidate u = G F^T
// must come out symmetric, otherwise the requested phase assignment is
// inconsistent and NotInvolutive is thrown.
Conjugation conjugation_from_basis_map(const CMatrix& f, const CMatrix& g,
                                       const ToleranceConfig& tol = {});

// Conjugation with Cx=y and Ca=b (and automatically Cy=x, Cb=a).  Pairs may
// be omitted by passing std::nullopt; the construction then constrains only
// the remaining span.  Preconditions: matching norms per pair, x orth a,
// y orth b, and the Gram condition <x,b> = <a,y>.
Conjugation conjugation_mapping_pairs(const std::optional<CVector>& x,
                                      const std::optional<CVector>& y,
                                      const std::optional<CVector>& a,
                                      const std::optional<CVector>& b,
                                      const ToleranceConfig& tol = {});

// Given unitary U and vectors of equal norm with <Ux,x> = <Uy,y>, produces a
// conjugation with Cx = y and CUx = U*y.
Conjugation conj_angl(const CMatrix& u, const CVector& x, const CVector& y,
                      const ToleranceConfig& tol = {});

ConjugationResiduals verify_conjugation(const Conjugation& c, const ToleranceConfig& tol = {});

// Orthonormal basis pointwise fixed by C (always exists; dim steps).
CMatrix fixed_real_basis(const Conjugation& c, const ToleranceConfig& tol = {});

// ||C A* C - A||
double is_c_symmetric(const CMatrix& a, const Conjugation& c, const ToleranceConfig& tol = {});

// ||C (A*A) C - A A*||
double is_c_normal(const CMatrix& a, const Conjugation& c, const ToleranceConfig& tol = {});

}  // namespace cnormal
