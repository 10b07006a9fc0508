#include "cnormal/conjugation.hpp"

#include <vector>

#include <Eigen/SVD>

namespace cnormal {

namespace {

ConjugationResiduals residuals_of(const CMatrix& u) {
    const Eigen::Index n = u.rows();
    return {frob(u.adjoint() * u - CMatrix::Identity(n, n)),
            frob(u * u.conjugate() - CMatrix::Identity(n, n))};
}

}  // namespace

Conjugation::Conjugation(CMatrix u, const ToleranceConfig& tol) : u_(std::move(u)) {
    require_square(u_, "Conjugation");
    const auto res = residuals_of(u_);
    if (res.isometry > tol.residual_abs * (1.0 + frob(u_)))
        throw NotUnitary("Conjugation: u is not unitary (C would not be isometric)");
    if (res.involution > tol.residual_abs * (1.0 + frob(u_)))
        throw NotInvolutive("Conjugation: u is not symmetric (C would not be involutive)");
}

CVector apply(const Conjugation& c, const CVector& x) {
    if (x.size() != c.dim())
        throw DimensionMismatch("apply: vector length does not match conjugation dim");
    return c.u() * x.conjugate();
}

Conjugation standard_conjugation(int dim) {
    if (dim < 1) throw DimensionMismatch("standard_conjugation: dim must be >= 1");
    return Conjugation(CMatrix::Identity(dim, dim));
}

Conjugation conjugation_from_basis_map(const CMatrix& f, const CMatrix& g,
                                       const ToleranceConfig& tol) {
    require_square(f, "conjugation_from_basis_map");
    require_square(g, "conjugation_from_basis_map");
    if (f.rows() != g.rows())
        throw DimensionMismatch("conjugation_from_basis_map: frame dims differ");
    const Eigen::Index n = f.rows();
    const double unit_tol = tol.residual_abs * (1.0 + std::sqrt(double(n)));
    if (frob(f.adjoint() * f - CMatrix::Identity(n, n)) > unit_tol ||
        frob(g.adjoint() * g - CMatrix::Identity(n, n)) > unit_tol)
        throw NotUnitary("conjugation_from_basis_map: frames must be unitary");

    CMatrix u = g * f.transpose();
    if (frob(u - u.transpose()) > tol.residual_abs * (1.0 + frob(u)))
        throw NotInvolutive("conjugation_from_basis_map: phase assignment is inconsistent");
    u = (u + u.transpose()) / 2.0;
    return Conjugation(std::move(u), tol);
}

Conjugation conjugation_mapping_pairs(const std::optional<CVector>& x,
                                      const std::optional<CVector>& y,
                                      const std::optional<CVector>& a,
                                      const std::optional<CVector>& b,
                                      const ToleranceConfig& tol) {
    // collect present pairs, dropping numerically-zero ones
    int n = -1;
    auto norm_of = [](const std::optional<CVector>& v) { return v ? v->norm() : 0.0; };
    for (const auto* v : {&x, &y, &a, &b})
        if (v->has_value()) {
            if (n < 0) n = static_cast<int>((*v)->size());
            else if (static_cast<int>((*v)->size()) != n)
                throw DimensionMismatch("conjugation_mapping_pairs: vector lengths differ");
        }
    if (n < 1) throw DimensionMismatch("conjugation_mapping_pairs: no vectors given");

    const double zero_tol = tol.residual_abs;
    const bool have_xy = norm_of(x) > zero_tol || norm_of(y) > zero_tol;
    const bool have_ab = norm_of(a) > zero_tol || norm_of(b) > zero_tol;

    if (have_xy) {
        if (!x || !y) throw NormMismatch("conjugation_mapping_pairs: pair (x,y) incomplete");
        if (std::abs(x->norm() - y->norm()) > tol.residual_abs * (1.0 + x->norm()))
            throw NormMismatch("conjugation_mapping_pairs: ||x|| != ||y||");
    }
    if (have_ab) {
        if (!a || !b) throw NormMismatch("conjugation_mapping_pairs: pair (a,b) incomplete");
        if (std::abs(a->norm() - b->norm()) > tol.residual_abs * (1.0 + a->norm()))
            throw NormMismatch("conjugation_mapping_pairs: ||a|| != ||b||");
    }
    if (have_xy && have_ab) {
        const double s = (1.0 + x->norm()) * (1.0 + a->norm());
        if (std::abs(inner(*x, *a)) > tol.residual_abs * s)
            throw NotOrthogonal("conjugation_mapping_pairs: x not orthogonal to a");
        if (std::abs(inner(*y, *b)) > tol.residual_abs * s)
            throw NotOrthogonal("conjugation_mapping_pairs: y not orthogonal to b");
        if (std::abs(inner(*x, *b) - inner(*a, *y)) > tol.residual_abs * s)
            throw GramMismatch("conjugation_mapping_pairs: <x,b> != <a,y>");
    }

    // The antilinear assignments x->y, a->b, y->x, b->a, read as linear
    // constraints u * conj(source) = target.  Gram-Schmidt the source side
    // and mirror every elimination on the target side; the preconditions are
    // exactly what makes the mirrored side stay orthonormal.
    std::vector<CVector> src, dst;
    if (have_xy) {
        src.push_back(x->conjugate());
        dst.push_back(*y);
    }
    if (have_ab) {
        src.push_back(a->conjugate());
        dst.push_back(*b);
    }
    if (have_xy) {
        src.push_back(y->conjugate());
        dst.push_back(*x);
    }
    if (have_ab) {
        src.push_back(b->conjugate());
        dst.push_back(*a);
    }

    std::vector<CVector> basis_in, basis_out;
    for (size_t k = 0; k < src.size(); ++k) {
        CVector rin = src[k], rout = dst[k];
        for (size_t j = 0; j < basis_in.size(); ++j) {
            const Complex coef = inner(rin, basis_in[j]);
            rin -= coef * basis_in[j];
            rout -= coef * basis_out[j];
        }
        const double nn = rin.norm();
        if (nn > 1e-7 * (1.0 + src[k].norm())) {
            if (std::abs(rout.norm() - nn) > 1e-6 * (1.0 + nn))
                throw GramMismatch("conjugation_mapping_pairs: inconsistent assignments");
            basis_in.push_back(rin / nn);
            basis_out.push_back(rout / nn);
        } else if (rout.norm() > 1e-6 * (1.0 + dst[k].norm())) {
            throw GramMismatch("conjugation_mapping_pairs: dependent source, independent target");
        }
    }

    CMatrix u;
    if (basis_in.empty()) {
        u = CMatrix::Identity(n, n);
    } else {
        const int r = static_cast<int>(basis_in.size());
        CMatrix bi(n, r), bo(n, r);
        for (int j = 0; j < r; ++j) {
            bi.col(j) = basis_in[j];
            bo.col(j) = basis_out[j];
        }
        u = bo * bi.adjoint();
        if (r < n) {
            // standard conjugation on an orthonormal basis of the untouched
            // complement: u gains Z Z^T with Z spanning span(bo)^perp
            Eigen::JacobiSVD<CMatrix> svd(CMatrix(CMatrix::Identity(n, n) - bo * bo.adjoint()),
                                          Eigen::ComputeFullU);
            const CMatrix z = svd.matrixU().leftCols(n - r);
            u += z * z.transpose();
        }
    }
    return Conjugation(std::move(u), tol);
}

Conjugation conj_angl(const CMatrix& u, const CVector& x, const CVector& y,
                      const ToleranceConfig& tol) {
    require_square(u, "conj_angl");
    const Eigen::Index n = u.rows();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("conj_angl: vector lengths do not match U");
    if (frob(u.adjoint() * u - CMatrix::Identity(n, n)) > tol.residual_abs * (1.0 + frob(u)))
        throw NotUnitary("conj_angl: U is not unitary");

    const double nx = x.norm(), ny = y.norm();
    if (std::abs(nx - ny) > tol.residual_abs * (1.0 + nx))
        throw HypothesisViolated("conj_angl: ||x|| != ||y||");
    if (nx <= tol.residual_abs)
        return standard_conjugation(static_cast<int>(n));

    const CVector xh = x / nx, yh = y / nx;
    const Complex axx = inner(u * xh, xh), ayy = inner(u * yh, yh);
    if (std::abs(axx - ayy) > tol.residual_abs * (1.0 + frob(u)))
        throw HypothesisViolated("conj_angl: <Ux,x> != <Uy,y>");

    const Complex alpha = axx;
    const CVector r = u * xh - alpha * xh;
    const CVector rp = u.adjoint() * yh - std::conj(alpha) * yh;
    const double beta = r.norm(), betap = rp.norm();

    if (beta <= tol.residual_abs * (1.0 + frob(u)))
        return conjugation_mapping_pairs(xh, yh, std::nullopt, std::nullopt, tol);

    // the proof's vectors: Ux = alpha x + beta a,  U*y = conj(alpha) y + beta b
    return conjugation_mapping_pairs(xh, yh, CVector(r / beta), CVector(rp / betap), tol);
}

ConjugationResiduals verify_conjugation(const Conjugation& c, const ToleranceConfig&) {
    return residuals_of(c.u());
}

CMatrix fixed_real_basis(const Conjugation& c, const ToleranceConfig&) {
    const int n = c.dim();
    CMatrix basis(n, n);
    int built = 0;
    while (built < n) {
        // deterministic seed: the canonical vector least covered so far
        CVector v = CVector::Zero(n);
        if (built == 0) {
            v(0) = 1.0;
        } else {
            const CMatrix done = basis.leftCols(built);
            int pick = 0;
            double best = -1.0;
            for (int j = 0; j < n; ++j) {
                CVector e = CVector::Zero(n);
                e(j) = 1.0;
                const double res = (e - done * (done.adjoint() * e)).norm();
                if (res > best + 1e-12) {
                    best = res;
                    pick = j;
                }
            }
            v(pick) = 1.0;
            v -= done * (done.adjoint() * v);
            v.normalize();
        }
        CVector w = v + apply(c, v);
        if (w.norm() <= 1e-6)
            w = Complex(0.0, 1.0) * (v - apply(c, v));
        w.normalize();
        // re-orthogonalize against earlier fixed vectors (they are C-fixed,
        // so the projection stays in the fixed set)
        if (built > 0) {
            const CMatrix done = basis.leftCols(built);
            w -= done * (done.adjoint() * w);
            w.normalize();
        }
        basis.col(built++) = w;
    }
    return basis;
}

double is_c_symmetric(const CMatrix& a, const Conjugation& c, const ToleranceConfig&) {
    require_square(a, "is_c_symmetric");
    if (a.rows() != c.dim()) throw DimensionMismatch("is_c_symmetric: dims differ");
    // C A* C has matrix u conj(A*) conj(u) = u A^T u^H for symmetric unitary u
    return frob(c.u() * a.transpose() * c.u().adjoint() - a);
}

double is_c_normal(const CMatrix& a, const Conjugation& c, const ToleranceConfig&) {
    require_square(a, "is_c_normal");
    if (a.rows() != c.dim()) throw DimensionMismatch("is_c_normal: dims differ");
    const CMatrix ata = a.adjoint() * a;
    return frob(c.u() * ata.conjugate() * c.u().adjoint() - a * a.adjoint());
}

}  // namespace cnormal
