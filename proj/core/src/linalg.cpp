#include "drcons/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "drcons/rng.hpp"

namespace drcons {

namespace {

// Locates the first nonpositive pivot of a failed Cholesky so the error can
// name it.
int find_bad_pivot(const Matrix& a) {
    const Eigen::Index n = a.rows();
    Matrix l = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = a(j, j) - l.row(j).head(j).squaredNorm();
        if (d <= 0.0 || !std::isfinite(d)) return static_cast<int>(j);
        l(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            l(i, j) = (a(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
        }
    }
    return -1;
}

}  // namespace

Vector spd_solve(const SpdMatrix& L, const Vector& b) {
    require_finite(b, "spd_solve rhs");
    if (b.size() != L.dim())
        throw InvalidInputError("spd_solve: dimension mismatch");
    Eigen::LLT<Matrix> llt(L.matrix());
    if (llt.info() != Eigen::Success) {
        const int pivot = find_bad_pivot(L.matrix());
        throw NumericError("spd_solve: factorization lost positivity at pivot " +
                           std::to_string(pivot));
    }
    Vector x = llt.solve(b);
    x += llt.solve(b - L.matrix() * x);
    return x;
}

Vector proj_weighted_ball(const SpdMatrix& L, const Vector& z_tilde, double radius) {
    if (!(radius > 0.0))
        throw InvalidInputError("proj_weighted_ball: radius must be positive");
    require_finite(z_tilde, "proj_weighted_ball point");
    if (z_tilde.size() != L.dim())
        throw InvalidInputError("proj_weighted_ball: dimension mismatch");

    const double norm = z_tilde.norm();
    if (norm <= radius) return z_tilde;

    const Vector rhs = L.matrix() * z_tilde;
    auto z_of_mu = [&](double mu) -> Vector {
        Matrix shifted = L.matrix();
        shifted.diagonal().array() += mu;
        return SpdMatrix(shifted).matrix().llt().solve(rhs);
    };

    double lo = 0.0;
    double hi = op_norm(L.matrix()) * norm / radius;
    Vector z = z_of_mu(hi);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        z = z_of_mu(mid);
        const double gap = z.norm() - radius;
        if (std::abs(gap) <= 1e-9 * radius) return z;
        if (gap > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    // Bisection exhausted the cap; hi-side iterate is feasible.
    z = z_of_mu(hi);
    return z;
}

double op_norm(const Matrix& m) {
    require_finite(m, "op_norm");
    if (m.size() == 0) return 0.0;

    // Iterate on the smaller Gram matrix.
    const bool wide = m.cols() > m.rows();
    const Eigen::Index n = wide ? m.rows() : m.cols();

    // Deterministic pseudo-random start vector; a fixed seed keeps results
    // reproducible while avoiding accidental orthogonality to the top
    // singular vector.
    Rng rng(0x5EED0F0EULL);
    Vector v = rng.gaussian_vector(n);
    v.normalize();

    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
        Vector w = wide ? Vector(m * (m.transpose() * v)) : Vector(m.transpose() * (m * v));
        const double lambda_new = v.dot(w);
        const double wn = w.norm();
        if (wn == 0.0) return 0.0;
        v = w / wn;
        if (std::abs(lambda_new - lambda) <= 1e-12 * std::max(1.0, std::abs(lambda_new))) {
            lambda = lambda_new;
            break;
        }
        lambda = lambda_new;
    }
    return std::sqrt(std::max(0.0, lambda));
}

SpectralRadiusEstimate spectral_radius_estimate(const Matrix& m, int n_power) {
    require_finite(m, "spectral_radius_estimate");
    if (m.rows() != m.cols())
        throw InvalidInputError("spectral_radius_estimate: matrix not square");
    if (n_power < 1)
        throw InvalidInputError("spectral_radius_estimate: n_power must be >= 1");

    constexpr double kOverflow = 1e150;
    Matrix acc = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    int e = n_power;
    while (e > 0) {
        if (e & 1) {
            acc = acc * base;
            if (acc.cwiseAbs().maxCoeff() > kOverflow)
                return {std::numeric_limits<double>::infinity(), true};
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
            if (base.cwiseAbs().maxCoeff() > kOverflow)
                return {std::numeric_limits<double>::infinity(), true};
        }
    }
    const double norm = op_norm(acc);
    if (norm == 0.0) return {0.0, false};
    return {std::pow(norm, 1.0 / n_power), false};
}

double eig_min_sym(const Matrix& s) {
    require_finite(s, "eig_min_sym");
    if (s.rows() != s.cols())
        throw InvalidInputError("eig_min_sym: matrix not square");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - s.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw InvalidInputError("eig_min_sym: matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s + s.transpose()),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

BallQuadraticSolution minimize_quadratic_on_ball(const Matrix& P, const Vector& q, double r,
                                                 double radius) {
    if (!(radius > 0.0))
        throw InvalidInputError("minimize_quadratic_on_ball: radius must be positive");
    if (P.rows() != P.cols() || q.size() != P.rows())
        throw InvalidInputError("minimize_quadratic_on_ball: dimension mismatch");
    require_finite(P, "minimize_quadratic_on_ball P");
    require_finite(q, "minimize_quadratic_on_ball q");

    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (P + P.transpose()));
    const Vector evals = es.eigenvalues();
    if (evals(0) < -1e-8)
        throw NumericError("minimize_quadratic_on_ball: P indefinite, eig_min = " +
                           std::to_string(evals(0)));
    const double lmax = std::max(0.0, evals(evals.size() - 1));
    const double tau = 1e-12 * std::max(1.0, lmax);
    const Vector qt = es.eigenvectors().transpose() * q;

    auto norm_at = [&](double mu) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < qt.size(); ++i) {
            const double denom = std::max(evals(i), 0.0) + mu;
            if (denom > 0.0) s += (qt(i) / denom) * (qt(i) / denom);
        }
        return std::sqrt(s);
    };
    auto z_at = [&](double mu) -> Vector {
        Vector zt(qt.size());
        for (Eigen::Index i = 0; i < qt.size(); ++i) {
            const double denom = std::max(evals(i), 0.0) + mu;
            zt(i) = denom > 0.0 ? qt(i) / denom : 0.0;
        }
        return es.eigenvectors() * zt;
    };

    // Minimum-norm unconstrained stationary point: drop components in the
    // (numerical) null space of P unless q has weight there.
    bool null_descent = false;
    double interior_norm_sq = 0.0;
    for (Eigen::Index i = 0; i < qt.size(); ++i) {
        if (evals(i) <= tau) {
            if (std::abs(qt(i)) > 1e-12 * std::max(1.0, q.norm())) null_descent = true;
        } else {
            interior_norm_sq += (qt(i) / evals(i)) * (qt(i) / evals(i));
        }
    }

    Vector z;
    if (!null_descent && std::sqrt(interior_norm_sq) <= radius) {
        Vector zt(qt.size());
        for (Eigen::Index i = 0; i < qt.size(); ++i)
            zt(i) = evals(i) > tau ? qt(i) / evals(i) : 0.0;
        z = es.eigenvectors() * zt;
    } else {
        double lo = 0.0;
        double hi = std::max(q.norm() / radius, tau);
        while (norm_at(hi) > radius) hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (norm_at(mid) > radius)
                lo = mid;
            else
                hi = mid;
        }
        z = z_at(hi);
    }

    const double value = z.dot(P * z) - 2.0 * q.dot(z) + r;
    return {std::move(z), value};
}

}  // namespace drcons
