#pragma once

#include "drcons/types.hpp"

namespace drcons {

// Solves L x = b for symmetric positive-definite L via Cholesky, with one
// step of iterative refinement. Residual contract: |L x - b| <= 1e-9 (|b| + 1).
// Throws NumericError naming the pivot if positivity is lost.
Vector spd_solve(const SpdMatrix& L, const Vector& b);

// Minimizer of |L^{1/2}(z_tilde - z)| over the Euclidean ball |z| <= radius.
// Interior points are returned unchanged; otherwise the KKT system
// z(mu) = (L + mu I)^{-1} L z_tilde is solved by monotone bisection on
// mu >= 0 until | |z(mu)| - radius | <= 1e-9 * radius (200-iteration cap,
// bracket [0, |L|_op |z_tilde| / radius]).
Vector proj_weighted_ball(const SpdMatrix& L, const Vector& z_tilde, double radius);

// Largest singular value via power iteration on M^T M (cap 500 iterations,
// convergence tolerance 1e-12).
double op_norm(const Matrix& m);

struct SpectralRadiusEstimate {
    double rho = 0.0;
    // Set when powering overflowed (entries past 1e150); rho is then +inf
    // and the closed loop must be treated as unstable.
    bool unstable = false;
};

// |M^n|_op^{1/n}: an upper-biased, computable estimate of the spectral
// radius. Default n_power = 64.
SpectralRadiusEstimate spectral_radius_estimate(const Matrix& m, int n_power = 64);

// Smallest eigenvalue of a symmetric matrix (1e-8 symmetry tolerance).
double eig_min_sym(const Matrix& s);

struct BallQuadraticSolution {
    Vector z;
    double value = 0.0;
};

// Exact minimizer of z^T P z - 2 q^T z + r over |z| <= radius, P symmetric
// PSD (eig_min >= -1e-8 required). Flat directions tie-break to the
// minimum-norm solution. Same KKT bisection as proj_weighted_ball, run in
// the eigenbasis of P.
BallQuadraticSolution minimize_quadratic_on_ball(const Matrix& P, const Vector& q, double r,
                                                 double radius);

}  // namespace drcons
