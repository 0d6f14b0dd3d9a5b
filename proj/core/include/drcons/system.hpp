#pragma once

#include <utility>

#include "drcons/linalg.hpp"
#include "drcons/markov.hpp"
#include "drcons/rng.hpp"

namespace drcons {

// Partially observed linear plant x' = A x + B u + w, y = C x + e, with a
// static output-feedback gain K whose closed loop A + B K C must be stable
// (spectral radius estimate below 1 with the default 64-step power).
class LinearSystem {
  public:
    LinearSystem(Matrix A, Matrix B, Matrix C, Matrix K);

    Eigen::Index dx() const { return A.rows(); }
    Eigen::Index du() const { return B.cols(); }
    Eigen::Index dy() const { return C.rows(); }

    Matrix closed_loop() const { return A + B * K * C; }
    double rho_hat() const { return rho_hat_; }

    Matrix A, B, C, K;

  private:
    double rho_hat_ = 0.0;
};

// One simulation step: returns (x_next, y) = (A x + B u + w, C x + e).
std::pair<Vector, Vector> simulate_step(const LinearSystem& sys, const Vector& x, const Vector& u,
                                        const Vector& w, const Vector& e);

// Impulse response of the stabilized loop from exogenous input to the
// stacked (y, u) deviation, truncated at h:
//   G^[0] = [0; I_du],  G^[i] = [C; K C] (A + B K C)^{i-1} B.
MarkovOperator nominal_markov(const LinearSystem& sys, int h);

// Conversion operator between static feedback laws, exactly as printed:
//   G^[i] = 1{i=0} K_pi + (K_pi - K) C (A + B K C)^{i-1} B (K_pi - K).
// See static_drc_policy for the form that actually replicates K_pi through
// the exogenous channel.
MarkovOperator static_conversion(const LinearSystem& sys, const Matrix& k_pi, int h);

// Blocks of the exogenous-input law u_ex_t = sum_i M^[i] y^K_{t-i} that
// reproduces the static policy u = K_pi y exactly:
//   M^[0] = K_pi - K,  M^[i] = (K_pi - K) C (A + B K_pi C)^{i-1} B (K_pi - K).
std::vector<Matrix> static_drc_policy(const LinearSystem& sys, const Matrix& k_pi, int m);

struct RandomSystemSpec {
    int dx = 3;
    int du = 1;
    int dy = 2;
    // Target spectral radius for A (A is rescaled to hit it).
    double rho = 0.7;
    // Largest K scale tried when searching for a nonzero stabilizing gain.
    double k_scale = 0.5;
};

// Random stable A (rescaled to the target spectral radius), random B and C,
// and a nonzero stabilizing K found by shrinking a random gain until the
// closed loop stays stable.
LinearSystem make_random_system(const RandomSystemSpec& spec, std::uint64_t seed);

// A priori bound on the nominal iterates |(y^K_t, u^K_t)| given disturbance
// bounds, via the closed-loop power series.
double nat_radius_bound(const LinearSystem& sys, double w_max, double e_max);

}  // namespace drcons
