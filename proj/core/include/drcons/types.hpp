#pragma once

#include <Eigen/Dense>

#include "drcons/errors.hpp"

namespace drcons {

// Dense real carriers used throughout. Row-major storage is an Eigen
// implementation detail; all contracts are written against values, not
// layout.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline bool all_finite(const Matrix& m) { return m.allFinite(); }
inline bool all_finite(const Vector& v) { return v.allFinite(); }

inline void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) throw InvalidInputError(std::string(what) + ": non-finite entries");
}
inline void require_finite(const Vector& v, const char* what) {
    if (!v.allFinite()) throw InvalidInputError(std::string(what) + ": non-finite entries");
}

// Symmetric positive-definite matrix. Symmetry is validated on
// construction (1e-10 relative tolerance); positivity is guaranteed by the
// way instances are built (lambda*I plus sums of Gram matrices) and
// enforced by the factorizations that consume it.
class SpdMatrix {
  public:
    explicit SpdMatrix(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw InvalidInputError("SpdMatrix: not square");
        require_finite(m_, "SpdMatrix");
        const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
        const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-10 * scale)
            throw InvalidInputError("SpdMatrix: not symmetric within 1e-10 relative tolerance");
        // Re-symmetrize so downstream factorizations see an exactly
        // symmetric matrix.
        m_ = 0.5 * (m_ + m_.transpose());
    }

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }

  private:
    Matrix m_;
};

}  // namespace drcons
