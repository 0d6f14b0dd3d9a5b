#include "drcons/ocoam.hpp"

#include <cmath>

namespace drcons {

Matrix make_H(const MarkovOperator& g, std::span<const Matrix> ys_newest_first) {
    if (ys_newest_first.empty())
        throw InvalidInputError("make_H: needs at least one context");
    Matrix h = Matrix::Zero(g.p(), ys_newest_first[0].cols());
    const int lags = std::min<int>(g.h_len(), static_cast<int>(ys_newest_first.size()) - 1);
    for (int i = 0; i <= lags; ++i) {
        const Matrix& y = ys_newest_first[static_cast<std::size_t>(i)];
        if (y.rows() != g.d_in())
            throw InvalidInputError("make_H: context rows do not match kernel d_in");
        if (y.cols() != h.cols())
            throw InvalidInputError("make_H: inconsistent context widths");
        h.noalias() += g.block(i) * y;
    }
    return h;
}

double unary_eval(const QuadLoss& loss, const Vector& v, const Matrix& H, const Vector& z) {
    if (H.rows() != v.size() || H.cols() != z.size())
        throw InvalidInputError("unary_eval: dimension mismatch");
    return loss.eval(v + H * z);
}

Vector unary_grad(const QuadLoss& loss, const Vector& v, const Matrix& H, const Vector& z) {
    if (H.rows() != v.size() || H.cols() != z.size())
        throw InvalidInputError("unary_grad: dimension mismatch");
    return H.transpose() * loss.grad(v + H * z);
}

double memory_eval(const QuadLoss& loss, const MarkovOperator& g,
                   std::span<const Matrix> ys_newest_first,
                   std::span<const Vector> zs_newest_first, const Vector& v) {
    if (ys_newest_first.size() != zs_newest_first.size())
        throw InvalidInputError("memory_eval: context/iterate count mismatch");
    Vector acc = v;
    const int lags = std::min<int>(g.h_len(), static_cast<int>(ys_newest_first.size()) - 1);
    for (int i = 0; i <= lags; ++i) {
        acc.noalias() += g.block(i) * (ys_newest_first[static_cast<std::size_t>(i)] *
                                       zs_newest_first[static_cast<std::size_t>(i)]);
    }
    return loss.eval(acc);
}

double kappa_lower_bound(const MarkovOperator& g, int grid_points) {
    if (grid_points < 16)
        throw InvalidInputError("kappa_lower_bound: need at least 16 grid points");
    const Eigen::Index p = g.p();
    const Eigen::Index din = g.d_in();
    double best = 1.0;
    for (int k = 0; k < grid_points; ++k) {
        const double theta = 2.0 * M_PI * k / grid_points;
        Matrix re = Matrix::Zero(p, din);
        Matrix im = Matrix::Zero(p, din);
        for (int i = 0; i <= g.h_len(); ++i) {
            re += std::cos(i * theta) * g.block(i);
            im -= std::sin(i * theta) * g.block(i);
        }
        // sigma_min of the complex matrix via the Gram of its real
        // embedding: eig pairs of [[A, -B], [B, A]] match |.|^2 of the
        // complex spectrum.
        const Matrix a = re.transpose() * re + im.transpose() * im;
        const Matrix b = re.transpose() * im - im.transpose() * re;
        Matrix gram(2 * din, 2 * din);
        gram.topLeftCorner(din, din) = a;
        gram.topRightCorner(din, din) = -b;
        gram.bottomLeftCorner(din, din) = b;
        gram.bottomRightCorner(din, din) = a;
        best = std::min(best, eig_min_sym(gram));
    }
    return std::max(0.0, std::min(1.0, best));
}

double c_psi_factor(const MarkovOperator& g, int h, long t) {
    if (h < 1) throw InvalidInputError("c_psi_factor: h must be >= 1");
    const double r_g = std::max(1.0, g.l1_op());
    const double tail = g.decay_psi(h + 1);
    return std::max(1.0, static_cast<double>(t) * tail * tail / (h * r_g * r_g));
}

double covariance_domination_gap(std::span<const Matrix> h_seq, std::span<const Matrix> y_seq,
                                 double kappa, int h, double r_h, double c_psi) {
    if (h_seq.empty() || y_seq.empty())
        throw InvalidInputError("covariance_domination_gap: empty sequences");
    const Eigen::Index d = h_seq[0].cols();
    for (const Matrix& m : h_seq)
        if (m.cols() != d) throw InvalidInputError("covariance_domination_gap: H width mismatch");
    for (const Matrix& m : y_seq)
        if (m.cols() != d) throw InvalidInputError("covariance_domination_gap: Y width mismatch");

    Matrix lhs = Matrix::Zero(d, d);
    for (const Matrix& m : h_seq) lhs.noalias() += m.transpose() * m;
    Matrix rhs = Matrix::Zero(d, d);
    for (const Matrix& m : y_seq) rhs.noalias() += m.transpose() * m;

    Matrix gap = lhs - 0.5 * kappa * rhs;
    gap.diagonal().array() += 5.0 * h * r_h * r_h * c_psi;
    return eig_min_sym(gap);
}

BallQuadraticSolution best_in_hindsight(std::span<const UnaryLossTerm> losses, double radius) {
    if (losses.empty())
        throw InvalidInputError("best_in_hindsight: needs at least one loss");
    HindsightAccumulator acc(losses[0].H.cols());
    for (const UnaryLossTerm& term : losses) acc.add(term.loss, term.v, term.H);
    return acc.solve(radius);
}

void HindsightAccumulator::add(const QuadLoss& loss, const Vector& v, const Matrix& H) {
    // sum_t (v + Hz - g)^T Q (v + Hz - g) = z^T P z - 2 q^T z + r with
    // P += H^T Q H, q += H^T Q (g - v), r += (v - g)^T Q (v - g).
    if (H.cols() != p_.rows())
        throw InvalidInputError("HindsightAccumulator: dimension mismatch");
    const Matrix qh = loss.Q() * H;
    p_.noalias() += H.transpose() * qh;
    const Vector d = loss.target() - v;
    q_.noalias() += H.transpose() * (loss.Q() * d);
    r_ += d.dot(loss.Q() * d);
    ++n_;
}

BallQuadraticSolution HindsightAccumulator::solve(double radius) const {
    return minimize_quadratic_on_ball(p_, q_, r_, radius);
}

}  // namespace drcons
