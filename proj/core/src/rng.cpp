#include "drcons/rng.hpp"

#include <cmath>

namespace drcons {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t Rng::next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix64(seed_ + counter_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    // u1 in (0, 1] so the log is always finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
}

int Rng::rademacher() {
    return (next_u64() >> 63) ? 1 : -1;
}

Vector Rng::gaussian_vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = gaussian();
    return v;
}

Matrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = gaussian();
    return m;
}

Rng Rng::split(std::uint64_t tag) const {
    return Rng(mix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (tag + 1))));
}

}  // namespace drcons
