#pragma once

#include <cstdint>

#include "drcons/types.hpp"

namespace drcons {

// Mixes a 64-bit value through the SplitMix64 finalizer. Used both by Rng
// and by the stateless hash-based disturbance generators.
std::uint64_t mix64(std::uint64_t x);

// Deterministic counter-based generator. The stream is a pure function of
// (seed, number of draws); identical seeds produce identical streams
// across runs and platforms. Gaussians come from Box-Muller and always
// consume exactly two raw draws, so the counter position stays a simple
// function of the call sequence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64();

    // Uniform on [0, 1).
    double uniform();

    // Standard normal.
    double gaussian();

    // +1 or -1, one bit of the stream.
    int rademacher();

    Vector gaussian_vector(Eigen::Index n);
    Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

    // Independent child stream; deterministic in (seed, tag).
    Rng split(std::uint64_t tag) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace drcons
