#pragma once

#include <memory>
#include <random>

#include "hadamard/space.hpp"

namespace hadamard {

// Seeded random points for fuzzing and the generic solvers: Gaussian
// coordinates in R^n, log-normal heights on the half-plane, uniform
// edge-plus-offset on trees.
class PointSampler {
 public:
  virtual ~PointSampler() = default;
  virtual Point sample(std::mt19937_64& rng) const = 0;
};

std::unique_ptr<PointSampler> make_sampler(const Space& s);

}  // namespace hadamard
