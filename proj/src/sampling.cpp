#include "hadamard/sampling.hpp"

#include "hadamard/euclidean.hpp"
#include "hadamard/half_plane.hpp"
#include "hadamard/metric_tree.hpp"

namespace hadamard {

namespace {

class EuclideanSampler final : public PointSampler {
 public:
  explicit EuclideanSampler(int dim) : dim_(dim) {}
  Point sample(std::mt19937_64& rng) const override {
    std::normal_distribution<double> gauss(0.0, 2.0);
    std::vector<double> c(dim_);
    for (double& v : c) v = gauss(rng);
    return EuclideanPoint{std::move(c)};
  }

 private:
  int dim_;
};

class HalfPlaneSampler final : public PointSampler {
 public:
  Point sample(std::mt19937_64& rng) const override {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double a = 2.0 * gauss(rng);
    const double b = std::exp(gauss(rng));
    return HalfPlanePoint{a, b};
  }
};

class TreeSampler final : public PointSampler {
 public:
  explicit TreeSampler(const MetricTree& tree) : tree_(tree) {}
  Point sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> pick_edge(0, tree_.edge_count() - 1);
    const int e = pick_edge(rng);
    std::uniform_real_distribution<double> pick_offset(0.0, tree_.edge(e).length);
    return tree_.point_on(e, pick_offset(rng));
  }

 private:
  const MetricTree& tree_;
};

}  // namespace

std::unique_ptr<PointSampler> make_sampler(const Space& s) {
  if (const auto* e = dynamic_cast<const EuclideanSpace*>(&s))
    return std::make_unique<EuclideanSampler>(e->dimension());
  if (dynamic_cast<const HalfPlaneSpace*>(&s)) return std::make_unique<HalfPlaneSampler>();
  if (const auto* t = dynamic_cast<const MetricTree*>(&s))
    return std::make_unique<TreeSampler>(*t);
  throw DomainError("no sampler for space " + s.name());
}

}  // namespace hadamard
