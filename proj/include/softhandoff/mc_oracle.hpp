#pragma once

#include <cstdint>

#include "softhandoff/gaussian_mi.hpp"

namespace softhandoff {

/// Monte-Carlo estimate of I(A;B|C). Draws `samples` vectors from the spec,
/// forms per-batch second-moment matrices and evaluates conditional Gaussian
/// entropies through Schur complements. Deterministic for a fixed seed.
class McEstimator {
 public:
  McEstimator(const JointGaussianSpec& spec, std::size_t samples, std::uint64_t seed,
              std::size_t batch = 100000);

  double mutual_information(const IndexSet& a, const IndexSet& b, const IndexSet& cond) const;
  std::size_t batches() const { return grams_.size(); }

 private:
  std::vector<Eigen::MatrixXd> grams_;  // per-batch sample covariance
  std::vector<bool> constant_;
};

double mc_mutual_information(const JointGaussianSpec& spec, const IndexSet& a, const IndexSet& b,
                             const IndexSet& cond, std::size_t samples, std::uint64_t seed);

}  // namespace softhandoff
