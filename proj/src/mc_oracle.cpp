#include "softhandoff/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "softhandoff/simd/kernels.hpp"

namespace softhandoff {
namespace {

Eigen::MatrixXd block(const Eigen::MatrixXd& m, const IndexSet& rows, const IndexSet& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

// log det Cov(A | C) via the Schur complement.
double conditional_log_det(const Eigen::MatrixXd& s, const IndexSet& a, const IndexSet& c) {
  Eigen::MatrixXd saa = block(s, a, a);
  if (!c.empty()) {
    const Eigen::MatrixXd sac = block(s, a, c);
    const Eigen::LDLT<Eigen::MatrixXd> scc(block(s, c, c));
    saa -= sac * scc.solve(sac.transpose());
  }
  const Eigen::LDLT<Eigen::MatrixXd> fact(saa);
  return fact.vectorD().array().log().sum();
}

IndexSet clean(IndexSet s, const std::vector<bool>& constant, const IndexSet& minus = {}) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  s.erase(std::remove_if(s.begin(), s.end(),
                         [&](int i) {
                           return constant[i] || std::find(minus.begin(), minus.end(), i) != minus.end();
                         }),
          s.end());
  return s;
}

}  // namespace

McEstimator::McEstimator(const JointGaussianSpec& spec, std::size_t samples, std::uint64_t seed, std::size_t batch) {
  const auto n = spec.cov.rows();
  constant_.assign(n, false);
  IndexSet active;
  for (Eigen::Index i = 0; i < n; ++i) {
    constant_[i] = !(spec.cov(i, i) > 0.0);
    if (!constant_[i]) active.push_back(static_cast<int>(i));
  }
  const std::size_t d = active.size();
  if (d == 0 || samples == 0) return;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block(spec.cov, active, active));
  // Row j of the factor is sqrt(lambda_j) * v_j^T, so x = z * factor.
  std::vector<double> factor(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    const double s = std::sqrt(std::max(eig.eigenvalues()(j), 0.0));
    for (std::size_t i = 0; i < d; ++i) factor[j * d + i] = s * eig.eigenvectors()(i, j);
  }

  const simd::Kernels& k = simd::active_kernels();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z, x, gram;
  for (std::size_t done = 0; done < samples;) {
    const std::size_t rows = std::min(batch, samples - done);
    z.resize(rows * d);
    x.resize(rows * d);
    for (double& v : z) v = normal(rng);
    k.transform_rows(z.data(), rows, d, factor.data(), d, x.data());
    gram.assign(d * d, 0.0);
    k.gram_accumulate(x.data(), rows, d, gram.data());

    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) full(active[i], active[j]) = gram[i * d + j] / static_cast<double>(rows);
    }
    grams_.push_back(std::move(full));
    done += rows;
  }
}

double McEstimator::mutual_information(const IndexSet& a_in, const IndexSet& b_in, const IndexSet& c_in) const {
  const IndexSet c = clean(c_in, constant_);
  const IndexSet a = clean(a_in, constant_, c);
  const IndexSet b = clean(b_in, constant_, c);
  if (a.empty() || b.empty() || grams_.empty()) return 0.0;
  IndexSet bc = b;
  bc.insert(bc.end(), c.begin(), c.end());

  double total = 0.0;
  for (const auto& s : grams_) total += conditional_log_det(s, a, c) - conditional_log_det(s, a, bc);
  return 0.5 * total / static_cast<double>(grams_.size()) / std::log(2.0);
}

double mc_mutual_information(const JointGaussianSpec& spec, const IndexSet& a, const IndexSet& b, const IndexSet& cond,
                             std::size_t samples, std::uint64_t seed) {
  return McEstimator(spec, samples, seed).mutual_information(a, b, cond);
}

}  // namespace softhandoff
