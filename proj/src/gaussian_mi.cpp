#include "softhandoff/gaussian_mi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace softhandoff {
namespace {

IndexSet normalized(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Natural log-determinant of a principal submatrix.
double log_det(const Eigen::MatrixXd& cov, const IndexSet& idx) {
  if (idx.empty()) return 0.0;
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) sub(i, j) = cov(idx[i], idx[j]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("singular covariance block in gaussian_mi");
  const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
  const double scale = sub.diagonal().maxCoeff();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(diag(i) * diag(i) > 1e-14 * scale)) throw std::invalid_argument("singular covariance block in gaussian_mi");
    sum += std::log(diag(i));
  }
  return 2.0 * sum;
}

void check_index(const JointGaussianSpec& spec, const IndexSet& s) {
  for (int i : s) {
    if (i < 0 || i >= spec.cov.rows()) throw std::invalid_argument("variable index out of range");
  }
}

}  // namespace

double PowerAllocation::total() const { return std::accumulate(fractions.begin(), fractions.end(), 0.0); }

void validate_allocation(const PowerAllocation& alloc) {
  if (alloc.fractions.empty()) throw std::invalid_argument("allocation needs at least one layer");
  for (double b : alloc.fractions) {
    if (!std::isfinite(b) || b < 0.0) throw std::invalid_argument("power fractions must be nonnegative");
  }
  if (alloc.total() > 1.0 + 1e-12) throw std::invalid_argument("power fractions sum above 1");
}

JointGaussianSpec layered_covariance(const PowerAllocation& alloc, const NetworkConfig& cfg) {
  validate_allocation(alloc);
  JointGaussianSpec spec;
  spec.layers = alloc.layers();
  const int n = 2 * spec.layers + 2;
  spec.cov = Eigen::MatrixXd::Zero(n, n);
  spec.labels.resize(n);

  const double a = cfg.alpha;
  const int y = spec.output();
  for (int i = 0; i < spec.layers; ++i) {
    const double v = alloc.fractions[i] * cfg.power;
    const int own = spec.own_layer(i);
    const int nb = spec.neighbor_layer(i);
    spec.cov(own, own) = v;
    spec.cov(nb, nb) = v;
    spec.cov(own, y) = spec.cov(y, own) = v;
    spec.cov(nb, y) = spec.cov(y, nb) = a * v;
    spec.labels[own] = "W" + std::to_string(i + 1);
    spec.labels[nb] = "W'" + std::to_string(i + 1);
  }
  spec.cov(spec.noise(), spec.noise()) = 1.0;
  spec.cov(spec.noise(), y) = spec.cov(y, spec.noise()) = 1.0;
  spec.cov(y, y) = 1.0 + (1.0 + a * a) * cfg.power * alloc.total();
  spec.labels[spec.noise()] = "Z";
  spec.labels[y] = "Y";
  return spec;
}

IndexSet own_prefix(const JointGaussianSpec& spec, int depth) {
  IndexSet s;
  for (int i = 0; i < depth; ++i) s.push_back(spec.own_layer(i));
  return s;
}

IndexSet neighbor_prefix(const JointGaussianSpec& spec, int depth) {
  IndexSet s;
  for (int i = 0; i < depth; ++i) s.push_back(spec.neighbor_layer(i));
  return s;
}

double gaussian_mi(const JointGaussianSpec& spec, const IndexSet& a_in, const IndexSet& b_in, const IndexSet& c_in) {
  check_index(spec, a_in);
  check_index(spec, b_in);
  check_index(spec, c_in);
  const auto live = [&](IndexSet s) {
    s = normalized(std::move(s));
    s.erase(std::remove_if(s.begin(), s.end(), [&](int i) { return !(spec.cov(i, i) > 0.0); }), s.end());
    return s;
  };
  const IndexSet c = live(c_in);
  const IndexSet a = set_minus(live(a_in), c);
  const IndexSet b = set_minus(live(b_in), c);
  if (a.empty() || b.empty()) return 0.0;

  const IndexSet ac = set_union(a, c);
  const IndexSet bc = set_union(b, c);
  const IndexSet abc = set_union(ac, b);
  const double nats = 0.5 * (log_det(spec.cov, ac) + log_det(spec.cov, bc) - log_det(spec.cov, c) -
                             log_det(spec.cov, abc));
  return std::max(0.0, nats / std::log(2.0));
}

SchemeOneTerms scheme1_terms(const PowerAllocation& alloc, const NetworkConfig& cfg) {
  if (alloc.layers() != 3) throw std::invalid_argument("scheme 1 needs exactly 3 layers");
  const JointGaussianSpec spec = layered_covariance(alloc, cfg);
  const IndexSet y{spec.output()};
  const IndexSet u1 = own_prefix(spec, 1);
  const IndexSet u2 = own_prefix(spec, 2);
  const IndexSet x = own_prefix(spec, 3);
  IndexSet y_u1p = neighbor_prefix(spec, 1);
  y_u1p.push_back(spec.output());

  SchemeOneTerms t;
  t.i_u2_y = gaussian_mi(spec, u2, y, {});
  t.i_u2_y_given_u1 = gaussian_mi(spec, u2, y, u1);
  t.i_x_y_u1p_given_u1 = gaussian_mi(spec, x, y_u1p, u1);
  t.i_x_y_u1p_given_u2 = gaussian_mi(spec, x, y_u1p, u2);
  return t;
}

SchemeTwoTerms scheme2_terms(const PowerAllocation& alloc, const NetworkConfig& cfg) {
  const int d_max = cfg.max_rounds;
  if (d_max < 1 || alloc.layers() != d_max + 1) throw std::invalid_argument("scheme 2 needs d_max + 1 layers");
  const JointGaussianSpec spec = layered_covariance(alloc, cfg);
  const int y = spec.output();
  const auto with_y = [y](IndexSet s) {
    s.push_back(y);
    return s;
  };

  SchemeTwoTerms t;
  t.i_u_y = gaussian_mi(spec, own_prefix(spec, 1), {y}, {});
  for (int d = 1; d < d_max; ++d) {
    t.chain.push_back(gaussian_mi(spec, own_prefix(spec, d + 1), with_y(neighbor_prefix(spec, d)), own_prefix(spec, d)));
  }
  const IndexSet x = own_prefix(spec, d_max + 1);
  t.i_final = gaussian_mi(spec, x, with_y(neighbor_prefix(spec, d_max + 1)), own_prefix(spec, d_max));
  t.i_final_corrected = gaussian_mi(spec, x, with_y(neighbor_prefix(spec, d_max)), own_prefix(spec, d_max));
  return t;
}

}  // namespace softhandoff
