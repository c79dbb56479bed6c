#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "softhandoff/gaussian_mi.hpp"

namespace softhandoff {
namespace {

double half_log2_ratio(double num, double den) { return std::max(0.0, 0.5 * std::log2(num / den)); }

// r[j] = power left after the first j layers, r[0] = total.
std::vector<double> remaining_powers(const PowerAllocation& alloc, double power) {
  const auto& f = alloc.fractions;
  std::vector<double> r(f.size() + 1, 0.0);
  for (std::size_t j = f.size(); j-- > 0;) r[j] = r[j + 1] + f[j] * power;
  return r;
}

}  // namespace

SchemeOneTerms scheme1_terms_closed(const PowerAllocation& alloc, const NetworkConfig& cfg) {
  if (alloc.layers() != 3) throw std::invalid_argument("scheme 1 needs exactly 3 layers");
  validate_allocation(alloc);
  const double a = cfg.alpha * cfg.alpha;
  const auto r = remaining_powers(alloc, cfg.power);

  SchemeOneTerms t;
  t.i_u2_y = half_log2_ratio(1.0 + r[0] + a * r[0], 1.0 + r[2] + a * r[0]);
  t.i_u2_y_given_u1 = half_log2_ratio(1.0 + r[1] + a * r[0], 1.0 + r[2] + a * r[0]);
  t.i_x_y_u1p_given_u1 = half_log2_ratio(1.0 + r[1] + a * r[1], 1.0 + a * r[1]);
  t.i_x_y_u1p_given_u2 = half_log2_ratio(1.0 + r[2] + a * r[1], 1.0 + a * r[1]);
  return t;
}

SchemeTwoTerms scheme2_terms_from_remaining(const std::vector<double>& r, double alpha) {
  if (r.size() < 2) throw std::invalid_argument("scheme 2 needs at least two layers");
  const double a = alpha * alpha;
  const std::size_t d_max = r.size() - 1;

  SchemeTwoTerms t;
  t.i_u_y = half_log2_ratio(1.0 + (1.0 + a) * r[0], 1.0 + r[1] + a * r[0]);
  for (std::size_t d = 1; d < d_max; ++d) {
    t.chain.push_back(half_log2_ratio(1.0 + (1.0 + a) * r[d], 1.0 + r[d + 1] + a * r[d]));
  }
  t.i_final = half_log2_ratio(1.0 + r[d_max], 1.0);
  t.i_final_corrected = half_log2_ratio(1.0 + (1.0 + a) * r[d_max], 1.0 + a * r[d_max]);
  return t;
}

SchemeTwoTerms scheme2_terms_closed(const PowerAllocation& alloc, const NetworkConfig& cfg) {
  if (cfg.max_rounds < 1 || alloc.layers() != cfg.max_rounds + 1) {
    throw std::invalid_argument("scheme 2 needs d_max + 1 layers");
  }
  validate_allocation(alloc);
  auto r = remaining_powers(alloc, cfg.power);
  r.pop_back();  // nothing is left after the last layer
  return scheme2_terms_from_remaining(r, cfg.alpha);
}

}  // namespace softhandoff
