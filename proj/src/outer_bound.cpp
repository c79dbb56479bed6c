#include "softhandoff/outer_bound.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace softhandoff {

OuterBoundValues outer_constraints(const NetworkConfig& cfg_in, WeightedForm form) {
  const NetworkConfig cfg = validate_config(cfg_in);
  const double a = cfg.alpha * cfg.alpha;
  const double p = cfg.power;

  // Coefficients of the four sum-bound terms, then the two weighted-bound ones.
  double c_direct, c_cross, c_gain, c_conf, c_bracket, c_single;
  if (cfg.users.is_asymptotic()) {
    c_direct = c_cross = c_gain = 0.5;
    c_conf = 1.0;
    c_bracket = 0.5;
    c_single = 0.0;
  } else {
    const int k = cfg.users.value();
    const double kd = k;
    c_direct = ((k - 1 + 1) / 2 + 1) / kd;  // ceil((K-1)/2) + 1
    c_cross = ((k - 1) / 2) / kd;
    c_gain = (k / 2) / kd;
    c_conf = (k - 1) / kd;
    c_bracket = (k - 1) / (2.0 * kd);
    c_single = 1.0 / kd;
  }

  const double cross_gap = std::max(-std::log2(std::abs(cfg.alpha)), 0.0);
  const double direct = half_log2_1p((1.0 + a) * p);
  const double gain = half_log2_1p(a);
  const double product_log = std::log2((1.0 + (1.0 + a) * p) * (1.0 + a));
  const double bracket = (form == WeightedForm::as_printed ? 0.5 : 1.0) * product_log + 2.0 * cross_gap;

  OuterBoundValues v;
  v.sum_cap = c_direct * direct + c_cross * cross_gap + c_gain * gain + c_conf * cfg.conf_rate;
  v.weighted_cap = c_bracket * bracket + c_single * std::log2(1.0 + p);
  return v;
}

Region outer_region(const NetworkConfig& cfg, WeightedForm form) {
  const OuterBoundValues v = outer_constraints(cfg, form);
  const std::array<HalfPlane, 2> planes{{{1.0, 1.0, v.sum_cap}, {2.0, 1.0, v.weighted_cap}}};
  return region_from_halfplanes(planes);
}

}  // namespace softhandoff
