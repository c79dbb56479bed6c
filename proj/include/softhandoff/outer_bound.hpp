#pragma once

#include "softhandoff/model.hpp"
#include "softhandoff/region.hpp"

namespace softhandoff {

/// Which expression to use for the weighted (2 R_F + R_S) bound.
/// `as_printed` keeps the half on the product log; `from_derivation` drops
/// it, which is what the converse chain actually delivers.
enum class WeightedForm { as_printed, from_derivation };

struct OuterBoundValues {
  double sum_cap = 0.0;       // R_F + R_S <= sum_cap
  double weighted_cap = 0.0;  // 2 R_F + R_S <= weighted_cap
};

OuterBoundValues outer_constraints(const NetworkConfig& cfg, WeightedForm form = WeightedForm::as_printed);

Region outer_region(const NetworkConfig& cfg, WeightedForm form = WeightedForm::as_printed);

}  // namespace softhandoff
