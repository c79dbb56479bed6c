#pragma once

#include <vector>

#include "softhandoff/gaussian_mi.hpp"
#include "softhandoff/region.hpp"

namespace softhandoff {

/// How mutual-information terms are evaluated.
enum class MiPath { closed_form, log_det };

struct SchemeOneEvaluation {
  PowerAllocation alloc;
  double r_fast_cap = 0.0;
  double r_sum_cap = 0.0;
};

struct SchemeTwoEvaluation {
  PowerAllocation alloc;
  double r_fast_cap = 0.0;
  double r_sum_cap = 0.0;
  double conf_load = 0.0;
  bool feasible = true;
};

/// `corrected` conditions the slow-rate term on U_2 instead of U_1.
SchemeOneEvaluation eval_scheme1(const PowerAllocation& alloc, const NetworkConfig& cfg, bool corrected = false,
                                 MiPath path = MiPath::closed_form);

/// `corrected` swaps the last term for I(X; Y, V'_{D-1} | V_{D-1}).
SchemeTwoEvaluation eval_scheme2(const PowerAllocation& alloc, const NetworkConfig& cfg, bool corrected = false,
                                 MiPath path = MiPath::closed_form);

enum class InnerScheme { one, two, best };

/// Allocation behind one vertex of an inner-region boundary.
struct Witness {
  Point2 point;
  int scheme = 1;
  PowerAllocation alloc;
  double r_fast_cap = 0.0;
  double r_sum_cap = 0.0;
};

struct InnerRegion {
  Region region;                   // polyline
  std::vector<Witness> witnesses;  // one per region vertex
};

/// Concave upper envelope of all allocations found by the search. Scheme 1
/// sweeps the 3-layer simplex with step 1/grid; scheme 2 runs a dynamic
/// program over a (2 * grid)-point ladder of remaining powers with a
/// Lagrangian sweep for the conferencing budget.
InnerRegion inner_region(const NetworkConfig& cfg, InnerScheme scheme, int grid_resolution = 64,
                         bool corrected = false);

/// Closure under relabelling fast rate as slow rate.
Region rate_transfer_closure(const Region& region);

}  // namespace softhandoff
