#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "softhandoff/model.hpp"
#include "softhandoff/region.hpp"

namespace softhandoff {

/// Exact rational p/q with q > 0 in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Exact conversion when `x` equals p/q with q <= max_den to within
  /// 1e-15 relative, otherwise nullopt.
  static std::optional<Rational> from_double(double x, std::int64_t max_den = 1000000);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator<(Rational a, Rational b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class MuxMode { rx_bidirectional, rx_unidirectional, tx_conferencing };

struct MuxRegionSpec {
  MuxMode mode = MuxMode::rx_bidirectional;
  double mu = 0.0;
  int d_max = 1;
};

/// Sum-gain cap c of the region {2x + y <= 1, x + y <= c}.
double mux_sum_cap(const MuxRegionSpec& spec);

/// Polygon, vertices counterclockwise from the origin. Exact rational
/// arithmetic is used whenever mu is a small-denominator rational.
Region mux_region(const MuxRegionSpec& spec);

/// Single-user, full-sum and round-limited corner points, in that order.
std::vector<MuxPair> corner_points(int d_max, double mu);

/// D / (2D + 2).
double mu_max(int d_max);

struct TimeSharePoint {
  MuxPair point;
  double weight = 0.0;  // share of the round-limited corner scheme
};

/// (1/2 - mu, 2 mu). Throws std::invalid_argument beyond mu_max.
TimeSharePoint timeshare_point(double mu, int d_max);

}  // namespace softhandoff
