#include "softhandoff/mux_gain.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace softhandoff {
namespace {

Rational reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

void check_spec(double mu, int d_max) {
  if (!std::isfinite(mu) || mu < 0.0) throw ConfigError("mu", "conferencing prelog mu must be nonnegative");
  if (d_max < 1) throw ConfigError("d_max", "d_max must be at least 1");
}

template <typename T>
T sum_cap_of(MuxMode mode, T mu, int d_max, T half, T one) {
  const T d = T(d_max);
  if (mode == MuxMode::rx_unidirectional) {
    const T a = half + mu / T(2);
    const T b = (d + one) / (d + T(2));
    return b < a ? b : a;
  }
  const T a = half + mu;
  const T b = (T(2) * d + one) / (T(2) * d + T(2));
  return b < a ? b : a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  // Continued-fraction convergents.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (approx == x || std::abs(approx - x) <= 1e-15 * std::max(1.0, std::abs(x))) return Rational(p1, q1);
    const double frac = rest - a;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

Rational operator+(Rational a, Rational b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}
Rational operator-(Rational a, Rational b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
}
Rational operator*(Rational a, Rational b) {
  return reduce(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}
Rational operator/(Rational a, Rational b) {
  return reduce(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}
bool operator<(Rational a, Rational b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

double mux_sum_cap(const MuxRegionSpec& spec) {
  check_spec(spec.mu, spec.d_max);
  if (auto mu = Rational::from_double(spec.mu)) {
    return sum_cap_of<Rational>(spec.mode, *mu, spec.d_max, Rational(1, 2), Rational(1)).to_double();
  }
  return sum_cap_of<double>(spec.mode, spec.mu, spec.d_max, 0.5, 1.0);
}

Region mux_region(const MuxRegionSpec& spec) {
  check_spec(spec.mu, spec.d_max);
  Region region;
  region.kind = RegionKind::polygon;

  if (auto mu = Rational::from_double(spec.mu)) {
    const Rational half(1, 2);
    const Rational c = sum_cap_of<Rational>(spec.mode, *mu, spec.d_max, half, Rational(1));
    region.vertices = {{0.0, 0.0}, {0.5, 0.0}};
    if (half < c) region.vertices.push_back({(Rational(1) - c).to_double(), (Rational(2) * c - Rational(1)).to_double()});
    region.vertices.push_back({0.0, c.to_double()});
    return region;
  }
  const double c = sum_cap_of<double>(spec.mode, spec.mu, spec.d_max, 0.5, 1.0);
  region.vertices = {{0.0, 0.0}, {0.5, 0.0}};
  if (c - 0.5 > kVertexMergeTol) region.vertices.push_back({1.0 - c, 2.0 * c - 1.0});
  region.vertices.push_back({0.0, c});
  return region;
}

double mu_max(int d_max) {
  check_spec(0.0, d_max);
  return static_cast<double>(d_max) / (2.0 * d_max + 2.0);
}

std::vector<MuxPair> corner_points(int d_max, double mu) {
  const double c = mux_sum_cap({MuxMode::rx_bidirectional, mu, d_max});
  const double cells = 2.0 * d_max + 2.0;
  return {{0.5, 0.0}, {0.0, c}, {1.0 / cells, 2.0 * d_max / cells}};
}

TimeSharePoint timeshare_point(double mu, int d_max) {
  check_spec(mu, d_max);
  const double top = mu_max(d_max);
  if (mu > top + 1e-12) throw std::invalid_argument("beyond time-sharing range");
  return {{0.5 - mu, 2.0 * mu}, mu / top};
}

}  // namespace softhandoff
