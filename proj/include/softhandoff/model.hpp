#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace softhandoff {

/// Raised when a parameter violates the network model. `field()` names the
/// offending parameter so front ends can report it.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Number of Tx/Rx pairs: a finite count or the K -> infinity limit.
class UserCount {
 public:
  static constexpr UserCount finite(int k) { return UserCount(k); }
  static constexpr UserCount asymptotic() { return UserCount(0); }

  constexpr bool is_asymptotic() const { return k_ == 0; }
  /// Only meaningful when finite.
  constexpr int value() const { return k_; }

  friend constexpr bool operator==(UserCount, UserCount) = default;

 private:
  constexpr explicit UserCount(int k) : k_(k) {}
  int k_;
};

/// Physical and protocol parameters of the soft-handoff network.
struct NetworkConfig {
  UserCount users = UserCount::asymptotic();
  double alpha = 0.2;        // cross gain, 0 < |alpha| < 1
  double power = 5.0;        // per-user average power P
  double conf_rate = 0.0;    // conferencing rate pi, bits per channel use
  int max_rounds = 1;        // D_max
  double conf_prelog = 0.0;  // mu
};

/// Returns `cfg` unchanged, or throws ConfigError naming the violated field.
NetworkConfig validate_config(const NetworkConfig& cfg);

/// Average (fast, slow) rates in bits per channel use.
struct RatePair {
  double r_fast = 0.0;
  double r_slow = 0.0;
};

/// (fast, slow) multiplexing gains.
struct MuxPair {
  double s_fast = 0.0;
  double s_slow = 0.0;
};

/// 1/2 log2(1 + snr): Gaussian point-to-point capacity in bits.
inline double half_log2_1p(double snr) { return 0.5 * std::log2(1.0 + snr); }

}  // namespace softhandoff
