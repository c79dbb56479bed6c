#include "softhandoff/model.hpp"

namespace softhandoff {

NetworkConfig validate_config(const NetworkConfig& cfg) {
  if (!cfg.users.is_asymptotic() && cfg.users.value() < 2) {
    throw ConfigError("K", "K must be at least 2");
  }
  if (!std::isfinite(cfg.alpha) || cfg.alpha == 0.0) {
    throw ConfigError("alpha", "alpha must be nonzero");
  }
  if (std::abs(cfg.alpha) >= 1.0) {
    throw ConfigError("alpha", "alpha magnitude must be < 1");
  }
  if (!std::isfinite(cfg.power) || cfg.power <= 0.0) {
    throw ConfigError("P", "power P must be positive");
  }
  if (!std::isfinite(cfg.conf_rate) || cfg.conf_rate < 0.0) {
    throw ConfigError("pi", "conferencing rate pi must be nonnegative");
  }
  if (cfg.max_rounds < 1) {
    throw ConfigError("d_max", "d_max must be at least 1");
  }
  if (!std::isfinite(cfg.conf_prelog) || cfg.conf_prelog < 0.0) {
    throw ConfigError("mu", "conferencing prelog mu must be nonnegative");
  }
  return cfg;
}

}  // namespace softhandoff
