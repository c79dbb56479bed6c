#pragma once

#include <string>
#include <vector>

#include "softhandoff/model.hpp"

namespace softhandoff {

/// Cells first..last (1-based). Transmitters first..last-1 are active and
/// transmitter `last` is silenced, which isolates the subnet.
struct Subnet {
  int first = 1;
  int last = 1;
  int active() const { return last - first; }
};

struct SilencingPattern {
  int users = 0;
  int d_max = 1;
  int offset = 0;
  std::vector<int> silenced;
  std::vector<Subnet> subnets;
};

/// Silences every (2 d_max + 2)-th transmitter, shifted by `offset`, plus
/// the last transmitter. Throws ConfigError("K", ...) when K < 2 d_max + 2.
SilencingPattern build_silencing(int users, int d_max, int offset = 0);

enum class ConfMode { rx, tx };
enum class UserKind { fast, slow, silenced };
enum class PayloadKind { decoded_message_estimate, quantization_index };

/// One conferencing transfer between adjacent receivers (rx mode) or
/// adjacent transmitters (tx mode).
struct ConferenceMessage {
  int subnet = 0;
  int round = 1;
  int from = 0;
  int to = 0;
  int user = 0;  // owner of the forwarded message or quantised codeword
  double payload_rate = 0.0;
  PayloadKind kind = PayloadKind::decoded_message_estimate;
};

struct UserRate {
  int user = 0;
  int subnet = 0;
  UserKind kind = UserKind::silenced;
  double rate = 0.0;
  int decode_round = 0;
};

/// Event-log record: event_kind is "silence", "decode" or "conference".
struct SimEvent {
  int subnet = 0;
  int user = 0;
  std::string event_kind;
  int round = 0;
  double rate_bits = 0.0;
  int from = 0;
  int to = 0;
};

struct RateReport {
  ConfMode mode = ConfMode::rx;
  int users = 0;
  std::vector<UserRate> per_user;
  double avg_fast = 0.0;
  double avg_slow = 0.0;
  std::vector<ConferenceMessage> conf_log;
  std::vector<SimEvent> events;
};

RateReport run_rx_conferencing(const NetworkConfig& cfg, const SilencingPattern& pattern);
RateReport run_tx_conferencing(const NetworkConfig& cfg, const SilencingPattern& pattern);
RateReport run_conferencing(ConfMode mode, const NetworkConfig& cfg, const SilencingPattern& pattern);

struct ConferencingLoad {
  double per_link_max_prelog = 0.0;
  double network_avg_prelog = 0.0;
};

/// Loads normalised by 1/2 log2 P; needs P > 1 unless the log is empty.
ConferencingLoad conferencing_load(const RateReport& report, double power);

/// Load with the silencing offset rotated over all 2 d_max + 2 phases in
/// equal time shares.
ConferencingLoad rotated_conferencing_load(ConfMode mode, const NetworkConfig& cfg, int users);

/// Every message leaves its sender strictly after everything it depends on.
bool audit_round_causality(const RateReport& report);

struct ConvergenceRow {
  double p = 0.0;
  double s_fast_est = 0.0;
  double s_slow_est = 0.0;
  double avg_link_prelog = 0.0;
  double max_link_prelog = 0.0;
  double avg_fast_rate = 0.0;
  double avg_slow_rate = 0.0;
};

struct MuxMeasurement {
  MuxPair estimate;  // ratio at the largest power
  MuxPair secant;    // slope of the last two ladder points against 1/2 log2(1+P)
  std::vector<ConvergenceRow> table;
};

/// Throws std::invalid_argument unless the ladder is increasing with at
/// least three powers.
MuxMeasurement measure_mux_gains(ConfMode mode, const NetworkConfig& cfg_base, const SilencingPattern& pattern,
                                 const std::vector<double>& p_ladder);

const char* to_string(UserKind kind);
const char* to_string(PayloadKind kind);
const char* to_string(ConfMode mode);

}  // namespace softhandoff
