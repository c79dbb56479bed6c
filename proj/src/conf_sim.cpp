#include "softhandoff/conf_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace softhandoff {
namespace {

void add_user(RateReport& r, int subnet, int user, UserKind kind, double rate, int decode_round) {
  r.per_user.push_back({user, subnet, kind, rate, decode_round});
}

void add_message(RateReport& r, int subnet, int round, int from, int to, int owner, double rate, PayloadKind kind) {
  r.conf_log.push_back({subnet, round, from, to, owner, rate, kind});
  r.events.push_back({subnet, owner, "conference", round, rate, from, to});
}

void finish(RateReport& r) {
  std::sort(r.per_user.begin(), r.per_user.end(), [](const UserRate& a, const UserRate& b) { return a.user < b.user; });
  double fast = 0.0, slow = 0.0;
  for (const auto& u : r.per_user) {
    if (u.kind == UserKind::fast) fast += u.rate;
    if (u.kind == UserKind::slow) slow += u.rate;
  }
  r.avg_fast = fast / r.users;
  r.avg_slow = slow / r.users;
  std::stable_sort(r.events.begin(), r.events.end(), [](const SimEvent& a, const SimEvent& b) {
    return std::tie(a.subnet, a.round) < std::tie(b.subnet, b.round);
  });
}

void check_pattern(const NetworkConfig& cfg, const SilencingPattern& pattern) {
  validate_config(cfg);
  if (pattern.users < 2 * pattern.d_max + 2 || pattern.subnets.empty()) {
    throw std::invalid_argument("invalid silencing pattern");
  }
}

}  // namespace

SilencingPattern build_silencing(int users, int d_max, int offset) {
  if (d_max < 1) throw ConfigError("d_max", "d_max must be at least 1");
  const int period = 2 * d_max + 2;
  if (users < period) throw ConfigError("K", "K too small");
  if (offset < 0 || offset >= period) throw ConfigError("offset", "silencing offset out of range");

  SilencingPattern p;
  p.users = users;
  p.d_max = d_max;
  p.offset = offset;
  for (int c = 1; c <= users; ++c) {
    if ((c - offset) % period == 0 || c == users) p.silenced.push_back(c);
  }
  int start = 1;
  for (int s : p.silenced) {
    p.subnets.push_back({start, s});
    start = s + 1;
  }
  return p;
}

RateReport run_rx_conferencing(const NetworkConfig& cfg, const SilencingPattern& pattern) {
  check_pattern(cfg, pattern);
  RateReport r;
  r.mode = ConfMode::rx;
  r.users = pattern.users;
  const double direct = half_log2_1p(cfg.power);
  const double cross = half_log2_1p(cfg.alpha * cfg.alpha * cfg.power);

  for (int s = 0; s < static_cast<int>(pattern.subnets.size()); ++s) {
    const Subnet& net = pattern.subnets[s];
    const int m = net.active();
    const int f = (m + 1) / 2;
    const auto cell = [&](int local) { return net.first + local - 1; };

    add_user(r, s, cell(m + 1), UserKind::silenced, 0.0, 0);
    r.events.push_back({s, cell(m + 1), "silence", 0, 0.0, cell(m + 1), cell(m + 1)});

    // Forward chain: Rx j cancels X_{j-1} learnt from Rx j-1 in round j-1.
    for (int j = 1; j <= f; ++j) {
      add_user(r, s, cell(j), j == 1 ? UserKind::fast : UserKind::slow, direct, j - 1);
      r.events.push_back({s, cell(j), "decode", j - 1, direct, cell(j), cell(j)});
      if (j < f) add_message(r, s, j, cell(j), cell(j + 1), cell(j), direct, PayloadKind::decoded_message_estimate);
    }
    // Backward chain: user k is decoded at Rx k+1 through the cross link,
    // then handed to Rx k.
    for (int k = m; k > f; --k) {
      const int round = m - k;
      add_user(r, s, cell(k), UserKind::slow, cross, round);
      r.events.push_back({s, cell(k), "decode", round, cross, cell(k + 1), cell(k + 1)});
      add_message(r, s, round + 1, cell(k + 1), cell(k), cell(k), cross, PayloadKind::decoded_message_estimate);
    }
  }
  finish(r);
  return r;
}

RateReport run_tx_conferencing(const NetworkConfig& cfg, const SilencingPattern& pattern) {
  check_pattern(cfg, pattern);
  RateReport r;
  r.mode = ConfMode::tx;
  r.users = pattern.users;
  const double a = cfg.alpha * cfg.alpha;
  const double q_rate = half_log2_1p(cfg.power);
  const double distortion = cfg.power * std::exp2(-2.0 * q_rate);
  const double clean = half_log2_1p(cfg.power);
  const double dirty = half_log2_1p(cfg.power / (1.0 + a * distortion));
  const double cross = half_log2_1p(a * cfg.power / (1.0 + a * distortion));

  for (int s = 0; s < static_cast<int>(pattern.subnets.size()); ++s) {
    const Subnet& net = pattern.subnets[s];
    const int m = net.active();
    const int f = (m + 1) / 2;
    const auto cell = [&](int local) { return net.first + local - 1; };

    r.events.push_back({s, cell(m + 1), "silence", 0, 0.0, cell(m + 1), cell(m + 1)});

    // Forward chain: Tx j dirty-paper codes against the quantised X_{j-1}.
    for (int j = 1; j <= f; ++j) {
      const double rate = j == 1 ? clean : dirty;
      add_user(r, s, cell(j), j == f ? UserKind::fast : UserKind::slow, rate, 0);
      r.events.push_back({s, cell(j), "decode", 0, rate, cell(j), cell(j)});
      if (j < f) add_message(r, s, j, cell(j), cell(j + 1), cell(j), q_rate, PayloadKind::quantization_index);
    }
    // The receiver after the fast user sees only interference.
    if (f + 1 <= m + 1) add_user(r, s, cell(f + 1), UserKind::silenced, 0.0, 0);
    // Backward chain: M_k travels Tx k -> Tx k-1 -> Rx k as a quantised
    // dirty-paper sequence.
    for (int k = m + 1; k >= f + 2; --k) {
      add_user(r, s, cell(k), UserKind::slow, cross, 0);
      r.events.push_back({s, cell(k), "decode", 0, cross, cell(k), cell(k)});
      add_message(r, s, m + 2 - k, cell(k), cell(k - 1), cell(k), q_rate, PayloadKind::quantization_index);
    }
  }
  finish(r);
  return r;
}

RateReport run_conferencing(ConfMode mode, const NetworkConfig& cfg, const SilencingPattern& pattern) {
  return mode == ConfMode::rx ? run_rx_conferencing(cfg, pattern) : run_tx_conferencing(cfg, pattern);
}

ConferencingLoad conferencing_load(const RateReport& report, double power) {
  if (report.conf_log.empty()) return {};
  if (!(power > 1.0)) throw std::invalid_argument("prelog normalisation needs P > 1");
  const double unit = 0.5 * std::log2(power);
  std::map<std::pair<int, int>, double> per_link;
  double total = 0.0;
  for (const auto& msg : report.conf_log) {
    per_link[{msg.from, msg.to}] += msg.payload_rate;
    total += msg.payload_rate;
  }
  double worst = 0.0;
  for (const auto& [link, load] : per_link) worst = std::max(worst, load);
  ConferencingLoad out;
  out.per_link_max_prelog = worst / unit;
  out.network_avg_prelog = total / ((report.users - 1) * 2.0 * unit);
  return out;
}

ConferencingLoad rotated_conferencing_load(ConfMode mode, const NetworkConfig& cfg, int users) {
  const int period = 2 * cfg.max_rounds + 2;
  std::map<std::pair<int, int>, double> per_link;
  double total = 0.0;
  for (int offset = 0; offset < period; ++offset) {
    const RateReport rep = run_conferencing(mode, cfg, build_silencing(users, cfg.max_rounds, offset));
    for (const auto& msg : rep.conf_log) {
      per_link[{msg.from, msg.to}] += msg.payload_rate / period;
      total += msg.payload_rate / period;
    }
  }
  if (per_link.empty()) return {};
  if (!(cfg.power > 1.0)) throw std::invalid_argument("prelog normalisation needs P > 1");
  const double unit = 0.5 * std::log2(cfg.power);
  double worst = 0.0;
  for (const auto& [link, load] : per_link) worst = std::max(worst, load);
  return {worst / unit, total / ((users - 1) * 2.0 * unit)};
}

bool audit_round_causality(const RateReport& report) {
  std::map<int, int> decoded_at;
  for (const auto& u : report.per_user) decoded_at[u.user] = u.decode_round;
  for (const auto& msg : report.conf_log) {
    if (msg.from - msg.to != 1 && msg.to - msg.from != 1) return false;
    if (msg.kind == PayloadKind::decoded_message_estimate) {
      const auto it = decoded_at.find(msg.user);
      if (it == decoded_at.end() || it->second >= msg.round) return false;
    }
    for (const auto& in : report.conf_log) {
      if (in.to == msg.from && in.round >= msg.round) return false;
    }
  }
  return true;
}

MuxMeasurement measure_mux_gains(ConfMode mode, const NetworkConfig& cfg_base, const SilencingPattern& pattern,
                                 const std::vector<double>& p_ladder) {
  if (p_ladder.size() < 3) throw std::invalid_argument("power ladder needs at least three points");
  for (std::size_t i = 1; i < p_ladder.size(); ++i) {
    if (!(p_ladder[i] > p_ladder[i - 1])) throw std::invalid_argument("power ladder must be increasing");
  }
  MuxMeasurement out;
  for (double p : p_ladder) {
    NetworkConfig cfg = cfg_base;
    cfg.power = p;
    const RateReport rep = run_conferencing(mode, cfg, pattern);
    const double unit = half_log2_1p(p);
    const ConferencingLoad load = conferencing_load(rep, p);
    out.table.push_back({p, rep.avg_fast / unit, rep.avg_slow / unit, load.network_avg_prelog,
                         load.per_link_max_prelog, rep.avg_fast, rep.avg_slow});
  }
  const auto& hi = out.table.back();
  const auto& lo = out.table[out.table.size() - 2];
  out.estimate = {hi.s_fast_est, hi.s_slow_est};
  const double run = half_log2_1p(hi.p) - half_log2_1p(lo.p);
  out.secant = {(hi.avg_fast_rate - lo.avg_fast_rate) / run, (hi.avg_slow_rate - lo.avg_slow_rate) / run};
  return out;
}

const char* to_string(UserKind kind) {
  switch (kind) {
    case UserKind::fast: return "fast";
    case UserKind::slow: return "slow";
    case UserKind::silenced: return "silenced";
  }
  return "?";
}

const char* to_string(PayloadKind kind) {
  return kind == PayloadKind::decoded_message_estimate ? "decoded_message_estimate" : "quantization_index";
}

const char* to_string(ConfMode mode) { return mode == ConfMode::rx ? "rx" : "tx"; }

}  // namespace softhandoff
