#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "softhandoff/cli.hpp"
#include "softhandoff/conf_sim.hpp"
#include "softhandoff/inner_bound.hpp"
#include "softhandoff/mux_gain.hpp"
#include "softhandoff/outer_bound.hpp"

namespace softhandoff::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Params {
  std::string k = "inf";
  double p = 5.0;
  double alpha = 0.2;
  double pi = 0.346;
  int dmax = 16;
  double mu = 0.0;
  std::string scheme = "best";
  int grid = 64;
  bool corrected = false;
  std::string weighted = "printed";
  std::string mode = "rx-bi";
  std::string reference;
  std::string p_ladder = "1e2,1e4,1e6";
  bool rotate = false;
  std::string out;
};

std::string default_dir() {
  const char* env = std::getenv("SOFTHANDOFF_OUT_DIR");
  return env && *env ? env : ".";
}

UserCount parse_users(const std::string& k) {
  if (k == "inf" || k == "infinity") return UserCount::asymptotic();
  try {
    std::size_t used = 0;
    const int v = std::stoi(k, &used);
    if (used != k.size()) throw std::invalid_argument(k);
    return UserCount::finite(v);
  } catch (const std::exception&) {
    throw ConfigError("K", "K must be an integer or 'inf'");
  }
}

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("p_ladder", "power ladder entries must be numbers");
    }
  }
  return out;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::string& path, const std::string& command, const std::vector<std::string>& argv,
                    const ordered_json& params, const std::vector<std::string>& outputs) {
  ordered_json m;
  m["command"] = command;
  m["argv"] = argv;
  m["parameters"] = params;
  m["tool_version"] = kToolVersion;
  m["seed"] = 0;
  m["timestamp"] = timestamp();
  m["outputs"] = outputs;
  write_file(path, m.dump(2) + "\n");
}

// argv as given, with --out pinned to the path actually written.
std::vector<std::string> pinned_argv(std::vector<std::string> argv, const std::string& out) {
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--out" && i + 1 < argv.size()) {
      argv[i + 1] = out;
      return argv;
    }
    if (argv[i].rfind("--out=", 0) == 0) {
      argv[i] = "--out=" + out;
      return argv;
    }
  }
  argv.push_back("--out");
  argv.push_back(out);
  return argv;
}

std::string auto_reference(const std::string& kind, const Params& p) {
  if (!p.reference.empty()) return p.reference == "none" ? "" : p.reference;
  if (kind == "outer") return "fig2_outer";
  if (kind == "inner") {
    if (p.scheme == "2" && (p.dmax == 4 || p.dmax == 6 || p.dmax == 8 || p.dmax == 10)) {
      return "fig3_d" + std::to_string(p.dmax);
    }
    return "fig2_inner";
  }
  return "";
}

NetworkConfig network_from(const Params& p) {
  NetworkConfig cfg;
  cfg.users = parse_users(p.k);
  cfg.alpha = p.alpha;
  cfg.power = p.p;
  cfg.conf_rate = p.pi;
  cfg.max_rounds = p.dmax;
  cfg.conf_prelog = p.mu;
  return validate_config(cfg);
}

int cmd_region(const std::string& kind, const Params& p, const std::vector<std::string>& argv, std::ostream& out) {
  const std::string path = p.out.empty() ? (fs::path(default_dir()) / ("region_" + kind + ".csv")).string() : p.out;
  ordered_json params;
  CsvTable table;

  if (kind == "mux") {
    MuxRegionSpec spec;
    if (p.mode == "rx-bi") {
      spec.mode = MuxMode::rx_bidirectional;
    } else if (p.mode == "rx-uni") {
      spec.mode = MuxMode::rx_unidirectional;
    } else if (p.mode == "tx") {
      spec.mode = MuxMode::tx_conferencing;
    } else {
      throw ConfigError("mode", "mode must be rx-bi, rx-uni or tx");
    }
    spec.mu = p.mu;
    spec.d_max = p.dmax;
    const Region r = mux_region(spec);
    params = {{"mode", p.mode}, {"mu", p.mu}, {"dmax", p.dmax}};
    table.header = {"s_fast", "s_slow", "source"};
    for (const auto& seg : boundary_slopes(r)) {
      if (table.rows.empty()) table.rows.push_back({format_number(seg.from.x), format_number(seg.from.y), "mux"});
      table.rows.push_back({format_number(seg.to.x), format_number(seg.to.y), "mux"});
    }
  } else {
    const NetworkConfig cfg = network_from(p);
    const std::string ref_label = auto_reference(kind, p);
    const ReferenceCurve* ref = nullptr;
    if (!ref_label.empty()) {
      ref = find_reference(ref_label);
      if (!ref) throw ConfigError("reference", "unknown reference curve " + ref_label);
    }
    params = {{"K", p.k}, {"P", p.p}, {"alpha", p.alpha}, {"pi", p.pi}, {"dmax", p.dmax}};
    table.header = {"x_rate_bits", "y_rate_bits", "source"};
    if (ref) table.header.push_back("reference");

    std::vector<std::pair<Point2, std::string>> rows;
    if (kind == "outer") {
      WeightedForm form;
      if (p.weighted == "printed") {
        form = WeightedForm::as_printed;
      } else if (p.weighted == "derived") {
        form = WeightedForm::from_derivation;
      } else {
        throw ConfigError("weighted", "weighted must be printed or derived");
      }
      params["weighted"] = p.weighted;
      const Region r = outer_region(cfg, form);
      const auto segs = boundary_slopes(r);
      rows.push_back({segs.front().from, "outer"});
      for (const auto& s : segs) rows.push_back({s.to, "outer"});
    } else {
      InnerScheme scheme;
      if (p.scheme == "1") {
        scheme = InnerScheme::one;
      } else if (p.scheme == "2") {
        scheme = InnerScheme::two;
      } else if (p.scheme == "best") {
        scheme = InnerScheme::best;
      } else {
        throw ConfigError("scheme", "scheme must be 1, 2 or best");
      }
      params["scheme"] = p.scheme;
      params["grid"] = p.grid;
      params["corrected"] = p.corrected;
      const InnerRegion r = inner_region(cfg, scheme, p.grid, p.corrected);
      for (const auto& w : r.witnesses) rows.push_back({w.point, w.scheme == 1 ? "inner_scheme1" : "inner_scheme2"});
    }
    if (ref) params["reference"] = ref->label;
    for (const auto& [pt, source] : rows) {
      std::vector<std::string> row{format_number(pt.x), format_number(pt.y), source};
      if (ref) {
        const auto h = reference_height(*ref, pt.x);
        row.push_back(h ? format_number(*h) : "");
      }
      table.rows.push_back(std::move(row));
    }
  }

  write_file(path, to_csv(table));
  write_manifest(path + ".manifest.json", "region " + kind, pinned_argv(argv, path), params, {path});
  out << "wrote " << path << "\n";
  return 0;
}

int cmd_simulate(const std::string& mode_name, const Params& p, const std::vector<std::string>& argv,
                 std::ostream& out) {
  const ConfMode mode = mode_name == "rx" ? ConfMode::rx : ConfMode::tx;
  const std::string dir = p.out.empty() ? (fs::path(default_dir()) / ("simulate_" + mode_name)).string() : p.out;
  const UserCount users = parse_users(p.k);
  if (users.is_asymptotic()) throw ConfigError("K", "simulation needs a finite K");
  const std::vector<double> ladder = parse_ladder(p.p_ladder);

  NetworkConfig cfg;
  cfg.users = users;
  cfg.alpha = p.alpha;
  cfg.power = ladder.empty() ? 0.0 : ladder.back();
  cfg.conf_rate = 0.0;
  cfg.max_rounds = p.dmax;
  validate_config(cfg);
  for (double pw : ladder) {
    if (!(pw > 1.0)) throw ConfigError("p_ladder", "ladder powers must exceed 1");
  }
  const SilencingPattern pattern = build_silencing(users.value(), p.dmax);
  const MuxMeasurement meas = measure_mux_gains(mode, cfg, pattern, ladder);

  CsvTable rates{{"p", "user", "subnet", "kind", "rate_bits", "decode_round"}, {}};
  RateReport last;
  for (double pw : ladder) {
    NetworkConfig c = cfg;
    c.power = pw;
    last = run_conferencing(mode, c, pattern);
    for (const auto& u : last.per_user) {
      rates.rows.push_back({format_number(pw), std::to_string(u.user), std::to_string(u.subnet), to_string(u.kind),
                            format_number(u.rate), std::to_string(u.decode_round)});
    }
  }
  CsvTable events{{"subnet", "user", "event_kind", "round", "rate_bits", "from", "to"}, {}};
  for (const auto& e : last.events) {
    events.rows.push_back({std::to_string(e.subnet), std::to_string(e.user), e.event_kind, std::to_string(e.round),
                           format_number(e.rate_bits), std::to_string(e.from), std::to_string(e.to)});
  }
  CsvTable conv{{"p", "s_fast_est", "s_slow_est", "avg_link_prelog", "max_link_prelog"}, {}};
  for (const auto& row : meas.table) {
    conv.rows.push_back({format_number(row.p), format_number(row.s_fast_est), format_number(row.s_slow_est),
                         format_number(row.avg_link_prelog), format_number(row.max_link_prelog)});
  }

  fs::create_directories(dir);
  const std::string f_rates = (fs::path(dir) / "rates.csv").string();
  const std::string f_events = (fs::path(dir) / "events.csv").string();
  const std::string f_conv = (fs::path(dir) / "convergence.csv").string();
  write_file(f_rates, to_csv(rates));
  write_file(f_events, to_csv(events));
  write_file(f_conv, to_csv(conv));

  ordered_json params = {{"mode", mode_name}, {"K", p.k},          {"dmax", p.dmax},
                         {"alpha", p.alpha},  {"p_ladder", ladder}, {"rotate", p.rotate}};
  write_manifest((fs::path(dir) / "manifest.json").string(), "simulate " + mode_name, pinned_argv(argv, dir), params,
                 {f_rates, f_events, f_conv});

  out << "estimate s_fast=" << format_number(meas.estimate.s_fast)
      << " s_slow=" << format_number(meas.estimate.s_slow) << "\n";
  out << "secant s_fast=" << format_number(meas.secant.s_fast) << " s_slow=" << format_number(meas.secant.s_slow)
      << "\n";
  if (p.rotate) {
    const ConferencingLoad rot = rotated_conferencing_load(mode, cfg, users.value());
    out << "rotated per_link_max_prelog=" << format_number(rot.per_link_max_prelog)
        << " network_avg_prelog=" << format_number(rot.network_avg_prelog) << "\n";
  }
  out << "wrote " << dir << "\n";
  return 0;
}

int cmd_compare(const std::string& label, const std::string& csv, std::ostream& out, std::ostream& err) {
  const ReferenceCurve* ref = find_reference(label);
  if (!ref) {
    err << "error: unknown reference curve '" << label << "'\n";
    return 2;
  }
  std::vector<Point2> computed = read_curve_csv(csv);
  std::sort(computed.begin(), computed.end(), [](Point2 a, Point2 b) { return a.x < b.x; });
  if (computed.empty()) {
    out << "label: " << label << "\nno computed points\n";
    return 0;
  }
  const auto height = [&](double x) {
    if (x <= computed.front().x) return computed.front().y;
    for (std::size_t i = 1; i < computed.size(); ++i) {
      if (x <= computed[i].x) {
        const double span = computed[i].x - computed[i - 1].x;
        if (span <= 0.0) return std::max(computed[i].y, computed[i - 1].y);
        return computed[i - 1].y + (x - computed[i - 1].x) / span * (computed[i].y - computed[i - 1].y);
      }
    }
    return x <= computed.back().x + 1e-12 ? computed.back().y : 0.0;
  };

  out << "label: " << label << "\n";
  out << "x,reference_y,computed_y,delta\n";
  double worst = 0.0;
  for (const auto& pt : ref->points) {
    const double y = height(pt.x);
    const double d = y - pt.y;
    worst = std::max(worst, std::abs(d));
    out << format_number(pt.x) << "," << format_number(pt.y) << "," << format_number(y) << "," << format_number(d)
        << "\n";
  }
  out << "max_abs_delta: " << format_number(worst) << "\n";
  if (worst <= 1e-9) {
    out << "status: match\n";
  } else if (ref->known_discrepancy) {
    out << "status: known discrepancy (" << ref->note << ")\n";
  } else {
    out << "status: deviation (" << ref->note << ")\n";
  }
  return 0;
}

int cmd_rerun(const std::string& manifest_path, const std::string& out_override, std::ostream& out, std::ostream& err) {
  std::ifstream f(manifest_path);
  if (!f) throw std::invalid_argument("cannot read manifest " + manifest_path);
  ordered_json m;
  try {
    m = ordered_json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
  if (!m.contains("argv") || !m["argv"].is_array()) throw std::invalid_argument("manifest has no argv");
  std::vector<std::string> argv = m["argv"].get<std::vector<std::string>>();
  if (!argv.empty() && argv.front() == "rerun") throw std::invalid_argument("manifest cannot re-run itself");
  if (!out_override.empty()) argv = pinned_argv(argv, out_override);
  return run(argv, out, err);
}

void add_network_flags(CLI::App* app, Params& p) {
  app->add_option("--k", p.k, "user count or 'inf'");
  app->add_option("--p", p.p, "per-user power P");
  app->add_option("--alpha", p.alpha, "cross gain");
  app->add_option("--pi", p.pi, "conferencing rate (bits per use)");
  app->add_option("--dmax", p.dmax, "conferencing rounds");
  app->add_option("--reference", p.reference, "reference curve label or 'none'");
  app->add_option("--out", p.out, "output CSV path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft-handoff network rate regions and conferencing simulator", "softhandoff"};
  app.require_subcommand(1);
  Params p;

  auto* region = app.add_subcommand("region", "rate or multiplexing-gain region as CSV");
  region->require_subcommand(1);
  auto* inner = region->add_subcommand("inner", "achievable region");
  add_network_flags(inner, p);
  inner->add_option("--scheme", p.scheme, "1, 2 or best");
  inner->add_option("--grid", p.grid, "grid resolution (>= 10)");
  inner->add_flag("--corrected", p.corrected, "use the corrected slow-rate terms");
  auto* outer = region->add_subcommand("outer", "outer bound");
  add_network_flags(outer, p);
  outer->add_option("--weighted", p.weighted, "printed or derived weighted bound");
  auto* mux = region->add_subcommand("mux", "multiplexing-gain region");
  mux->add_option("--mu", p.mu, "conferencing prelog");
  mux->add_option("--dmax", p.dmax, "conferencing rounds");
  mux->add_option("--mode", p.mode, "rx-bi, rx-uni or tx");
  mux->add_option("--out", p.out, "output CSV path");

  auto* simulate = app.add_subcommand("simulate", "silencing-scheme simulation");
  simulate->require_subcommand(1);
  std::vector<CLI::App*> sims;
  for (const char* name : {"rx", "tx"}) {
    auto* s = simulate->add_subcommand(name, std::string(name) + " conferencing");
    s->add_option("--k", p.k, "user count");
    s->add_option("--dmax", p.dmax, "conferencing rounds");
    s->add_option("--alpha", p.alpha, "cross gain");
    s->add_option("--p-ladder", p.p_ladder, "comma-separated increasing powers");
    s->add_flag("--rotate", p.rotate, "also report phase-rotated conferencing load");
    s->add_option("--out", p.out, "output directory");
    sims.push_back(s);
  }

  std::string label, csv;
  auto* compare = app.add_subcommand("compare", "compare a CSV with an embedded reference curve");
  compare->add_option("label", label, "reference label")->required();
  compare->add_option("csv", csv, "computed CSV")->required();

  std::string manifest, rerun_out;
  auto* rerun = app.add_subcommand("rerun", "reproduce an output from its manifest");
  rerun->add_option("manifest", manifest, "manifest path")->required();
  rerun->add_option("--out", rerun_out, "override the output location");

  // Simulation defaults differ from the region defaults.
  for (auto* s : sims) {
    s->preparse_callback([&p](std::size_t) {
      p.k = "22";
      p.dmax = 10;
      p.alpha = 0.5;
    });
  }
  mux->preparse_callback([&p](std::size_t) { p.dmax = 10; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (auto* sub : {inner, outer, mux}) {
      if (sub->parsed()) return cmd_region(sub->get_name(), p, args, out);
    }
    for (auto* s : sims) {
      if (s->parsed()) return cmd_simulate(s->get_name(), p, args, out);
    }
    if (compare->parsed()) return cmd_compare(label, csv, out, err);
    if (rerun->parsed()) return cmd_rerun(manifest, rerun_out, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.field() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace softhandoff::cli
