#include "softhandoff/inner_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace softhandoff {
namespace {

constexpr double kConfSlack = 1e-12;

struct Candidate {
  double fast = 0.0;
  double sum = 0.0;
  int scheme = 1;
  PowerAllocation alloc;
};

struct HullPoint {
  Point2 p;
  std::size_t source;
};

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

InnerRegion upper_envelope(const std::vector<Candidate>& cands) {
  std::vector<HullPoint> pts;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto& c = cands[i];
    pts.push_back({{0.0, c.sum}, i});
    if (c.fast > 0.0) pts.push_back({{c.fast, std::max(c.sum - c.fast, 0.0)}, i});
  }
  std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
    return a.p.x < b.p.x || (a.p.x == b.p.x && a.p.y > b.p.y);
  });

  std::vector<HullPoint> hull;
  for (const auto& hp : pts) {
    if (!hull.empty() && hp.p.x == hull.back().p.x) continue;  // lower point at same x
    while (hull.size() >= 2) {
      const double turn = cross(hull[hull.size() - 2].p, hull.back().p, hp.p);
      const double scale = std::max(1.0, std::abs(hp.p.x) + std::abs(hp.p.y));
      if (turn >= -kVertexMergeTol * scale) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(hp);
  }
  // The leftmost point is the tallest, so the hull is nonincreasing.
  std::vector<Point2> verts;
  InnerRegion out;
  for (const auto& hp : hull) {
    verts.push_back(hp.p);
    const auto& c = cands[hp.source];
    out.witnesses.push_back({hp.p, c.scheme, c.alloc, c.fast, c.sum});
  }
  out.region = make_polyline(std::move(verts));
  return out;
}

PowerAllocation allocation_from_remaining(const std::vector<double>& r, double power) {
  PowerAllocation a;
  for (std::size_t j = 1; j < r.size(); ++j) a.fractions.push_back((r[j - 1] - r[j]) / power);
  a.fractions.push_back(r.back() / power);
  return a;
}

void sweep_scheme1(const NetworkConfig& cfg, int grid, bool corrected, std::vector<Candidate>& out) {
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; i + j <= grid; ++j) {
      for (int k = 0; i + j + k <= grid; ++k) {
        PowerAllocation alloc{{double(i) / grid, double(j) / grid, double(k) / grid}};
        const auto e = eval_scheme1(alloc, cfg, corrected);
        out.push_back({e.r_fast_cap, e.r_sum_cap, 1, std::move(alloc)});
      }
    }
  }
}

// Remaining-power ladder r_k = P k / n. The pair value c(k, k') is shared by
// the fast term and every chain term.
class SchemeTwoSearch {
 public:
  SchemeTwoSearch(const NetworkConfig& cfg, int ladder, bool corrected)
      : cfg_(cfg), n_(ladder), corrected_(corrected), pair_((ladder + 1) * (ladder + 1), 0.0), last_(ladder + 1) {
    const double a = cfg.alpha * cfg.alpha;
    for (int k = 0; k <= n_; ++k) {
      const double r = rung(k);
      for (int kk = 0; kk <= k; ++kk) {
        pair_[k * (n_ + 1) + kk] = 0.5 * std::log2((1.0 + (1.0 + a) * r) / (1.0 + rung(kk) + a * r));
      }
      last_[k] = corrected ? 0.5 * std::log2((1.0 + (1.0 + a) * r) / (1.0 + a * r)) : 0.5 * std::log2(1.0 + r);
    }
  }

  void run(std::vector<Candidate>& out) {
    std::vector<double> nus{0.0};
    for (int i = 0; i <= 30; ++i) nus.push_back(std::pow(10.0, -3.0 + 0.2 * i));
    nus.push_back(1e6);
    std::vector<double> thetas;
    for (int i = 0; i < 24; ++i) thetas.push_back(std::tan(i * (std::acos(-1.0) / 2.0) / 24.0));
    thetas.push_back(1e3);

    for (int horizon = 1; horizon <= cfg_.max_rounds; ++horizon) {
      for (double nu : nus) {
        // value[k]: best tail from r_1 = rung k; choice[d][k]: argmax r_{d+1}.
        std::vector<double> value(last_);
        std::vector<std::vector<int>> choice(horizon);
        for (int d = horizon - 1; d >= 1; --d) {
          std::vector<double> next(n_ + 1);
          choice[d].assign(n_ + 1, 0);
          for (int k = 0; k <= n_; ++k) {
            double best = -std::numeric_limits<double>::infinity();
            for (int kk = 0; kk <= k; ++kk) {
              const double v = (1.0 - nu) * pair(k, kk) + value[kk];
              if (v > best) {
                best = v;
                choice[d][k] = kk;
              }
            }
            next[k] = best;
          }
          value.swap(next);
        }
        for (double theta : thetas) {
          const double w = 1.0 + theta - nu;
          double best = -std::numeric_limits<double>::infinity();
          int b0 = 0, b1 = 0;
          for (int k0 = 0; k0 <= n_; ++k0) {
            for (int k1 = 0; k1 <= k0; ++k1) {
              const double v = w * pair(k0, k1) + value[k1];
              if (v > best) {
                best = v;
                b0 = k0;
                b1 = k1;
              }
            }
          }
          std::vector<int> path{b0, b1};
          for (int d = 1; d < horizon; ++d) path.push_back(choice[d][path.back()]);
          add(path, out);
        }
      }
    }
  }

 private:
  double rung(int k) const { return cfg_.power * k / n_; }
  double pair(int k, int kk) const { return pair_[k * (n_ + 1) + kk]; }

  void add(const std::vector<int>& path, std::vector<Candidate>& out) {
    // Pad to D + 1 layers with zero-power layers ahead of the last one.
    std::vector<int> full(path);
    while (static_cast<int>(full.size()) < cfg_.max_rounds + 1) full.push_back(full.back());
    if (!seen_.emplace(full, true).second) return;
    std::vector<double> r;
    for (int k : full) r.push_back(rung(k));
    PowerAllocation alloc = allocation_from_remaining(r, cfg_.power);
    const auto e = eval_scheme2(alloc, cfg_, corrected_);
    if (e.feasible) out.push_back({e.r_fast_cap, e.r_sum_cap, 2, std::move(alloc)});
  }

  NetworkConfig cfg_;
  int n_;
  bool corrected_;
  std::vector<double> pair_;
  std::vector<double> last_;
  std::map<std::vector<int>, bool> seen_;
};

double eval_at(const std::vector<Point2>& v, double x) {
  if (x <= v.front().x) return v.front().y;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (x <= v[i].x) {
      const double t = (x - v[i - 1].x) / (v[i].x - v[i - 1].x);
      return v[i - 1].y + t * (v[i].y - v[i - 1].y);
    }
  }
  return v.back().y;
}

}  // namespace

SchemeOneEvaluation eval_scheme1(const PowerAllocation& alloc, const NetworkConfig& cfg, bool corrected, MiPath path) {
  const SchemeOneTerms t = path == MiPath::closed_form ? scheme1_terms_closed(alloc, cfg) : scheme1_terms(alloc, cfg);
  SchemeOneEvaluation e;
  e.alloc = alloc;
  e.r_fast_cap = std::min(t.i_u2_y, t.i_u2_y_given_u1 + cfg.conf_rate);
  e.r_sum_cap = e.r_fast_cap + (corrected ? t.i_x_y_u1p_given_u2 : t.i_x_y_u1p_given_u1);
  return e;
}

SchemeTwoEvaluation eval_scheme2(const PowerAllocation& alloc, const NetworkConfig& cfg, bool corrected, MiPath path) {
  const SchemeTwoTerms t = path == MiPath::closed_form ? scheme2_terms_closed(alloc, cfg) : scheme2_terms(alloc, cfg);
  SchemeTwoEvaluation e;
  e.alloc = alloc;
  e.r_fast_cap = t.i_u_y;
  e.conf_load = t.i_u_y + std::accumulate(t.chain.begin(), t.chain.end(), 0.0);
  e.r_sum_cap = e.conf_load + (corrected ? t.i_final_corrected : t.i_final);
  e.feasible = e.conf_load <= cfg.conf_rate + kConfSlack;
  return e;
}

InnerRegion inner_region(const NetworkConfig& cfg_in, InnerScheme scheme, int grid, bool corrected) {
  const NetworkConfig cfg = validate_config(cfg_in);
  if (grid < 10) throw std::invalid_argument("grid resolution must be at least 10");

  std::vector<Candidate> cands;
  cands.push_back({0.0, 0.0, scheme == InnerScheme::two ? 2 : 1,
                   PowerAllocation{std::vector<double>(scheme == InnerScheme::two ? cfg.max_rounds + 1 : 3, 0.0)}});
  if (scheme != InnerScheme::two) sweep_scheme1(cfg, grid, corrected, cands);
  if (scheme != InnerScheme::one) SchemeTwoSearch(cfg, 2 * grid, corrected).run(cands);
  return upper_envelope(cands);
}

Region rate_transfer_closure(const Region& region) {
  if (region.kind != RegionKind::polyline) throw std::invalid_argument("rate transfer needs a polyline region");
  std::vector<Point2> f = region.vertices;
  if (f.front().x > 0.0) f.insert(f.begin(), {0.0, f.front().y});

  // suffix[i] = max over t >= x_i of f(t) + t; breakpoints where the running
  // maximum meets a segment are added.
  std::vector<double> xs;
  for (const auto& p : f) xs.push_back(p.x);
  double level = f.back().x + f.back().y;
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    const double left = f[i].x + f[i].y;
    const double right = f[i + 1].x + f[i + 1].y;
    if ((left - level) * (right - level) < 0.0) {
      const double t = (level - left) / (right - left);
      xs.push_back(f[i].x + t * (f[i + 1].x - f[i].x));
    }
    level = std::max(level, left);
  }
  std::sort(xs.begin(), xs.end());

  const auto suffix_max = [&](double x) {
    double m = eval_at(f, x) + x;
    for (const auto& p : f) {
      if (p.x >= x) m = std::max(m, p.x + p.y);
    }
    return m;
  };
  const auto h = [&](double x) { return std::max(eval_at(f, x), suffix_max(x) - x); };

  // Crossings between f and the transfer line inside each interval.
  std::vector<double> all(xs);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = xs[i - 1];
    const double b = xs[i];
    if (b - a <= kVertexMergeTol) continue;
    const double m = suffix_max(0.5 * (a + b));
    const double ga = eval_at(f, a) - (m - a);
    const double gb = eval_at(f, b) - (m - b);
    if (ga * gb < 0.0) all.push_back(a + (b - a) * ga / (ga - gb));
  }
  std::sort(all.begin(), all.end());

  std::vector<Point2> out;
  for (double x : all) {
    if (!out.empty() && x - out.back().x <= kVertexMergeTol) continue;
    out.push_back({x, h(x)});
  }
  // Merge collinear vertices.
  std::vector<Point2> merged;
  for (const auto& p : out) {
    while (merged.size() >= 2 && std::abs(cross(merged[merged.size() - 2], merged.back(), p)) <=
                                     kVertexMergeTol * std::max(1.0, p.x + p.y)) {
      merged.pop_back();
    }
    merged.push_back(p);
  }
  return make_polyline(std::move(merged));
}

}  // namespace softhandoff
