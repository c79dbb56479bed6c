#include <algorithm>

#include "softhandoff/cli.hpp"

namespace softhandoff::cli {
namespace {

// Fast-rate grid shared by the sampled inner-bound curves.
const std::vector<double> kInnerX = {
    0, 0.0307002723320716, 0.0627654410419294, 0.0963225389711979, 0.131517202916897, 0.168517493638785,
    0.207518749639422, 0.248749829735408, 0.292481250360578, 0.339035952556319, 0.388803789331776,
    0.442261391290032, 0.500000000000000, 0.562765441041929, 0.631517202916897, 0.707518749639422,
    0.792481250360578, 0.888803789331776, 1, 1.13151720291690, 1.30948125036058};

std::vector<Point2> zip(const std::vector<double>& ys) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < ys.size(); ++i) pts.push_back({kInnerX[i], ys[i]});
  return pts;
}

std::vector<ReferenceCurve> build() {
  std::vector<ReferenceCurve> c;
  c.push_back({"fig2_inner",
               zip({1.8627896006476, 1.84201326922935, 1.81603834828985, 1.78317468520822, 1.74821291305975,
                    1.70590679920228, 1.66096404744368, 1.61303403973992, 1.56169120775264, 1.50641202017879,
                    1.44654239804174, 1.38125034313667, 1.30945491632225, 1.22971580931865, 1.14005395959637,
                    1.03764406365212, 0.918250633858560, 0.775098541280240, 0.596322538971198, 0.358103516999704, 0}),
               true, "inner curve for P=5, alpha=0.2, pi=0.346, D=16; exceeds what the rate expressions give"});
  c.push_back({"fig2_outer", {{0, 2.0035}, {0.9702, 1.0333}, {1.4868, 0}}, true,
               "outer curve for P=5, alpha=0.2, pi=0.346; K not stated, not reproducible at any single K"});
  c.push_back({"fig3_d4",
               zip({2.33635339216008, 2.30084012662052, 2.26348753350060, 2.22409462848322, 2.18242557122923,
                    2.13820110822918, 2.09108721698182, 2.04067977575706, 1.98648346326439, 1.92788206838716,
                    1.86409563872133, 1.79411677990322, 1.71661260768952, 1.62976741268817, 1.53101702403717,
                    1.41657091679420, 1.28047911918309, 1.11259832004821, 0.893402194894693, 0.576983309374080, 0}),
               true, "scheme-2 inner curve, pi=2, P=5, alpha=0.2, D=4"});
  c.push_back({"fig3_d6",
               zip({2.56396778608285, 2.52805242576934, 2.49025473728091, 2.45036644871488, 2.40814268675527,
                    2.36329286370459, 2.31546853898874, 2.26424696348588, 2.20910832208170, 2.14940353651730,
                    2.08430750134155, 2.01274905050710, 1.93330220923000, 1.84400982018891, 1.74208181728468,
                    1.62334324582542, 1.48113246829643, 1.30382481603765, 1.06821589753806, 0.716043103475406, 0}),
               true, "scheme-2 inner curve, pi=2, P=5, alpha=0.2, D=6"});
  c.push_back({"fig3_d8",
               zip({2.73366218021606, 2.69751952768778, 2.65947000861807, 2.61930115061908, 2.57676286314920,
                    2.53155799709676, 2.48332974357539, 2.43164451027606, 2.37596817605815, 2.31563239149182,
                    2.24978545608025, 2.17731844029539, 2.09674988697383, 2.00603766391255, 1.90225463712127,
                    1.78098954475542, 1.63513553293625, 1.45211741618554, 1.20627393227393, 0.830434381976273, 0}),
               true, "scheme-2 inner curve, pi=2, P=5, alpha=0.2, D=8"});
  c.push_back({"fig3_d10",
               zip({2.86844951790305, 2.83216076508266, 2.79394928445036, 2.75359987240706, 2.71085904195156,
                    2.66542536658497, 2.61693657369844, 2.56495197899321, 2.50892808568201, 2.44818388536702,
                    2.38185016008902, 2.30879302611250, 2.22749422027644, 2.13585496837824, 2.03085621457981,
                    1.90792696090319, 1.75965612221981, 1.57280864478984, 1.31997345806964, 0.927305780922377, 0}),
               true, "scheme-2 inner curve, pi=2, P=5, alpha=0.2, D=10"});
  c.push_back({"fig4_mu03", {{0, 0.8}, {0.2, 0.6}, {0.5, 0}}, false, "multiplexing-gain region, D=10, mu=0.3"});
  c.push_back({"fig4_musat", {{0, 0.9545}, {0.0455, 0.9091}, {0.5, 0}}, false,
               "multiplexing-gain region, D=10, mu >= 10/22 (coordinates rounded to 4 digits)"});
  return c;
}

}  // namespace

const std::vector<ReferenceCurve>& reference_curves() {
  static const std::vector<ReferenceCurve> curves = build();
  return curves;
}

const ReferenceCurve* find_reference(std::string_view label) {
  const auto& all = reference_curves();
  const auto it = std::find_if(all.begin(), all.end(), [&](const ReferenceCurve& c) { return c.label == label; });
  return it == all.end() ? nullptr : &*it;
}

std::optional<double> reference_height(const ReferenceCurve& curve, double x) {
  const auto& p = curve.points;
  if (p.empty() || x < p.front().x - 1e-12 || x > p.back().x + 1e-12) return std::nullopt;
  if (x <= p.front().x) return p.front().y;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (x <= p[i].x) {
      const double t = (x - p[i - 1].x) / (p[i].x - p[i - 1].x);
      return p[i - 1].y + t * (p[i].y - p[i - 1].y);
    }
  }
  return p.back().y;
}

}  // namespace softhandoff::cli
