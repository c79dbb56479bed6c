#include <doctest.h>

#include <cmath>
#include <random>

#include "softhandoff/gaussian_mi.hpp"
#include "softhandoff/mc_oracle.hpp"

using namespace softhandoff;

namespace {

NetworkConfig cfg(double p, double alpha, int d_max = 1) {
  NetworkConfig c;
  c.power = p;
  c.alpha = alpha;
  c.max_rounds = d_max;
  return c;
}

double hl(double num, double den) { return 0.5 * std::log2(num / den); }

PowerAllocation random_alloc(std::mt19937_64& rng, int layers) {
  std::exponential_distribution<double> e(1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> w(layers + 1);
  double s = 0;
  for (double& x : w) s += (x = e(rng));
  PowerAllocation a;
  for (int i = 0; i < layers; ++i) a.fractions.push_back(w[i] / s);
  // Zero some layers now and then.
  for (double& f : a.fractions) {
    if (u(rng) < 0.15) f = 0.0;
  }
  return a;
}

}  // namespace

TEST_CASE("layered_covariance entries") {
  const auto one = layered_covariance({{1.0}}, cfg(5, 0.2));
  CHECK(one.cov(one.output(), one.output()) == doctest::Approx(6.2).epsilon(1e-15));
  const auto none = layered_covariance({{0.0}}, cfg(5, 0.2));
  CHECK(none.cov(none.output(), none.output()) == 1.0);

  const auto three = layered_covariance({{0.2, 0.3, 0.5}}, cfg(5, 0.2));
  CHECK(three.cov.rows() == 8);
  CHECK(three.cov(three.output(), three.output()) == doctest::Approx(6.2).epsilon(1e-15));
  CHECK(three.cov(three.own_layer(0), three.output()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(three.cov(three.neighbor_layer(1), three.output()) == doctest::Approx(0.2 * 1.5).epsilon(1e-15));
  CHECK(three.cov(three.own_layer(0), three.neighbor_layer(0)) == 0.0);
  CHECK(three.labels[three.noise()] == "Z");
  // Y row is the linear combination of its inputs.
  Eigen::VectorXd w = Eigen::VectorXd::Zero(8);
  for (int i = 0; i < 3; ++i) {
    w(three.own_layer(i)) = 1.0;
    w(three.neighbor_layer(i)) = 0.2;
  }
  w(three.noise()) = 1.0;
  const Eigen::VectorXd implied = three.cov * w;
  for (int i = 0; i < 7; ++i) CHECK(implied(i) == doctest::Approx(three.cov(three.output(), i)).epsilon(1e-14));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(three.cov);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-10);

  CHECK_THROWS_AS(layered_covariance({{0.7, 0.4}}, cfg(5, 0.2)), std::invalid_argument);
  CHECK_THROWS_AS(layered_covariance({{-0.1, 0.4}}, cfg(5, 0.2)), std::invalid_argument);
}

TEST_CASE("gaussian_mi point values") {
  const auto free = layered_covariance({{1.0}}, cfg(5, 1e-300));
  // alpha is only the channel gain here; 1e-300 makes it vanish.
  CHECK(gaussian_mi(free, {free.own_layer(0)}, {free.output()}, {}) == doctest::Approx(hl(6, 1)).epsilon(1e-12));

  const auto s = layered_covariance({{1.0}}, cfg(5, 0.2));
  CHECK(gaussian_mi(s, {s.own_layer(0)}, {s.output()}, {}) == doctest::Approx(hl(6.2, 1.2)).epsilon(1e-12));
  CHECK(hl(6.2, 1.2) == doctest::Approx(1.18461).epsilon(1e-4));

  const auto z = layered_covariance({{0.0, 1.0}}, cfg(5, 0.2));
  CHECK(gaussian_mi(z, {z.own_layer(0)}, {z.output()}, {}) == 0.0);
  // Conditioning on Y alone versus a direct 2x2 determinant.
  const double v = 5.0, vy = 6.2;
  const double direct = 0.5 * std::log2(v * vy / (v * vy - v * v));
  CHECK(gaussian_mi(s, {s.own_layer(0)}, {s.output()}, {}) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("gaussian_mi rejects singular blocks") {
  const auto s = layered_covariance({{1.0}}, cfg(5, 0.2));
  // Y given X, X', Z has zero variance: the joint block is singular.
  CHECK_THROWS_AS(gaussian_mi(s, {s.output()}, {s.noise()}, {s.own_layer(0), s.neighbor_layer(0)}),
                  std::invalid_argument);
}

TEST_CASE("scheme-one terms") {
  const auto t = scheme1_terms({{0.2, 0.3, 0.5}}, cfg(5, 0.2));
  CHECK(t.i_u2_y == doctest::Approx(hl(6.2, 3.7)).epsilon(1e-12));
  CHECK(t.i_u2_y_given_u1 == doctest::Approx(hl(5.2, 3.7)).epsilon(1e-12));
  CHECK(t.i_x_y_u1p_given_u1 == doctest::Approx(hl(5.16, 1.16)).epsilon(1e-12));
  // Published five-digit values carry a few units of rounding in the last place.
  CHECK(t.i_u2_y == doctest::Approx(0.37239).epsilon(1e-4));
  CHECK(t.i_u2_y_given_u1 == doctest::Approx(0.24548).epsilon(1e-4));
  CHECK(t.i_x_y_u1p_given_u1 == doctest::Approx(1.07665).epsilon(1e-4));

  const auto top = scheme1_terms({{0, 0, 1}}, cfg(5, 0.2));
  CHECK(top.i_u2_y == 0.0);
  CHECK(top.i_x_y_u1p_given_u1 == doctest::Approx(hl(6.2, 1.2)).epsilon(1e-12));

  const auto bottom = scheme1_terms({{1, 0, 0}}, cfg(5, 1e-300));
  CHECK(bottom.i_u2_y == doctest::Approx(hl(6, 1)).epsilon(1e-12));
  CHECK(bottom.i_x_y_u1p_given_u2 == 0.0);

  CHECK_THROWS_AS(scheme1_terms({{0.5, 0.5}}, cfg(5, 0.2)), std::invalid_argument);
}

TEST_CASE("scheme-two terms") {
  const auto t = scheme2_terms({{0.5, 0.5}}, cfg(5, 0.2, 1));
  CHECK(t.i_u_y == doctest::Approx(hl(6.2, 3.7)).epsilon(1e-12));
  CHECK(t.chain.empty());
  CHECK(t.i_final == doctest::Approx(hl(3.5, 1)).epsilon(1e-12));

  const auto zero = scheme2_terms({{0, 0, 0}}, cfg(5, 0.2, 2));
  CHECK(zero.i_u_y == 0.0);
  REQUIRE(zero.chain.size() == 1);
  CHECK(zero.chain[0] == 0.0);
  CHECK(zero.i_final == 0.0);

  const auto low = scheme2_terms({{1, 0, 0}}, cfg(5, 0.2, 2));
  CHECK(low.i_u_y == doctest::Approx(hl(6.2, 1.2)).epsilon(1e-12));
  CHECK(low.chain[0] == 0.0);
  CHECK(low.i_final == 0.0);

  CHECK_THROWS_AS(scheme2_terms({{0.5, 0.5}}, cfg(5, 0.2, 2)), std::invalid_argument);
}

TEST_CASE("closed forms agree with the log-det path") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logp(std::log(0.1), std::log(100.0));
  std::uniform_real_distribution<double> mag(0.05, 0.95);
  for (int trial = 0; trial < 300; ++trial) {
    const double p = std::exp(logp(rng));
    const double a = (trial % 2 ? -1.0 : 1.0) * mag(rng);
    const auto a1 = random_alloc(rng, 3);
    const auto g1 = scheme1_terms(a1, cfg(p, a));
    const auto c1 = scheme1_terms_closed(a1, cfg(p, a));
    CHECK(g1.i_u2_y == doctest::Approx(c1.i_u2_y).epsilon(1e-9));
    CHECK(g1.i_u2_y_given_u1 == doctest::Approx(c1.i_u2_y_given_u1).epsilon(1e-9));
    CHECK(g1.i_x_y_u1p_given_u1 == doctest::Approx(c1.i_x_y_u1p_given_u1).epsilon(1e-9));
    CHECK(g1.i_x_y_u1p_given_u2 == doctest::Approx(c1.i_x_y_u1p_given_u2).epsilon(1e-9));

    const int d = 1 + trial % 5;
    const auto a2 = random_alloc(rng, d + 1);
    const auto g2 = scheme2_terms(a2, cfg(p, a, d));
    const auto c2 = scheme2_terms_closed(a2, cfg(p, a, d));
    CHECK(g2.i_u_y == doctest::Approx(c2.i_u_y).epsilon(1e-9));
    REQUIRE(g2.chain.size() == c2.chain.size());
    for (std::size_t i = 0; i < c2.chain.size(); ++i) CHECK(g2.chain[i] == doctest::Approx(c2.chain[i]).epsilon(1e-9));
    CHECK(g2.i_final == doctest::Approx(c2.i_final).epsilon(1e-9));
    CHECK(g2.i_final_corrected == doctest::Approx(c2.i_final_corrected).epsilon(1e-9));
  }
}

TEST_CASE("data processing and conditioning order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_alloc(rng, 3);
    const auto spec = layered_covariance(a, cfg(0.1 + trial * 0.5, 0.3));
    const IndexSet y{spec.output()};
    const double u1 = gaussian_mi(spec, own_prefix(spec, 1), y, {});
    const double u2 = gaussian_mi(spec, own_prefix(spec, 2), y, {});
    const double x = gaussian_mi(spec, own_prefix(spec, 3), y, {});
    CHECK(u1 <= u2 + 1e-9);
    CHECK(u2 <= x + 1e-9);
    const auto t = scheme1_terms(a, cfg(0.1 + trial * 0.5, 0.3));
    CHECK(t.i_x_y_u1p_given_u2 <= t.i_x_y_u1p_given_u1 + 1e-12);
    CHECK(t.i_u2_y >= 0.0);
  }
}

TEST_CASE("cumulative closed form for I(U2;Y)") {
  const double p = 5, a2 = 0.04;
  const PowerAllocation a{{0.2, 0.3, 0.5}};
  const double b2 = 0.5;
  const auto t = scheme1_terms(a, cfg(p, 0.2));
  CHECK(t.i_u2_y == doctest::Approx(hl(1 + p + a2 * p, 1 + (1 - b2) * p + a2 * p)).epsilon(1e-9));
}

TEST_CASE("Monte-Carlo oracle") {
  const auto s = layered_covariance({{1.0}}, cfg(5, 0.2));
  const double mc = mc_mutual_information(s, {s.own_layer(0)}, {s.output()}, {}, 1000000, 1);
  CHECK(std::abs(mc - hl(6.2, 1.2)) <= 0.01);

  const auto z = layered_covariance({{0.0}}, cfg(5, 0.2));
  CHECK(std::abs(mc_mutual_information(z, {z.own_layer(0)}, {z.output()}, {}, 100000, 2)) <= 0.005);

  const auto f = layered_covariance({{1.0}}, cfg(5, 1e-300));
  CHECK(std::abs(mc_mutual_information(f, {f.own_layer(0)}, {f.output()}, {}, 1000000, 3) - hl(6, 1)) <= 0.01);

  // Same seed, same bits.
  const double again = mc_mutual_information(s, {s.own_layer(0)}, {s.output()}, {}, 1000000, 1);
  CHECK(again == mc);
}

TEST_CASE("Monte-Carlo oracle on conditional terms") {
  const auto spec = layered_covariance({{0.2, 0.3, 0.5}}, cfg(5, 0.2));
  const McEstimator est(spec, 1000000, 99);
  CHECK(est.batches() == 10);
  IndexSet y_u1p = neighbor_prefix(spec, 1);
  y_u1p.push_back(spec.output());
  CHECK(std::abs(est.mutual_information(own_prefix(spec, 2), {spec.output()}, {}) - hl(6.2, 3.7)) <= 0.01);
  CHECK(std::abs(est.mutual_information(own_prefix(spec, 2), {spec.output()}, own_prefix(spec, 1)) - hl(5.2, 3.7)) <=
        0.01);
  CHECK(std::abs(est.mutual_information(own_prefix(spec, 3), y_u1p, own_prefix(spec, 1)) - hl(5.16, 1.16)) <= 0.01);
}
