#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "softhandoff/model.hpp"

namespace softhandoff {

/// Per-layer power fractions. Layer i carries independent Gaussian power
/// fractions[i] * P; the depth-j auxiliary is the sum of layers 1..j and the
/// channel input is the sum of all layers.
struct PowerAllocation {
  std::vector<double> fractions;

  int layers() const { return static_cast<int>(fractions.size()); }
  double total() const;
};

/// Throws std::invalid_argument for negative fractions or a sum above 1.
void validate_allocation(const PowerAllocation& alloc);

/// Covariance of own layers, neighbour layers, noise Z and output Y.
struct JointGaussianSpec {
  Eigen::MatrixXd cov;
  std::vector<std::string> labels;
  int layers = 0;

  int own_layer(int i) const { return i; }
  int neighbor_layer(int i) const { return layers + i; }
  int noise() const { return 2 * layers; }
  int output() const { return 2 * layers + 1; }
};

using IndexSet = std::vector<int>;

JointGaussianSpec layered_covariance(const PowerAllocation& alloc, const NetworkConfig& cfg);

/// Own layers 0..depth-1, i.e. the depth-`depth` auxiliary (depth 0 is empty).
IndexSet own_prefix(const JointGaussianSpec& spec, int depth);
IndexSet neighbor_prefix(const JointGaussianSpec& spec, int depth);

/// I(A;B|C) in bits from log-determinants. Zero-variance variables are
/// dropped first. Throws std::invalid_argument if a remaining covariance
/// block is singular.
double gaussian_mi(const JointGaussianSpec& spec, const IndexSet& a, const IndexSet& b, const IndexSet& cond);

struct SchemeOneTerms {
  double i_u2_y = 0.0;
  double i_u2_y_given_u1 = 0.0;
  double i_x_y_u1p_given_u1 = 0.0;
  double i_x_y_u1p_given_u2 = 0.0;
};

struct SchemeTwoTerms {
  double i_u_y = 0.0;
  std::vector<double> chain;  // d = 1..d_max-1
  double i_final = 0.0;       // I(X; Y, X' | V_{D-1})
  double i_final_corrected = 0.0;  // I(X; Y, V'_{D-1} | V_{D-1})
};

/// Generic log-det evaluation; three layers.
SchemeOneTerms scheme1_terms(const PowerAllocation& alloc, const NetworkConfig& cfg);
/// Generic log-det evaluation; cfg.max_rounds + 1 layers.
SchemeTwoTerms scheme2_terms(const PowerAllocation& alloc, const NetworkConfig& cfg);

/// Closed forms for cumulative layering (same results, no matrices).
SchemeOneTerms scheme1_terms_closed(const PowerAllocation& alloc, const NetworkConfig& cfg);
SchemeTwoTerms scheme2_terms_closed(const PowerAllocation& alloc, const NetworkConfig& cfg);

/// Scheme-two terms from remaining powers r_0 >= r_1 >= ... >= r_D, where
/// r_j is the power left after the first j layers.
SchemeTwoTerms scheme2_terms_from_remaining(const std::vector<double>& remaining, double alpha);

}  // namespace softhandoff
