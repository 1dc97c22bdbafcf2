#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shinv/joint_distribution.hpp"

namespace shinv {

// Below this much total mutual information (in bits) the ratio invariants
// r-bar and v-bar are ill-defined.
inline constexpr double kDefaultIllDefinedThreshold = 1e-12;

// Lower bounds on atom mass fractions implied by r-bar and v-bar, assuming
// a PID with non-negative atoms. Fractions are clamped to [0, 1].
struct BoundsReport {
  double min_source_synergy_fraction = 0.0;     // >= 1 - r_bar
  double min_proper_redundancy_fraction = 0.0;  // >= (r_bar-1)/(n-1), n >= 2
  double min_robustness_fraction = 0.0;         // >= 1 - v_bar
  double min_vulnerability_fraction = 0.0;      // >= (v_bar-1)/(n-1), n >= 2
  bool redundancy_predominant = false;          // r_bar > (n+1)/2
  bool synergy_predominant = false;             // r_bar < 1/2
  bool robustness_predominant = false;          // v_bar < 1/2
  bool vulnerability_predominant = false;       // v_bar > (n+1)/2
};

struct InvariantReport {
  std::size_t n_sources = 0;
  double total_mi = 0.0;                 // I(X;Y), bits
  std::vector<double> marginal_mi;       // I(X_i;Y), bits
  std::vector<double> conditional_mi;    // I(X_j;Y|X_-j), bits
  std::optional<double> r_bar;           // absent when ill-defined
  std::optional<double> v_bar;
  double rsi = 0.0;                      // bits; defined even at I = 0
  double drsi = 0.0;
  std::optional<BoundsReport> bounds;    // absent when r/v-bar are
};

// R(X;Y) = sum_i I(X_i;Y)
double redundancy_sum(const JointDistribution& d);

// V(X;Y) = sum_j I(X_j;Y|X_-j); for n = 1 this is I(X_1;Y).
double vulnerability_sum(const JointDistribution& d);

// r_bar = R/I. Throws IllDefinedInvariantError when I <= threshold.
double avg_degree_redundancy(
    const JointDistribution& d,
    double threshold = kDefaultIllDefinedThreshold);

// v_bar = V/I, same threshold behaviour.
double avg_degree_vulnerability(
    const JointDistribution& d,
    double threshold = kDefaultIllDefinedThreshold);

// RSI = sum_i I(X_i;Y) - I(X;Y)
double rsi(const JointDistribution& d);

// DRSI = I(X;Y) - sum_j I(X_j;Y|X_-j)
double drsi(const JointDistribution& d);

// Threshold such that a measure above it certifies an atom-mass fraction
// above lambda: lambda*n + 1 - lambda.
double lambda_threshold(double lambda, std::size_t n_sources);

// Bound interpretation for values r_bar, v_bar in [0, n].
BoundsReport interpret_bounds(double r_bar, double v_bar,
                              std::size_t n_sources);

// Full report; the n marginal-MI and n CMI terms are evaluated concurrently.
InvariantReport analyze(const JointDistribution& d,
                        double threshold = kDefaultIllDefinedThreshold);

}  // namespace shinv
