#include "shinv/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "shinv/errors.hpp"
#include "shinv/info_measures.hpp"

namespace shinv {

namespace {

double checked_ratio(double numerator, double total_mi, double threshold,
                     std::size_t n) {
  if (!(total_mi > threshold)) {
    throw IllDefinedInvariantError(
        "I(X;Y) <= threshold; the ratio invariant is ill-defined");
  }
  const double value = numerator / total_mi;
  return std::clamp(value, 0.0, static_cast<double>(n));
}

}  // namespace

double redundancy_sum(const JointDistribution& d) {
  double sum = 0.0;
  for (std::size_t i = 0; i < d.n_sources(); ++i) {
    sum += mutual_information(d, var_bit(i));
  }
  return sum;
}

double vulnerability_sum(const JointDistribution& d) {
  const VarMask all = d.all_sources();
  double sum = 0.0;
  for (std::size_t j = 0; j < d.n_sources(); ++j) {
    sum += conditional_mi(d, var_bit(j), all & ~var_bit(j));
  }
  return sum;
}

double avg_degree_redundancy(const JointDistribution& d, double threshold) {
  return checked_ratio(redundancy_sum(d), mutual_information(d, d.all_sources()),
                       threshold, d.n_sources());
}

double avg_degree_vulnerability(const JointDistribution& d, double threshold) {
  return checked_ratio(vulnerability_sum(d),
                       mutual_information(d, d.all_sources()), threshold,
                       d.n_sources());
}

double rsi(const JointDistribution& d) {
  return redundancy_sum(d) - mutual_information(d, d.all_sources());
}

double drsi(const JointDistribution& d) {
  return mutual_information(d, d.all_sources()) - vulnerability_sum(d);
}

double lambda_threshold(double lambda, std::size_t n_sources) {
  return lambda * static_cast<double>(n_sources) + 1.0 - lambda;
}

BoundsReport interpret_bounds(double r_bar, double v_bar,
                              std::size_t n_sources) {
  const double n = static_cast<double>(n_sources);
  constexpr double kSlack = 1e-9;
  if (!(r_bar >= -kSlack && r_bar <= n + kSlack) ||
      !(v_bar >= -kSlack && v_bar <= n + kSlack)) {
    throw OutOfRangeInputError("r_bar and v_bar must lie in [0, n]");
  }
  r_bar = std::clamp(r_bar, 0.0, n);
  v_bar = std::clamp(v_bar, 0.0, n);

  BoundsReport b;
  b.min_source_synergy_fraction = std::clamp(1.0 - r_bar, 0.0, 1.0);
  b.min_robustness_fraction = std::clamp(1.0 - v_bar, 0.0, 1.0);
  if (n_sources >= 2) {
    b.min_proper_redundancy_fraction =
        std::clamp((r_bar - 1.0) / (n - 1.0), 0.0, 1.0);
    b.min_vulnerability_fraction =
        std::clamp((v_bar - 1.0) / (n - 1.0), 0.0, 1.0);
  }
  const double predominance = lambda_threshold(0.5, n_sources);  // (n+1)/2
  b.synergy_predominant = r_bar < 0.5;
  b.redundancy_predominant = r_bar > predominance;
  b.robustness_predominant = v_bar < 0.5;
  b.vulnerability_predominant = v_bar > predominance;
  return b;
}

InvariantReport analyze(const JointDistribution& d, double threshold) {
  const std::size_t n = d.n_sources();
  const VarMask all = d.all_sources();

  InvariantReport rep;
  rep.n_sources = n;
  rep.marginal_mi.resize(n);
  rep.conditional_mi.resize(n);

  // Terms are independent reads of an immutable distribution.
  std::vector<std::future<void>> tasks;
  tasks.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    tasks.push_back(std::async(std::launch::async, [&d, &rep, i] {
      rep.marginal_mi[i] = mutual_information(d, var_bit(i));
    }));
    tasks.push_back(std::async(std::launch::async, [&d, &rep, all, i] {
      rep.conditional_mi[i] = conditional_mi(d, var_bit(i), all & ~var_bit(i));
    }));
  }
  rep.total_mi = mutual_information(d, all);
  for (auto& t : tasks) t.get();

  double r_sum = 0.0;
  double v_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r_sum += rep.marginal_mi[i];
    v_sum += rep.conditional_mi[i];
  }
  rep.rsi = r_sum - rep.total_mi;
  rep.drsi = rep.total_mi - v_sum;

  if (rep.total_mi > threshold) {
    const double nd = static_cast<double>(n);
    rep.r_bar = std::clamp(r_sum / rep.total_mi, 0.0, nd);
    rep.v_bar = std::clamp(v_sum / rep.total_mi, 0.0, nd);
    rep.bounds = interpret_bounds(*rep.r_bar, *rep.v_bar, n);
  }
  return rep;
}

}  // namespace shinv
