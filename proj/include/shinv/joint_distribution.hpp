#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shinv/sample_table.hpp"

namespace shinv {

// Set of variable indices as a bitmask. Sources occupy bits 0..n-1, the
// target occupies bit n. Distributions are limited to 64 variables total.
using VarMask = std::uint64_t;

inline VarMask var_bit(std::size_t index) { return VarMask{1} << index; }

// Sparse exact pmf over (X_1,...,X_n, Y). Symbols are interned to dense
// integer ids at construction; zero-mass outcomes are never stored.
// Immutable after construction, so shared reads are safe.
class JointDistribution {
 public:
  // pmf(outcome) = count(outcome)/rows, alphabets in first-appearance order,
  // target column moved to the last position.
  static JointDistribution from_samples(const SampleTable& table);

  // Direct pmf constructor (random ensembles, tests). Entries are id tuples
  // with the target id last; probabilities must be positive and sum to 1
  // within 1e-12.
  static JointDistribution from_pmf(
      std::size_t n_sources, std::vector<std::vector<std::string>> alphabets,
      std::vector<std::pair<std::vector<std::uint32_t>, double>> entries);

  // Convenience: alphabets given as sizes, labels "0", "1", ...
  static JointDistribution from_pmf(
      std::size_t n_sources, const std::vector<std::size_t>& alphabet_sizes,
      std::vector<std::pair<std::vector<std::uint32_t>, double>> entries);

  std::size_t n_sources() const { return n_sources_; }
  std::size_t n_vars() const { return n_sources_ + 1; }
  std::size_t target_index() const { return n_sources_; }

  std::size_t support_size() const { return probs_.size(); }
  std::span<const std::uint32_t> outcome(std::size_t i) const {
    return {symbols_.data() + i * n_vars(), n_vars()};
  }
  double prob(std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

  const std::vector<std::vector<std::string>>& alphabets() const {
    return alphabets_;
  }
  std::size_t alphabet_size(std::size_t var) const {
    return alphabets_[var].size();
  }
  const std::string& label(std::size_t var, std::uint32_t id) const {
    return alphabets_[var][id];
  }

  // 0 for outcomes outside the support.
  double probability(std::span<const std::uint32_t> ids) const;
  double probability_by_labels(const std::vector<std::string>& labels) const;

  // Sums matching probabilities over the dropped variables. Kept variables
  // keep their relative order; the last kept variable takes the target slot.
  JointDistribution marginal(VarMask vars) const;

  // Marginal pmf values only (no alphabets, no outcome tuples); the fast
  // path behind every entropy evaluation.
  std::vector<double> marginal_probs(VarMask vars) const;

  VarMask all_vars() const { return (VarMask{1} << n_vars()) - 1; }
  VarMask all_sources() const { return (VarMask{1} << n_sources_) - 1; }
  VarMask target_mask() const { return var_bit(n_sources_); }

 private:
  JointDistribution() = default;
  void validate() const;

  std::size_t n_sources_ = 0;
  std::vector<std::vector<std::string>> alphabets_;  // n_vars entries
  std::vector<std::uint32_t> symbols_;               // stride n_vars
  std::vector<double> probs_;
};

}  // namespace shinv
