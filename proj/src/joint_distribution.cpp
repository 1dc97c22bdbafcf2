#include "shinv/joint_distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "shinv/errors.hpp"
#include "shinv/kernels.hpp"

namespace shinv {

namespace {

constexpr double kPmfSumTolerance = 1e-12;

struct TupleHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    // FNV-1a over the id bytes.
    std::uint64_t h = 14695981039346656037ull;
    for (std::uint32_t x : v) {
      for (int shift = 0; shift < 32; shift += 8) {
        h ^= (x >> shift) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

// Mixed-radix packing of an id tuple, big-endian so that numeric key order
// equals lexicographic tuple order. Only usable when the product of the
// alphabet sizes fits in 64 bits.
bool radix_fits(const std::vector<std::uint64_t>& radices) {
  unsigned __int128 prod = 1;
  for (auto r : radices) {
    prod *= r;
    if (prod > std::numeric_limits<std::uint64_t>::max()) return false;
  }
  return true;
}

std::vector<std::size_t> mask_indices(VarMask mask) {
  std::vector<std::size_t> idx;
  while (mask) {
    idx.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return idx;
}

}  // namespace

JointDistribution JointDistribution::from_samples(const SampleTable& table) {
  table.validate();

  const std::size_t tcol = table.target_index();
  const std::size_t n_vars = table.n_columns();
  if (n_vars > 63) {  // variable sets must fit one VarMask word
    throw UnsupportedSizeError("tables with more than 63 columns are not supported");
  }

  // Output column order: sources in input order, target last.
  std::vector<std::size_t> col_order;
  col_order.reserve(n_vars);
  for (std::size_t c = 0; c < n_vars; ++c) {
    if (c != tcol) col_order.push_back(c);
  }
  col_order.push_back(tcol);

  JointDistribution d;
  d.n_sources_ = n_vars - 1;
  d.alphabets_.resize(n_vars);

  // Intern symbols per output column, first-appearance order.
  std::vector<std::unordered_map<std::string, std::uint32_t>> intern(n_vars);
  for (const auto& row : table.rows) {
    for (std::size_t v = 0; v < n_vars; ++v) {
      const std::string& sym = row[col_order[v]];
      auto [it, inserted] =
          intern[v].emplace(sym, static_cast<std::uint32_t>(d.alphabets_[v].size()));
      if (inserted) d.alphabets_[v].push_back(sym);
    }
  }

  std::vector<std::uint64_t> radices(n_vars);
  for (std::size_t v = 0; v < n_vars; ++v) radices[v] = d.alphabets_[v].size();

  const double inv_rows = 1.0 / static_cast<double>(table.n_rows());

  if (radix_fits(radices)) {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    counts.reserve(table.n_rows());
    for (const auto& row : table.rows) {
      std::uint64_t key = 0;
      for (std::size_t v = 0; v < n_vars; ++v) {
        key = key * radices[v] + intern[v].at(row[col_order[v]]);
      }
      ++counts[key];
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(counts.begin(),
                                                                counts.end());
    std::sort(sorted.begin(), sorted.end());
    d.symbols_.reserve(sorted.size() * n_vars);
    d.probs_.reserve(sorted.size());
    for (const auto& [key, count] : sorted) {
      std::uint64_t k = key;
      std::size_t base = d.symbols_.size();
      d.symbols_.resize(base + n_vars);
      for (std::size_t v = n_vars; v-- > 0;) {
        d.symbols_[base + v] = static_cast<std::uint32_t>(k % radices[v]);
        k /= radices[v];
      }
      d.probs_.push_back(static_cast<double>(count) * inv_rows);
    }
  } else {
    std::unordered_map<std::vector<std::uint32_t>, std::uint64_t, TupleHash> counts;
    counts.reserve(table.n_rows());
    std::vector<std::uint32_t> ids(n_vars);
    for (const auto& row : table.rows) {
      for (std::size_t v = 0; v < n_vars; ++v) {
        ids[v] = intern[v].at(row[col_order[v]]);
      }
      ++counts[ids];
    }
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> sorted(
        counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [tuple, count] : sorted) {
      d.symbols_.insert(d.symbols_.end(), tuple.begin(), tuple.end());
      d.probs_.push_back(static_cast<double>(count) * inv_rows);
    }
  }

  d.validate();
  return d;
}

JointDistribution JointDistribution::from_pmf(
    std::size_t n_sources, std::vector<std::vector<std::string>> alphabets,
    std::vector<std::pair<std::vector<std::uint32_t>, double>> entries) {
  if (alphabets.size() != n_sources + 1) {
    throw ShapeMismatchError("expected " + std::to_string(n_sources + 1) +
                             " alphabets, got " + std::to_string(alphabets.size()));
  }
  JointDistribution d;
  d.n_sources_ = n_sources;
  d.alphabets_ = std::move(alphabets);
  std::sort(entries.begin(), entries.end());
  const std::size_t n_vars = n_sources + 1;
  d.symbols_.reserve(entries.size() * n_vars);
  d.probs_.reserve(entries.size());
  for (auto& [tuple, p] : entries) {
    if (tuple.size() != n_vars) {
      throw ShapeMismatchError("outcome tuple has " + std::to_string(tuple.size()) +
                               " entries, expected " + std::to_string(n_vars));
    }
    d.symbols_.insert(d.symbols_.end(), tuple.begin(), tuple.end());
    d.probs_.push_back(p);
  }
  d.validate();
  return d;
}

JointDistribution JointDistribution::from_pmf(
    std::size_t n_sources, const std::vector<std::size_t>& alphabet_sizes,
    std::vector<std::pair<std::vector<std::uint32_t>, double>> entries) {
  std::vector<std::vector<std::string>> alphabets;
  alphabets.reserve(alphabet_sizes.size());
  for (std::size_t size : alphabet_sizes) {
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t s = 0; s < size; ++s) labels.push_back(std::to_string(s));
    alphabets.push_back(std::move(labels));
  }
  return from_pmf(n_sources, std::move(alphabets), std::move(entries));
}

void JointDistribution::validate() const {
  const std::size_t nv = n_vars();
  if (nv > 63) {
    throw UnsupportedSizeError("distributions over more than 63 variables are not supported");
  }
  if (alphabets_.size() != nv) {
    throw ShapeMismatchError("alphabet count does not match variable count");
  }
  if (probs_.empty()) throw EmptyTableError("distribution has empty support");
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] > 0.0) || probs_[i] > 1.0) {
      throw OutOfRangeInputError("stored probability out of (0, 1]");
    }
    const auto ids = outcome(i);
    for (std::size_t v = 0; v < nv; ++v) {
      if (ids[v] >= alphabets_[v].size()) {
        throw IndexOutOfRangeError("symbol id outside the declared alphabet");
      }
    }
  }
  const double total = kernels::compensated_sum(probs_);
  if (std::abs(total - 1.0) > kPmfSumTolerance) {
    throw OutOfRangeInputError("pmf sums to " + std::to_string(total) +
                               ", expected 1 within 1e-12");
  }
}

double JointDistribution::probability(std::span<const std::uint32_t> ids) const {
  if (ids.size() != n_vars()) {
    throw ShapeMismatchError("outcome tuple has wrong arity");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (std::equal(ids.begin(), ids.end(), outcome(i).begin())) return probs_[i];
  }
  return 0.0;
}

double JointDistribution::probability_by_labels(
    const std::vector<std::string>& labels) const {
  if (labels.size() != n_vars()) {
    throw ShapeMismatchError("outcome tuple has wrong arity");
  }
  std::vector<std::uint32_t> ids(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto& alpha = alphabets_[v];
    auto it = std::find(alpha.begin(), alpha.end(), labels[v]);
    if (it == alpha.end()) return 0.0;  // symbol never observed
    ids[v] = static_cast<std::uint32_t>(it - alpha.begin());
  }
  return probability(ids);
}

JointDistribution JointDistribution::marginal(VarMask vars) const {
  if (vars == 0) throw EmptyVariableSetError("marginal over the empty set");
  if (vars & ~all_vars()) {
    throw IndexOutOfRangeError("variable index outside this distribution");
  }

  const auto kept = mask_indices(vars);
  const std::size_t k = kept.size();

  JointDistribution m;
  m.n_sources_ = k - 1;  // last kept variable occupies the target slot
  m.alphabets_.reserve(k);
  for (std::size_t v : kept) m.alphabets_.push_back(alphabets_[v]);

  std::vector<std::uint64_t> radices(k);
  for (std::size_t j = 0; j < k; ++j) radices[j] = alphabets_[kept[j]].size();

  if (radix_fits(radices)) {
    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const auto ids = outcome(i);
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = key * radices[j] + ids[kept[j]];
      acc[key] += probs_[i];
    }
    std::vector<std::pair<std::uint64_t, double>> sorted(acc.begin(), acc.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    m.symbols_.reserve(sorted.size() * k);
    m.probs_.reserve(sorted.size());
    for (const auto& [key, p] : sorted) {
      std::uint64_t kk = key;
      const std::size_t base = m.symbols_.size();
      m.symbols_.resize(base + k);
      for (std::size_t j = k; j-- > 0;) {
        m.symbols_[base + j] = static_cast<std::uint32_t>(kk % radices[j]);
        kk /= radices[j];
      }
      m.probs_.push_back(p);
    }
  } else {
    std::unordered_map<std::vector<std::uint32_t>, double, TupleHash> acc;
    acc.reserve(probs_.size());
    std::vector<std::uint32_t> tuple(k);
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const auto ids = outcome(i);
      for (std::size_t j = 0; j < k; ++j) tuple[j] = ids[kept[j]];
      acc[tuple] += probs_[i];
    }
    std::vector<std::pair<std::vector<std::uint32_t>, double>> sorted(acc.begin(),
                                                                      acc.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [t, p] : sorted) {
      m.symbols_.insert(m.symbols_.end(), t.begin(), t.end());
      m.probs_.push_back(p);
    }
  }

  m.validate();
  return m;
}

std::vector<double> JointDistribution::marginal_probs(VarMask vars) const {
  if (vars == 0) throw EmptyVariableSetError("marginal over the empty set");
  if (vars & ~all_vars()) {
    throw IndexOutOfRangeError("variable index outside this distribution");
  }

  const auto kept = mask_indices(vars);
  const std::size_t k = kept.size();

  std::vector<std::uint64_t> radices(k);
  for (std::size_t j = 0; j < k; ++j) radices[j] = alphabets_[kept[j]].size();

  std::vector<double> values;
  if (radix_fits(radices)) {
    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const auto ids = outcome(i);
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < k; ++j) key = key * radices[j] + ids[kept[j]];
      acc[key] += probs_[i];
    }
    values.reserve(acc.size());
    for (const auto& [key, p] : acc) values.push_back(p);
  } else {
    std::unordered_map<std::vector<std::uint32_t>, double, TupleHash> acc;
    acc.reserve(probs_.size());
    std::vector<std::uint32_t> tuple(k);
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      const auto ids = outcome(i);
      for (std::size_t j = 0; j < k; ++j) tuple[j] = ids[kept[j]];
      acc[tuple] += probs_[i];
    }
    values.reserve(acc.size());
    for (const auto& [tuple_key, p] : acc) values.push_back(p);
  }
  return values;
}

}  // namespace shinv
