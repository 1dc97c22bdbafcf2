#include "shinv/pid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "shinv/errors.hpp"
#include "shinv/format.hpp"

namespace shinv {

namespace {

constexpr int kMaxOracleSources = 4;

void check_oracle_size(int n) {
  if (n < 1 || n > kMaxOracleSources) {
    throw UnsupportedSizeError("the oracle decomposition supports 1 <= n <= 4, got " +
                               std::to_string(n));
  }
}

// p(y) for every target id; absent ids have probability 0.
std::vector<double> target_pmf(const JointDistribution& d) {
  std::vector<double> p_y(d.alphabet_size(d.target_index()), 0.0);
  const auto m = d.marginal(d.target_mask());
  for (std::size_t i = 0; i < m.support_size(); ++i) {
    p_y[m.outcome(i)[0]] += m.prob(i);
  }
  return p_y;
}

// Specific information of a source collection for every target id at once.
// Entries where p(y) = 0 are left at 0 and must not be read.
std::vector<double> specific_information_per_y(const JointDistribution& d,
                                               VarMask sources,
                                               const std::vector<double>& p_y) {
  struct TupleHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
      std::uint64_t h = 14695981039346656037ull;
      for (std::uint32_t x : v) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  const auto joint = d.marginal(sources | d.target_mask());
  const std::size_t k = joint.n_vars();  // collection variables plus target

  // p(x_a) accumulated from the (x_a, y) marginal.
  std::unordered_map<std::vector<std::uint32_t>, double, TupleHash> p_xa;
  p_xa.reserve(joint.support_size());
  std::vector<std::uint32_t> key(k - 1);
  for (std::size_t i = 0; i < joint.support_size(); ++i) {
    const auto ids = joint.outcome(i);
    key.assign(ids.begin(), ids.end() - 1);
    p_xa[key] += joint.prob(i);
  }

  std::vector<double> si(p_y.size(), 0.0);
  for (std::size_t i = 0; i < joint.support_size(); ++i) {
    const auto ids = joint.outcome(i);
    const std::uint32_t y = ids[k - 1];
    key.assign(ids.begin(), ids.end() - 1);
    const double joint_p = joint.prob(i);
    const double cond_y_given_xa = joint_p / p_xa.at(key);
    si[y] += (joint_p / p_y[y]) * (std::log2(cond_y_given_xa) - std::log2(p_y[y]));
  }
  return si;
}

VarMask collection_mask(SourceSet s) {
  // SourceSet bit i-1 is source i; VarMask uses the same 0-based bit layout.
  return static_cast<VarMask>(s);
}

}  // namespace

double AtomTable::value(const Antichain& alpha) const {
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    if (antichains[i] == alpha) return values[i];
  }
  throw OutOfRangeInputError("antichain not present in the atom table");
}

std::map<std::string, double> AtomTable::as_map() const {
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    out.emplace(antichains[i].to_string(), values[i]);
  }
  return out;
}

std::string AtomTable::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    out += antichains[i].to_string();
    out.push_back('\t');
    out += format_real(values[i]);
    out.push_back('\n');
  }
  return out;
}

double specific_information(const JointDistribution& d, VarMask sources,
                            std::uint32_t y_id) {
  if (sources == 0) throw EmptyVariableSetError("empty source collection");
  if (sources & ~d.all_sources()) {
    throw IndexOutOfRangeError("collection contains non-source indices");
  }
  const auto p_y = target_pmf(d);
  if (y_id >= p_y.size() || !(p_y[y_id] > 0.0)) {
    throw ZeroProbabilityTargetError("target symbol has zero probability");
  }
  return specific_information_per_y(d, sources, p_y)[y_id];
}

double imin(const JointDistribution& d, const Antichain& alpha) {
  check_oracle_size(static_cast<int>(d.n_sources()));
  if (alpha.n_sources() != static_cast<int>(d.n_sources())) {
    throw MismatchedSourceCountError(
        "antichain indexes a different number of sources");
  }
  const auto p_y = target_pmf(d);
  std::vector<std::vector<double>> si_per_set;
  si_per_set.reserve(alpha.sets().size());
  for (SourceSet s : alpha.sets()) {
    si_per_set.push_back(specific_information_per_y(d, collection_mask(s), p_y));
  }
  double total = 0.0;
  for (std::size_t y = 0; y < p_y.size(); ++y) {
    if (!(p_y[y] > 0.0)) continue;
    double lowest = si_per_set[0][y];
    for (std::size_t s = 1; s < si_per_set.size(); ++s) {
      lowest = std::min(lowest, si_per_set[s][y]);
    }
    total += p_y[y] * lowest;
  }
  return total;
}

AtomTable atoms_moebius(const JointDistribution& d) {
  const int n = static_cast<int>(d.n_sources());
  check_oracle_size(n);

  AtomTable table;
  table.n_sources = n;
  table.antichains = enumerate_antichains(n);

  const auto p_y = target_pmf(d);

  // Each distinct collection's specific information is shared across all
  // antichains that mention it.
  std::unordered_map<SourceSet, std::vector<double>> si_cache;
  auto si_for = [&](SourceSet s) -> const std::vector<double>& {
    auto it = si_cache.find(s);
    if (it == si_cache.end()) {
      it = si_cache
               .emplace(s, specific_information_per_y(d, collection_mask(s), p_y))
               .first;
    }
    return it->second;
  };

  const std::size_t count = table.antichains.size();
  std::vector<double> cumulative(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& alpha = table.antichains[i];
    double total = 0.0;
    for (std::size_t y = 0; y < p_y.size(); ++y) {
      if (!(p_y[y] > 0.0)) continue;
      double lowest = si_for(alpha.sets()[0])[y];
      for (std::size_t s = 1; s < alpha.sets().size(); ++s) {
        lowest = std::min(lowest, si_for(alpha.sets()[s])[y]);
      }
      total += p_y[y] * lowest;
    }
    cumulative[i] = total;
  }

  // Invert the cumulative values along the enumeration order; every strict
  // predecessor appears earlier because the order extends the lattice order.
  std::vector<std::uint32_t> closures(count);
  for (std::size_t i = 0; i < count; ++i) {
    closures[i] = up_closure_mask(table.antichains[i]);
  }
  table.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    double below = 0.0;
    for (std::size_t j = 0; j < i; ++j) {
      if ((closures[i] & ~closures[j]) == 0) below += table.values[j];
    }
    table.values[i] = cumulative[i] - below;
  }
  return table;
}

namespace {

double degree_mass(const AtomTable& table, int k,
                   int (*degree)(const Antichain&)) {
  if (k < 0 || k > table.n_sources) {
    throw OutOfRangeInputError("degree k must lie in 0..n");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < table.antichains.size(); ++i) {
    if (degree(table.antichains[i]) == k) sum += table.values[i];
  }
  return sum;
}

}  // namespace

double k_redundant_information(const AtomTable& table, int k) {
  return degree_mass(table, k, degree_redundancy);
}

double k_vulnerable_information(const AtomTable& table, int k) {
  return degree_mass(table, k, degree_vulnerability);
}

}  // namespace shinv
