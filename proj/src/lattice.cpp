#include "shinv/lattice.hpp"

#include <algorithm>
#include <bit>

#include "shinv/errors.hpp"

namespace shinv {

namespace {

constexpr int kMaxEnumeratedSources = 5;

// (size, lexicographic member order); members compare low to high.
bool set_less(SourceSet a, SourceSet b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

bool subset_of(SourceSet a, SourceSet b) { return (a & ~b) == 0; }

void check_enumeration_size(int n) {
  if (n < 1 || n > kMaxEnumeratedSources) {
    throw UnsupportedSizeError("antichain enumeration supports 1 <= n <= 5, got " +
                               std::to_string(n));
  }
}

}  // namespace

Antichain Antichain::from_sets(std::vector<SourceSet> sets, int n_sources) {
  if (n_sources < 1 || n_sources > 31) {
    throw OutOfRangeInputError("antichain needs 1 <= n_sources <= 31");
  }
  if (sets.empty()) throw OutOfRangeInputError("antichain has no sets");
  const SourceSet full = (SourceSet{1} << n_sources) - 1;
  for (SourceSet s : sets) {
    if (s == 0) throw OutOfRangeInputError("antichain contains an empty set");
    if (s & ~full) {
      throw IndexOutOfRangeError("set member outside 1.." +
                                 std::to_string(n_sources));
    }
  }
  std::sort(sets.begin(), sets.end(), set_less);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i] == sets[j]) {
        throw OutOfRangeInputError("duplicate set in antichain");
      }
      if (subset_of(sets[i], sets[j]) || subset_of(sets[j], sets[i])) {
        throw OutOfRangeInputError("sets are not pairwise incomparable");
      }
    }
  }
  return Antichain(std::move(sets), n_sources);
}

std::string Antichain::to_string() const {
  std::string out;
  for (SourceSet s : sets_) {
    out.push_back('{');
    bool first = true;
    SourceSet rest = s;
    while (rest) {
      if (!first) out.push_back(',');
      out += std::to_string(std::countr_zero(rest) + 1);
      rest &= rest - 1;
      first = false;
    }
    out.push_back('}');
  }
  return out;
}

bool canonical_less(const Antichain& a, const Antichain& b) {
  const auto& sa = a.sets();
  const auto& sb = b.sets();
  const std::size_t common = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (sa[i] != sb[i]) return set_less(sa[i], sb[i]);
  }
  return sa.size() < sb.size();
}

std::uint32_t up_closure_mask(const Antichain& alpha) {
  if (alpha.n_sources() > kMaxEnumeratedSources) {
    throw UnsupportedSizeError("up-closure mask requires n <= 5");
  }
  const SourceSet full = (SourceSet{1} << alpha.n_sources()) - 1;
  std::uint32_t closure = 0;
  for (SourceSet m = 1; m <= full; ++m) {
    for (SourceSet s : alpha.sets()) {
      if (subset_of(s, m)) {
        closure |= std::uint32_t{1} << (m - 1);
        break;
      }
    }
  }
  return closure;
}

std::vector<Antichain> enumerate_antichains(int n) {
  check_enumeration_size(n);
  const SourceSet full = (SourceSet{1} << n) - 1;
  const int n_masks = static_cast<int>(full);

  // Candidate pools as bitsets over subset masks 1..full (bit m-1).
  std::vector<std::uint32_t> incomparable(n_masks + 1, 0);
  for (SourceSet a = 1; a <= full; ++a) {
    for (SourceSet b = 1; b <= full; ++b) {
      if (a != b && !subset_of(a, b) && !subset_of(b, a)) {
        incomparable[a] |= std::uint32_t{1} << (b - 1);
      }
    }
  }

  std::vector<std::vector<SourceSet>> families;
  std::vector<SourceSet> current;
  // Depth-first over ascending subset masks; the candidate pool keeps only
  // masks incomparable to everything chosen so far.
  auto recurse = [&](auto&& self, std::uint32_t candidates) -> void {
    std::uint32_t c = candidates;
    while (c) {
      const int m = std::countr_zero(c) + 1;
      c &= c - 1;
      current.push_back(static_cast<SourceSet>(m));
      families.push_back(current);
      const std::uint32_t higher = ~((std::uint32_t{1} << m) - 1);
      self(self, candidates & incomparable[m] & higher);
      current.pop_back();
    }
  };
  const std::uint32_t all_masks =
      (n_masks == 31) ? 0xffffffffu >> 1 : (std::uint32_t{1} << n_masks) - 1;
  recurse(recurse, all_masks);

  std::vector<Antichain> out;
  out.reserve(families.size());
  for (auto& sets : families) {
    out.push_back(Antichain::from_sets(std::move(sets), n));
  }

  std::vector<std::uint32_t> closures(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) closures[i] = up_closure_mask(out[i]);

  // |down-set| of alpha = #beta with closure(alpha) subset of closure(beta).
  std::vector<std::uint32_t> down_sizes(out.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t ci = closures[i];
    std::uint32_t count = 0;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if ((ci & ~closures[j]) == 0) ++count;
    }
    down_sizes[i] = count;
  }

  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (down_sizes[a] != down_sizes[b]) return down_sizes[a] < down_sizes[b];
    return canonical_less(out[a], out[b]);
  });

  std::vector<Antichain> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

int degree_redundancy(const Antichain& alpha) {
  int count = 0;
  for (SourceSet s : alpha.sets()) {
    if (std::popcount(s) == 1) ++count;
  }
  return count;
}

int degree_vulnerability(const Antichain& alpha) {
  SourceSet common = (SourceSet{1} << alpha.n_sources()) - 1;
  for (SourceSet s : alpha.sets()) common &= s;
  return std::popcount(common);
}

bool lattice_leq(const Antichain& alpha, const Antichain& beta) {
  if (alpha.n_sources() != beta.n_sources()) {
    throw MismatchedSourceCountError("antichains index different source counts");
  }
  for (SourceSet b : beta.sets()) {
    bool covered = false;
    for (SourceSet a : alpha.sets()) {
      if (subset_of(a, b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<Antichain> down_set(const Antichain& alpha) {
  check_enumeration_size(alpha.n_sources());
  std::vector<Antichain> out;
  for (auto& beta : enumerate_antichains(alpha.n_sources())) {
    if (lattice_leq(beta, alpha)) out.push_back(std::move(beta));
  }
  return out;
}

}  // namespace shinv
