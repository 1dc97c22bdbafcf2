#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shinv {

// Subsets of {1..n} as bitmasks: bit i-1 set means source i is a member.
using SourceSet = std::uint32_t;

// A nonempty collection of pairwise-incomparable nonempty source subsets;
// the index of one information atom. Canonical form: sets ordered by
// (size, lexicographic member order).
class Antichain {
 public:
  // Validates and canonicalizes. Throws when a set is empty, out of range,
  // duplicated, or contained in another set of the collection.
  static Antichain from_sets(std::vector<SourceSet> sets, int n_sources);

  const std::vector<SourceSet>& sets() const { return sets_; }
  int n_sources() const { return n_sources_; }

  // "{1}{2,3}" style rendering, canonical order, members comma-separated.
  std::string to_string() const;

  bool operator==(const Antichain& other) const {
    return n_sources_ == other.n_sources_ && sets_ == other.sets_;
  }

 private:
  Antichain(std::vector<SourceSet> sets, int n_sources)
      : sets_(std::move(sets)), n_sources_(n_sources) {}

  std::vector<SourceSet> sets_;
  int n_sources_ = 0;

  friend std::vector<Antichain> enumerate_antichains(int n);
};

// Total order used for deterministic tie-breaking: lexicographic over the
// canonical set sequences.
bool canonical_less(const Antichain& a, const Antichain& b);

// All antichains for n sources (1 <= n <= 5), ordered by down-set size and
// then canonical form. This order is a linear extension of the lattice
// order, so cumulative sums can walk it directly.
std::vector<Antichain> enumerate_antichains(int n);

// Number of singleton sets in the antichain.
int degree_redundancy(const Antichain& alpha);

// Number of sources contained in every set of the antichain.
int degree_vulnerability(const Antichain& alpha);

// alpha <= beta in the redundancy lattice: every set of beta contains some
// set of alpha.
bool lattice_leq(const Antichain& alpha, const Antichain& beta);

// All beta with beta <= alpha, including alpha itself, in enumeration order.
// Requires n <= 5.
std::vector<Antichain> down_set(const Antichain& alpha);

// Bitmask over the nonempty subsets of {1..n} (bit m-1 for subset mask m)
// that contain some set of alpha. Two antichains compare as
// alpha <= beta iff up_closure(beta) is a subset of up_closure(alpha).
// Requires n <= 5 so the result fits 32 bits.
std::uint32_t up_closure_mask(const Antichain& alpha);

}  // namespace shinv
