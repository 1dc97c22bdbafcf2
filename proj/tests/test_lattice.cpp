#include <doctest.h>

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "shinv/errors.hpp"
#include "shinv/lattice.hpp"

using namespace shinv;

namespace {

bool oracle_subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

// Oracle 1: filter every family of nonempty subsets (2^(2^n - 1) of them)
// down to the antichains. Tractable for n <= 4.
std::size_t count_antichains_by_filter(int n) {
  const std::uint32_t n_masks = (std::uint32_t{1} << n) - 1;
  std::size_t count = 0;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << n_masks);
       ++family) {
    std::vector<std::uint32_t> sets;
    for (std::uint32_t m = 1; m <= n_masks; ++m) {
      if (family & (std::uint64_t{1} << (m - 1))) sets.push_back(m);
    }
    bool ok = true;
    for (std::size_t i = 0; i < sets.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < sets.size() && ok; ++j) {
        if (oracle_subset(sets[i], sets[j]) || oracle_subset(sets[j], sets[i])) {
          ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Oracle 2: memoized recursion. The number of antichains (including the
// empty one) of a poset P satisfies
//   A(P) = A(P - {x}) + A(P - comparables(x)).
std::uint64_t count_antichains_rec(std::uint32_t remaining,
                                   const std::vector<std::uint32_t>& comparable,
                                   std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
  if (remaining == 0) return 1;
  auto it = memo.find(remaining);
  if (it != memo.end()) return it->second;
  const int bit = std::countr_zero(remaining);
  const std::uint32_t without = remaining & ~(std::uint32_t{1} << bit);
  const std::uint64_t result =
      count_antichains_rec(without, comparable, memo) +
      count_antichains_rec(remaining & ~comparable[bit], comparable, memo);
  memo.emplace(remaining, result);
  return result;
}

std::uint64_t count_antichains_by_recursion(int n) {
  const std::uint32_t n_masks = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> comparable(n_masks);
  for (std::uint32_t a = 1; a <= n_masks; ++a) {
    for (std::uint32_t b = 1; b <= n_masks; ++b) {
      if (oracle_subset(a, b) || oracle_subset(b, a)) {
        comparable[a - 1] |= std::uint32_t{1} << (b - 1);
      }
    }
  }
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  const std::uint32_t all =
      (n_masks == 31) ? 0x7fffffffu : (std::uint32_t{1} << n_masks) - 1;
  return count_antichains_rec(all, comparable, memo) - 1;  // drop the empty one
}

Antichain ac(std::vector<SourceSet> sets, int n) {
  return Antichain::from_sets(std::move(sets), n);
}

}  // namespace

TEST_CASE("enumeration counts match both independent oracles") {
  const std::vector<std::size_t> expected = {1, 4, 18, 166, 7579};
  for (int n = 1; n <= 5; ++n) {
    const auto antichains = enumerate_antichains(n);
    CHECK(antichains.size() == expected[n - 1]);
    CHECK(count_antichains_by_recursion(n) == expected[n - 1]);
    if (n <= 4) {
      CHECK(count_antichains_by_filter(n) == expected[n - 1]);
    }
  }
  CHECK_THROWS_AS(enumerate_antichains(6), UnsupportedSizeError);
  CHECK_THROWS_AS(enumerate_antichains(0), UnsupportedSizeError);
}

TEST_CASE("enumeration is deterministic and starts at the bottom") {
  const auto a = enumerate_antichains(3);
  const auto b = enumerate_antichains(3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  CHECK(a.front().to_string() == "{1}{2}{3}");
  CHECK(a.back().to_string() == "{1,2,3}");
}

TEST_CASE("canonical form sorts sets by size then members") {
  const auto alpha = ac({0b110, 0b001}, 3);  // {2,3} and {1}
  CHECK(alpha.to_string() == "{1}{2,3}");

  const auto beta = ac({0b1001, 0b0110}, 4);  // {1,4} vs {2,3}
  CHECK(beta.to_string() == "{1,4}{2,3}");
}

TEST_CASE("antichain construction rejects invalid collections") {
  CHECK_THROWS_AS(ac({}, 2), OutOfRangeInputError);
  CHECK_THROWS_AS(ac({0b01, 0b11}, 2), OutOfRangeInputError);  // {1} in {1,2}
  CHECK_THROWS_AS(ac({0b01, 0b01}, 2), OutOfRangeInputError);  // duplicate
  CHECK_THROWS_AS(ac({0b100}, 2), IndexOutOfRangeError);       // member 3, n=2
  CHECK_THROWS_AS(ac({0}, 2), OutOfRangeInputError);           // empty set
}

TEST_CASE("degree of redundancy counts singleton access routes") {
  CHECK(degree_redundancy(ac({0b11}, 2)) == 0);
  CHECK(degree_redundancy(ac({0b001, 0b110}, 3)) == 1);
  CHECK(degree_redundancy(ac({0b01, 0b10}, 2)) == 2);
}

TEST_CASE("degree of vulnerability counts strictly necessary sources") {
  CHECK(degree_vulnerability(ac({0b011, 0b101}, 3)) == 1);
  CHECK(degree_vulnerability(ac({0b011, 0b101, 0b110}, 3)) == 0);
  CHECK(degree_vulnerability(ac({0b1}, 1)) == 1);
}

TEST_CASE("lattice order compares accessibility") {
  CHECK(lattice_leq(ac({0b01, 0b10}, 2), ac({0b01}, 2)));
  CHECK_FALSE(lattice_leq(ac({0b01}, 2), ac({0b10}, 2)));
  for (const auto& alpha : enumerate_antichains(3)) {
    CHECK(lattice_leq(alpha, alpha));
  }
  CHECK_THROWS_AS(lattice_leq(ac({0b01}, 2), ac({0b01}, 3)),
                  MismatchedSourceCountError);
}

TEST_CASE("the order is a partial order (exhaustive for n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_antichains(n);
    const std::size_t count = all.size();
    std::vector<std::vector<bool>> leq(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        leq[i][j] = lattice_leq(all[i], all[j]);
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      CHECK(leq[i][i]);
      for (std::size_t j = 0; j < count; ++j) {
        if (i == j) continue;
        const bool both_ways = leq[i][j] && leq[j][i];  // antisymmetry
        CHECK_FALSE(both_ways);
      }
    }
    bool transitive = true;
    for (std::size_t i = 0; i < count && transitive; ++i) {
      for (std::size_t j = 0; j < count && transitive; ++j) {
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < count; ++k) {
          if (leq[j][k] && !leq[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    CHECK(transitive);
  }
}

TEST_CASE("unique bottom and top for every n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_antichains(n);
    std::size_t bottoms = 0;
    std::size_t tops = 0;
    for (const auto& alpha : all) {
      bool is_bottom = true;
      bool is_top = true;
      for (const auto& beta : all) {
        if (!lattice_leq(alpha, beta)) is_bottom = false;
        if (!lattice_leq(beta, alpha)) is_top = false;
      }
      bottoms += is_bottom;
      tops += is_top;
      if (is_bottom) {
        CHECK(static_cast<int>(alpha.sets().size()) == n);  // all singletons
      }
      if (is_top) {
        CHECK(alpha.sets().size() == 1);
        CHECK(std::popcount(alpha.sets()[0]) == n);
      }
    }
    CHECK(bottoms == 1);
    CHECK(tops == 1);
  }
}

TEST_CASE("n=3 degree histograms match the brute-force classification") {
  std::map<int, int> r_hist;
  std::map<int, int> v_hist;
  for (const auto& alpha : enumerate_antichains(3)) {
    ++r_hist[degree_redundancy(alpha)];
    ++v_hist[degree_vulnerability(alpha)];
  }
  const std::map<int, int> expected = {{0, 8}, {1, 6}, {2, 3}, {3, 1}};
  CHECK(r_hist == expected);
  CHECK(v_hist == expected);
}

TEST_CASE("redundancy above one excludes vulnerability and vice versa") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& alpha : enumerate_antichains(n)) {
      const int r = degree_redundancy(alpha);
      const int v = degree_vulnerability(alpha);
      if (r > 1) CHECK(v == 0);
      if (v > 1) CHECK(r == 0);
    }
  }
}

TEST_CASE("down sets") {
  const auto bottom = ac({0b001, 0b010, 0b100}, 3);
  CHECK(down_set(bottom).size() == 1);

  const auto top2 = ac({0b11}, 2);
  CHECK(down_set(top2).size() == 4);

  // cross-check against pairwise filtering for all antichains at n=3
  const auto all = enumerate_antichains(3);
  for (const auto& alpha : all) {
    std::size_t expected = 0;
    for (const auto& beta : all) {
      if (lattice_leq(beta, alpha)) ++expected;
    }
    CHECK(down_set(alpha).size() == expected);
  }
}

TEST_CASE("enumeration order extends the lattice order") {
  for (int n = 2; n <= 4; ++n) {
    const auto all = enumerate_antichains(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        // a strictly later antichain can never lie below an earlier one
        const bool later_below =
            lattice_leq(all[j], all[i]) && !(all[i] == all[j]);
        CHECK_FALSE(later_below);
      }
    }
  }
}

TEST_CASE("up-closure masks reproduce the pairwise order") {
  const auto all = enumerate_antichains(4);
  std::vector<std::uint32_t> closures;
  closures.reserve(all.size());
  for (const auto& alpha : all) closures.push_back(up_closure_mask(alpha));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const bool via_mask = (closures[j] & ~closures[i]) == 0;
      CHECK(via_mask == lattice_leq(all[i], all[j]));
    }
  }
}
