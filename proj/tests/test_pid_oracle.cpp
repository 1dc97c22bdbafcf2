#include <doctest.h>

#include <cmath>
#include <random>

#include "shinv/errors.hpp"
#include "shinv/info_measures.hpp"
#include "shinv/invariants.hpp"
#include "shinv/pid_oracle.hpp"
#include "shinv/random_ensemble.hpp"
#include "test_support.hpp"

using namespace shinv;

namespace {

Antichain ac(std::vector<SourceSet> sets, int n) {
  return Antichain::from_sets(std::move(sets), n);
}

// frozen from the brute-force enumeration oracle
constexpr double kAndBottomAtom = 0.31127812445913283;
constexpr double kAndSpecificY0 = 0.081704165945510471;

}  // namespace

TEST_CASE("specific information on the gates") {
  const auto c = testsup::copy_dist();
  CHECK(specific_information(c, var_bit(0), 0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // target independent of the probed source
  const auto x = testsup::xor_dist();
  CHECK(specific_information(x, var_bit(0), 0) == doctest::Approx(0.0));
  CHECK(specific_information(x, var_bit(0), 1) == doctest::Approx(0.0));

  const auto a = testsup::and_dist();
  CHECK(specific_information(a, var_bit(0), 1) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(specific_information(a, var_bit(0), 0) ==
        doctest::Approx(kAndSpecificY0).epsilon(1e-12));
}

TEST_CASE("specific information rejects zero-probability targets") {
  using Entry = std::pair<std::vector<std::uint32_t>, double>;
  std::vector<Entry> entries = {{{0, 0}, 0.5}, {{1, 1}, 0.5}};
  // target alphabet declares a third symbol that never occurs
  const auto d = JointDistribution::from_pmf(1, {2, 3}, std::move(entries));
  CHECK_THROWS_AS(specific_information(d, var_bit(0), 2),
                  ZeroProbabilityTargetError);
  CHECK_THROWS_AS(specific_information(d, 0, 0), EmptyVariableSetError);
}

TEST_CASE("averaged specific information recovers mutual information") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 40; ++t) {
    const auto d = random_joint(rng, 2);
    for (VarMask a = 1; a <= d.all_sources(); ++a) {
      const auto py = d.marginal(d.target_mask());
      double averaged = 0.0;
      for (std::size_t i = 0; i < py.support_size(); ++i) {
        averaged +=
            py.prob(i) * specific_information(d, a, py.outcome(i)[0]);
      }
      CHECK(std::abs(averaged - mutual_information(d, a)) <= 1e-10);
    }
  }
}

TEST_CASE("imin at the top antichain equals the joint mutual information") {
  std::mt19937_64 rng(556);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto d = random_joint(rng, n);
    const auto top = ac({static_cast<SourceSet>((1u << n) - 1)},
                        static_cast<int>(n));
    CHECK(std::abs(imin(d, top) - mutual_information(d, d.all_sources())) <=
          1e-10);
  }
}

TEST_CASE("imin at the bottom on the gates") {
  const auto bottom = ac({0b01, 0b10}, 2);
  CHECK(imin(testsup::copy_dist(), bottom) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(imin(testsup::xor_dist(), bottom) == doctest::Approx(0.0));
  CHECK(imin(testsup::and_dist(), bottom) ==
        doctest::Approx(kAndBottomAtom).epsilon(1e-12));
}

TEST_CASE("imin size and arity guards") {
  std::mt19937_64 rng(557);
  const auto d5 = random_joint(rng, 5);
  const auto alpha5 = ac({0b00001}, 5);
  CHECK_THROWS_AS(imin(d5, alpha5), UnsupportedSizeError);
  CHECK_THROWS_AS(atoms_moebius(d5), UnsupportedSizeError);

  const auto d2 = random_joint(rng, 2);
  CHECK_THROWS_AS(imin(d2, ac({0b001}, 3)), MismatchedSourceCountError);
}

TEST_CASE("atom tables for the canonical gates") {
  const auto copy_atoms = atoms_moebius(testsup::copy_dist());
  CHECK(copy_atoms.value(ac({0b01, 0b10}, 2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(copy_atoms.value(ac({0b01}, 2)) == doctest::Approx(0.0));
  CHECK(copy_atoms.value(ac({0b10}, 2)) == doctest::Approx(0.0));
  CHECK(copy_atoms.value(ac({0b11}, 2)) == doctest::Approx(0.0));

  const auto xor_atoms = atoms_moebius(testsup::xor_dist());
  CHECK(xor_atoms.value(ac({0b11}, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(xor_atoms.value(ac({0b01, 0b10}, 2)) == doctest::Approx(0.0));
  CHECK(xor_atoms.value(ac({0b01}, 2)) == doctest::Approx(0.0));

  const auto and_atoms = atoms_moebius(testsup::and_dist());
  CHECK(and_atoms.value(ac({0b01, 0b10}, 2)) ==
        doctest::Approx(kAndBottomAtom).epsilon(1e-12));
  CHECK(and_atoms.value(ac({0b01}, 2)) == doctest::Approx(0.0));
  CHECK(and_atoms.value(ac({0b10}, 2)) == doctest::Approx(0.0));
  CHECK(and_atoms.value(ac({0b11}, 2)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("atom table invariants on random ensembles") {
  std::mt19937_64 rng(558);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 3;  // cycles over 2, 3, 4
    const auto d = random_joint(rng, n);
    const auto atoms = atoms_moebius(d);

    REQUIRE(atoms.antichains.size() == enumerate_antichains(n).size());
    double total = 0.0;
    for (double v : atoms.values) {
      CHECK(v >= -1e-9);
      total += v;
    }
    CHECK(std::abs(total - mutual_information(d, d.all_sources())) <= 1e-9);
  }
}

TEST_CASE("consistency equations hold for every source subset") {
  std::mt19937_64 rng(559);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 2;
    const auto d = random_joint(rng, n);
    const auto atoms = atoms_moebius(d);
    const VarMask full = d.all_sources();
    for (VarMask a = 1; a <= full; ++a) {
      double covered = 0.0;
      double rest = 0.0;
      for (std::size_t i = 0; i < atoms.antichains.size(); ++i) {
        bool inside = false;
        for (SourceSet s : atoms.antichains[i].sets()) {
          if ((static_cast<VarMask>(s) & ~a) == 0) {
            inside = true;
            break;
          }
        }
        (inside ? covered : rest) += atoms.values[i];
      }
      CHECK(std::abs(mutual_information(d, a) - covered) <= 1e-9);
      const VarMask comp = full & ~a;
      const double cmi = comp ? conditional_mi(d, comp, a) : 0.0;
      CHECK(std::abs(cmi - rest) <= 1e-9);
    }
  }
}

TEST_CASE("k-degree information sums on the gates") {
  const auto xor_atoms = atoms_moebius(testsup::xor_dist());
  CHECK(k_redundant_information(xor_atoms, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k_vulnerable_information(xor_atoms, 2) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto copy_atoms = atoms_moebius(testsup::copy_dist());
  CHECK(k_redundant_information(copy_atoms, 2) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k_vulnerable_information(copy_atoms, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto and_atoms = atoms_moebius(testsup::and_dist());
  CHECK(k_vulnerable_information(and_atoms, 1) == doctest::Approx(0.0));

  CHECK_THROWS_AS(k_redundant_information(xor_atoms, 3), OutOfRangeInputError);
  CHECK_THROWS_AS(k_vulnerable_information(xor_atoms, -1), OutOfRangeInputError);
}

TEST_CASE("k-degree masses partition the joint mutual information") {
  std::mt19937_64 rng(560);
  for (int t = 0; t < 30; ++t) {
    const auto d = random_joint(rng, 3);
    const auto atoms = atoms_moebius(d);
    double r_total = 0.0;
    double v_total = 0.0;
    for (int k = 0; k <= 3; ++k) {
      r_total += k_redundant_information(atoms, k);
      v_total += k_vulnerable_information(atoms, k);
    }
    const double total = mutual_information(d, d.all_sources());
    CHECK(std::abs(r_total - total) <= 1e-9);
    CHECK(std::abs(v_total - total) <= 1e-9);
  }
}

TEST_CASE("atom table serialization is deterministic two-column text") {
  const auto atoms = atoms_moebius(testsup::and_dist());
  const std::string text = atoms.serialize();
  CHECK(text == atoms.serialize());
  CHECK(text.find("{1}{2}\t") != std::string::npos);
  CHECK(text.find("{1,2}\t0.5\n") != std::string::npos);

  const auto map = atoms.as_map();
  REQUIRE(map.size() == 4);
  CHECK(map.count("{1}{2}") == 1);
  CHECK(map.count("{1,2}") == 1);
}
