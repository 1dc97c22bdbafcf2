#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shinv/joint_distribution.hpp"
#include "shinv/lattice.hpp"

// Brute-force reference decomposition based on minimum specific information,
// used to certify the invariant identities and bounds at small n. Production
// paths never enumerate atoms; this is verification machinery.

namespace shinv {

// Explicit atom values for every antichain, in enumeration order.
struct AtomTable {
  int n_sources = 0;
  std::vector<Antichain> antichains;
  std::vector<double> values;  // bits

  double value(const Antichain& alpha) const;
  std::map<std::string, double> as_map() const;

  // Two-column text: canonical antichain string, value in bits with 12
  // significant digits.
  std::string serialize() const;
};

// sum_{x_a} p(x_a|y) * (log2 p(y|x_a) - log2 p(y)), in bits. The per-target
// building block of the redundancy measure. Throws ZeroProbabilityTargetError
// when p(y) = 0.
double specific_information(const JointDistribution& d, VarMask sources,
                            std::uint32_t y_id);

// sum_y p(y) * min over the antichain's collections of the specific
// information. Requires n <= 4.
double imin(const JointDistribution& d, const Antichain& alpha);

// Atoms by Moebius inversion of imin down the redundancy lattice, walking
// the enumeration order (a linear extension). Requires n <= 4.
AtomTable atoms_moebius(const JointDistribution& d);

// Total atom mass at degree of redundancy exactly k.
double k_redundant_information(const AtomTable& table, int k);

// Total atom mass at degree of vulnerability exactly k.
double k_vulnerable_information(const AtomTable& table, int k);

}  // namespace shinv
