#include "shinv/info_measures.hpp"

#include "shinv/errors.hpp"
#include "shinv/kernels.hpp"

namespace shinv {

namespace {

double clamp_nonneg(double value, double tol) {
  if (value < 0.0 && value >= -tol) return 0.0;
  return value;
}

void check_sources(const JointDistribution& d, VarMask sources) {
  if (sources == 0) throw EmptyVariableSetError("empty source subset");
  if (sources & ~d.all_sources()) {
    throw IndexOutOfRangeError("source subset contains non-source indices");
  }
}

}  // namespace

double entropy(const JointDistribution& d, VarMask vars) {
  const auto probs = d.marginal_probs(vars);  // validates vars
  return kernels::entropy_bits(probs);
}

double mutual_information(const JointDistribution& d, VarMask sources,
                          double clamp_tol) {
  check_sources(d, sources);
  const VarMask y = d.target_mask();
  const double value =
      entropy(d, sources) + entropy(d, y) - entropy(d, sources | y);
  return clamp_nonneg(value, clamp_tol);
}

double conditional_mi(const JointDistribution& d, VarMask sources,
                      VarMask cond, double clamp_tol) {
  check_sources(d, sources);
  if (cond == 0) return mutual_information(d, sources, clamp_tol);
  if (cond & ~d.all_sources()) {
    throw IndexOutOfRangeError("conditioning subset contains non-source indices");
  }
  if (sources & cond) {
    throw OverlappingSubsetsError("source and conditioning subsets overlap");
  }
  const VarMask y = d.target_mask();
  const double value = entropy(d, sources | cond) + entropy(d, y | cond) -
                       entropy(d, sources | y | cond) - entropy(d, cond);
  return clamp_nonneg(value, clamp_tol);
}

}  // namespace shinv
