#pragma once

#include "shinv/joint_distribution.hpp"

namespace shinv {

// Results below this magnitude under zero are treated as rounding noise and
// clamped to 0.
inline constexpr double kDefaultClampTol = 1e-12;

// H over the marginal on vars, in bits, with the 0*log(0) = 0 convention
// (zero-mass outcomes are never stored, so it never arises numerically).
double entropy(const JointDistribution& d, VarMask vars);

// I(a;Y) for a set of sources, via H(a) + H(Y) - H(a,Y).
double mutual_information(const JointDistribution& d, VarMask sources,
                          double clamp_tol = kDefaultClampTol);

// I(a;Y|c) for disjoint source sets, via
// H(a,c) + H(Y,c) - H(a,Y,c) - H(c). An empty c falls back to I(a;Y).
double conditional_mi(const JointDistribution& d, VarMask sources,
                      VarMask cond, double clamp_tol = kDefaultClampTol);

}  // namespace shinv
