#pragma once

// Two-qubit hidden-variable model factored into two independent
// single-qubit dispersion-free models (one per side, hidden variables
// lambda1, lambda2, each uniform on [-1/2, 1/2]).  Expectations
// multiply:  <a (x) b> = (a.s1)(b.s2), exactly the correlations of the
// product state rho(s1) (x) rho(s2).  Because integration restores
// linearity on each side separately, the two CHSH evaluation paths
// agree here and the value stays within the two-sided bound 2 -- the
// discrepancy of the unfactored treatment disappears.

#include <cstdint>

#include "hvsim/bell_d2.hpp"
#include "hvsim/geometry.hpp"

namespace hvsim {

// The model is specified by the two polarization directions.
struct FactoredModel {
  UnitVector3 s1;
  UnitVector3 s2;
};

// <a.sigma (x) b.sigma> in the factored model: (a.s1)(b.s2).
double product_expectation(const FactoredModel& model, const UnitVector3& a,
                           const UnitVector3& b);

// CHSH combination evaluated both ways on the factored model.
//   path_a: |b+b'| <a><btilde> + |b-b'| <a'><btilde'>
//   path_b: <a>(<b> + <b'>) + <a'>(<b> - <b'>)
// difference = path_a - path_b, zero to rounding for every model, and
// both values stay within [-2, 2].
struct FactoredChshReport {
  double path_a{};
  double path_b{};
  double difference{};
};

FactoredChshReport factored_chsh(const FactoredModel& model,
                                 const MeasurementSettings& s);

// Integrated linearity on the b side:  expectation of the combination
// a (x) (b +- b') evaluated through the normalized direction (lhs)
// against the sum/difference of the individual expectations (rhs).
// lhs equals rhs to rounding for every model; a zero-norm combination
// (b' = -+ b) contributes lhs = 0 directly.
struct LinearityCheck {
  double lhs_plus{};
  double rhs_plus{};
  double lhs_minus{};
  double rhs_minus{};
};

LinearityCheck linearity_after_integration(const FactoredModel& model,
                                           const UnitVector3& a,
                                           const UnitVector3& b,
                                           const UnitVector3& b_prime);

// Pointwise witness that linearity still fails before integration:
// samples lambda2 and checks
//   |b+b'| v(btilde) - v(b) - v(b')  !=  0
// at every sample, where v is the dichotomic value in the b-side
// model.  The first term is +-|b+b'| while v(b) + v(b') is in
// {-2, 0, 2}; for non-collinear b, b' the sets are disjoint, so the
// witness holds at every hidden-variable point.  Returns true iff
// nonzero at all samples.
bool pointwise_nonlinearity_witness(const FactoredModel& model,
                                    const UnitVector3& b,
                                    const UnitVector3& b_prime,
                                    int sample_count,
                                    std::uint64_t seed = 0x5eed);

// Weight factors of the marginal d=2 model induced on the b side by
// integrating out lambda1 against nothing, the a-projector, or its
// complement.  For the factored weight all three marginals are
// proportional to the uniform lambda2 weight with constants
//   c_total = 1,  c_theta = (1 + s1.a_theta)/2,  c_bar = 1 - c_theta;
// the proportionality is spot-checked on a lambda2 sample grid.
struct MarginalWeights {
  double c_total{};
  double c_theta{};
  double c_bar{};
};

MarginalWeights marginal_weights(const FactoredModel& model,
                                 const UnitVector3& theta_direction);

}  // namespace hvsim
