// The two deterministic evaluation paths for one CHSH combination:
// exhaustive assignment enumeration, exact path values, the maxima
// gap with frozen anchors, and the original three-setting inequality.

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hvsim/chsh_paths.hpp"
#include "hvsim/errors.hpp"
#include "hvsim/rng.hpp"
#include "hvsim/sampling.hpp"

using namespace hvsim;

namespace {
constexpr double kTwoSqrtTwo = 2.8284271247461903;

MeasurementSettings orthogonal_settings() {
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const UnitVector3 ez{0.0, 0.0, 1.0};
  return {ez, ex, ez, ex};
}

// Settings with a pinned overlap b.b' = c, all vectors in the x-z
// plane; the dot product is exact because the z-component is literal.
MeasurementSettings planar_settings(double c) {
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const UnitVector3 ez{0.0, 0.0, 1.0};
  return {ez, ex, ez, UnitVector3{std::sqrt(1.0 - c * c), 0.0, c}};
}
}  // namespace

TEST_SUITE("chsh paths") {

TEST_CASE("assignment encoding") {
  const DichotomicAssignment all_plus = assignment_from_index(Path::A, 0);
  for (int l = 0; l < kLabelCount; ++l) CHECK(all_plus[l] == 1);

  const DichotomicAssignment flipped = assignment_from_index(Path::A, 15);
  CHECK(value_of(flipped, ObservableLabel::ATheta) == -1);
  CHECK(value_of(flipped, ObservableLabel::AThetaPrime) == -1);
  CHECK(value_of(flipped, ObservableLabel::BTilde) == -1);
  CHECK(value_of(flipped, ObservableLabel::BTildePrime) == -1);
  // Labels outside the path stay +1.
  CHECK(value_of(flipped, ObservableLabel::BPhi) == 1);
  CHECK(value_of(flipped, ObservableLabel::BPhiPrime) == 1);

  const DichotomicAssignment b_flipped = assignment_from_index(Path::B, 12);
  CHECK(value_of(b_flipped, ObservableLabel::ATheta) == 1);
  CHECK(value_of(b_flipped, ObservableLabel::AThetaPrime) == 1);
  CHECK(value_of(b_flipped, ObservableLabel::BPhi) == -1);
  CHECK(value_of(b_flipped, ObservableLabel::BPhiPrime) == -1);

  CHECK_THROWS_AS(assignment_from_index(Path::A, -1), std::invalid_argument);
  CHECK_THROWS_AS(assignment_from_index(Path::B, 16), std::invalid_argument);
}

TEST_CASE("path B is exactly +-2 on every assignment") {
  for (int idx = 0; idx < 16; ++idx) {
    const double v = path_b_value(assignment_from_index(Path::B, idx));
    CHECK((v == 2.0 || v == -2.0));
  }
}

TEST_CASE("path A values at pinned assignments") {
  const auto t = tilde_vectors(UnitVector3{0.0, 0.0, 1.0},
                               UnitVector3{1.0, 0.0, 0.0});
  // All +1: the value is |b+b'| + |b-b'| = sqrt 2 + sqrt 2 = 2 sqrt 2,
  // exact in floating point.
  CHECK(path_a_value(assignment_from_index(Path::A, 0), t) ==
        2.0 * std::sqrt(2.0));
  // Flipping the sum direction cancels the terms exactly.
  DichotomicAssignment v = assignment_from_index(Path::A, 0);
  v[static_cast<int>(ObservableLabel::BTilde)] = -1;
  CHECK(path_a_value(v, t) == 0.0);

  // The settings overload derives the same decomposition.
  const MeasurementSettings s = orthogonal_settings();
  CHECK(path_a_value(assignment_from_index(Path::A, 0), s) ==
        path_a_value(assignment_from_index(Path::A, 0), t));
}

TEST_CASE("maxima over weights: orthogonal settings") {
  const MeasurementSettings s = orthogonal_settings();

  const PathMaximum a = max_over_weights(Path::A, s);
  CHECK(std::abs(a.value - kTwoSqrtTwo) <= 1e-12);
  CHECK(a.achieving_index == 0);  // all +1 already attains it
  CHECK(a.weights[a.achieving_index] == 1.0);
  double weight_sum = 0.0;
  for (const double w : a.weights) {
    CHECK(w >= 0.0);
    weight_sum += w;
  }
  CHECK(weight_sum == 1.0);

  const PathMaximum b = max_over_weights(Path::B, s);
  CHECK(b.value == 2.0);
  CHECK(b.achieving_index == 0);
}

TEST_CASE("path B tolerates collinear settings") {
  const UnitVector3 ez{0.0, 0.0, 1.0};
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const MeasurementSettings collinear{ez, ex, ez, ez};
  CHECK(max_over_weights(Path::B, collinear).value == 2.0);
  CHECK_THROWS_AS(max_over_weights(Path::A, collinear),
                  DegenerateConfiguration);
}

TEST_CASE("maxima agree with manual enumeration") {
  RandomStream rng(51, 0);
  for (int k = 0; k < 200; ++k) {
    const MeasurementSettings s = random_settings(rng);
    const auto t = tilde_vectors(s.b, s.b_prime);

    const PathMaximum a = max_over_weights(Path::A, s);
    double best = -1e300;
    int best_idx = -1;
    for (int idx = 0; idx < 16; ++idx) {
      const double v = path_a_value(assignment_from_index(Path::A, idx), t);
      if (v > best) {
        best = v;
        best_idx = idx;
      }
    }
    CHECK(a.value == best);
    CHECK(a.achieving_index == best_idx);
    // The closed form: |b+b'| + |b-b'|.
    CHECK(a.value == t.norm_plus + t.norm_minus);

    const PathMaximum b = max_over_weights(Path::B, s);
    CHECK(b.value == 2.0);
  }
}

TEST_CASE("pinned-overlap anchors for the path-A maximum") {
  // b.b' = 0.5: the maximum is sqrt 3 + 1.
  const PathMaximum half = max_over_weights(Path::A, planar_settings(0.5));
  CHECK(half.value == doctest::Approx(std::sqrt(3.0) + 1.0).epsilon(1e-14));
  CHECK(half.value == doctest::Approx(2.7320508075688772).epsilon(1e-12));

  // b.b' = 0.8: 2.5298...
  const PathMaximum point8 = max_over_weights(Path::A, planar_settings(0.8));
  CHECK(point8.value == doctest::Approx(2.5298221281347035).epsilon(1e-12));
}

TEST_CASE("discrepancy report and its gap") {
  const ChshReport ortho = discrepancy_report(orthogonal_settings());
  CHECK(std::abs(ortho.path_a_max - kTwoSqrtTwo) <= 1e-12);
  CHECK(ortho.path_b_max == 2.0);
  CHECK(std::abs(ortho.gap - (kTwoSqrtTwo - 2.0)) <= 1e-12);

  // Near-parallel pair, b.b' = 0.99: the maxima still split by
  // sqrt(3.98) + sqrt(0.02) - 2, about 0.1364.
  const ChshReport close = discrepancy_report(planar_settings(0.99));
  const double expect = std::sqrt(3.98) + std::sqrt(0.02) - 2.0;
  CHECK(std::abs(close.gap - expect) <= 1e-12);
  CHECK(close.gap == doctest::Approx(0.13641509057).epsilon(1e-9));

  RandomStream rng(52, 0);
  for (int k = 0; k < 500; ++k) {
    const MeasurementSettings s = random_settings(rng);
    const ChshReport r = discrepancy_report(s);
    CHECK(r.gap > 0.0);
    CHECK(r.gap == r.path_a_max - r.path_b_max);
    CHECK(r.path_a_max <= kTwoSqrtTwo + 1e-12);
    // The recorded assignments reproduce the recorded maxima.
    CHECK(path_a_value(r.achieving_assignment_a, s) == r.path_a_max);
    CHECK(path_b_value(r.achieving_assignment_b) == r.path_b_max);
  }

  // Collinear directions leave path A undefined.
  const UnitVector3 ez{0.0, 0.0, 1.0};
  const UnitVector3 ex{1.0, 0.0, 0.0};
  CHECK_THROWS_AS(discrepancy_report({ez, ex, ez, -ez}),
                  DegenerateConfiguration);
}

TEST_CASE("three-setting inequality: canonical geometry") {
  // a along z, b halfway between a and b' (45 degrees), b' along x:
  // the quantum side violates the bound, 0.7071 against 0.2929.
  const double c = std::sqrt(0.5);
  const BellOriginalResult r = bell_original_check(
      UnitVector3{0.0, 0.0, 1.0}, UnitVector3{c, 0.0, c},
      UnitVector3{1.0, 0.0, 0.0});
  CHECK(r.lhs == doctest::Approx(0.7071067811865476).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.2928932188134524).epsilon(1e-12));
  CHECK(r.violated);
  CHECK(r.hv_bound_holds);
}

TEST_CASE("three-setting inequality: degenerate geometries do not violate") {
  const UnitVector3 ez{0.0, 0.0, 1.0};
  const UnitVector3 ex{1.0, 0.0, 0.0};
  // b' = b: both sides collapse, no violation.
  const BellOriginalResult same = bell_original_check(ez, ex, ex);
  CHECK(same.lhs == 0.0);
  CHECK(!same.violated);
  // a = b: lhs = |a.b' - 1| = 1 - a.b', rhs = 1 - b.b' -- equal.
  const BellOriginalResult aligned = bell_original_check(ez, ez, ex);
  CHECK(aligned.lhs == doctest::Approx(aligned.rhs).epsilon(1e-12));
  CHECK(!aligned.violated);
}

TEST_CASE("three-setting inequality holds for every assignment") {
  RandomStream rng(53, 0);
  for (int k = 0; k < 500; ++k) {
    const UnitVector3 a = random_unit_vector(rng);
    const UnitVector3 b = random_unit_vector(rng);
    const UnitVector3 bp = random_unit_vector(rng);
    CHECK(bell_original_check(a, b, bp).hv_bound_holds);
  }
}

}  // TEST_SUITE
