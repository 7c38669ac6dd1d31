// The single-qubit dispersion-free assignment: pointwise values,
// exact integration against the quantum expectation, quadrature
// convergence, the spectral route for general observables, and the
// linearity-failure measure with a brute-force grid oracle.

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hvsim/bell_d2.hpp"
#include "hvsim/errors.hpp"
#include "hvsim/quantum.hpp"
#include "hvsim/rng.hpp"
#include "hvsim/sampling.hpp"

using namespace hvsim;

TEST_SUITE("dispersion-free model") {

TEST_CASE("hidden-variable and mixing-coefficient domains") {
  CHECK_NOTHROW(HiddenVarOmega(0.5));
  CHECK_NOTHROW(HiddenVarOmega(-0.5));
  CHECK_THROWS_AS(HiddenVarOmega(0.6), std::invalid_argument);
  CHECK_THROWS_AS(HiddenVarOmega(-0.6), std::invalid_argument);
  CHECK_NOTHROW(MixCoefficient(0.5));
  CHECK_THROWS_AS(MixCoefficient(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MixCoefficient(1.0), std::invalid_argument);
}

TEST_CASE("pointwise projector values at pinned configurations") {
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const UnitVector3 ez{0.0, 0.0, 1.0};

  // Aligned: value 1 for every omega, endpoints included.
  for (int i = 0; i <= 100; ++i) {
    const double w = -0.5 + i * 0.01;
    CHECK(dispersion_free_projector(ez, ez, HiddenVarOmega(w)) == 1);
  }

  // Orthogonal: the sign of omega decides, with 0 counting as up.
  CHECK(dispersion_free_projector(ex, ez, HiddenVarOmega(0.3)) == 1);
  CHECK(dispersion_free_projector(ex, ez, HiddenVarOmega(-0.3)) == 0);
  CHECK(dispersion_free_projector(ex, ez, HiddenVarOmega(0.0)) == 1);

  // s.m = -0.4 at omega = 0: the shifted sign is positive, the
  // projection sign negative, so the value is 0.
  const UnitVector3 tilted{std::sqrt(0.84), 0.0, -0.4};
  CHECK(dot(tilted, ez) == -0.4);
  CHECK(dispersion_free_projector(tilted, ez, HiddenVarOmega(0.0)) == 0);
}

TEST_CASE("values are dispersion-free") {
  RandomStream rng(41, 0);
  for (int k = 0; k < 500; ++k) {
    const UnitVector3 s = random_unit_vector(rng);
    const UnitVector3 m = random_unit_vector(rng);
    const HiddenVarOmega w(rng.uniform(-0.5, 0.5));
    const int p = dispersion_free_projector(s, m, w);
    CHECK((p == 0 || p == 1));
    const int spin = dispersion_free_spin(s, m, w);
    CHECK((spin == -1 || spin == 1));
    CHECK(spin == 2 * p - 1);
  }
}

TEST_CASE("projector integral equals the quantum value exactly") {
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const UnitVector3 ez{0.0, 0.0, 1.0};
  CHECK(integrate_projector(ez, ez) == 1.0);
  CHECK(integrate_projector(-ez, ez) == 0.0);
  CHECK(integrate_projector(ex, ez) == 0.5);
  const UnitVector3 tilted{0.8, 0.0, 0.6};
  CHECK(integrate_projector(tilted, UnitVector3{0.0, 0.0, 1.0}) == 0.8);

  RandomStream rng(42, 0);
  for (int k = 0; k < 500; ++k) {
    const UnitVector3 s = random_unit_vector(rng);
    const UnitVector3 m = random_unit_vector(rng);
    const double integral = integrate_projector(s, m);
    // Both groupings round the same real number once.
    CHECK(integral == 0.5 + 0.5 * dot(s, m));
    CHECK(integral == 0.5 * (1.0 + dot(s, m)));
    // And the quantum side is the same expression.
    CHECK(std::abs(integral - expectation(QuantumState::pure_bloch(s),
                                          projector_up(m))) <= 1e-13);
  }
}

TEST_CASE("midpoint quadrature converges at rate 1/n") {
  RandomStream rng(43, 0);
  for (int k = 0; k < 20; ++k) {
    const UnitVector3 s = random_unit_vector(rng);
    const UnitVector3 m = random_unit_vector(rng);
    const double exact = integrate_projector(s, m);
    for (const int n : {16, 128, 1024, 8192, 65536}) {
      const double approx = integrate_projector_quadrature(s, m, n);
      CHECK(std::abs(approx - exact) <= 2.0 / n);
    }
  }
}

TEST_CASE("spectral decomposition and round-trip") {
  const Spectral2 sz = spectral_decompose(sigma_z());
  CHECK(sz.mu1 == 1.0);
  CHECK(sz.mu2 == -1.0);
  CHECK(sz.p1_dir.z == 1.0);
  CHECK(!sz.degenerate);

  // A projector has spectrum {1, 0} along its own axis.
  const UnitVector3 m{0.6, 0.0, 0.8};
  const Spectral2 sp = spectral_decompose(projector_up(m));
  CHECK(std::abs(sp.mu1 - 1.0) < 1e-14);
  CHECK(std::abs(sp.mu2) < 1e-14);
  CHECK(std::abs(dot(sp.p1_dir, m) - 1.0) < 1e-12);

  // Identity multiples carry the conventional axis and the flag.
  const Spectral2 si = spectral_decompose(3.25 * Mat2::identity());
  CHECK(si.degenerate);
  CHECK(si.mu1 == si.mu2);
  CHECK(si.mu1 == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(si.p1_dir.z == 1.0);

  RandomStream rng(44, 0);
  for (int k = 0; k < 500; ++k) {
    const Mat2 h = random_hermitian2(rng);
    const Spectral2 spec = spectral_decompose(h);
    CHECK(spec.mu1 >= spec.mu2);
    CHECK(spec.p2_dir.x == -spec.p1_dir.x);
    CHECK(spec.p2_dir.y == -spec.p1_dir.y);
    CHECK(spec.p2_dir.z == -spec.p1_dir.z);
    CHECK(max_abs_entry(spectral_reconstruct(spec) - h) <= 1e-10);
  }
}

TEST_CASE("observable values land on the spectrum") {
  RandomStream rng(45, 0);
  for (int k = 0; k < 500; ++k) {
    const Mat2 h = random_hermitian2(rng);
    const Spectral2 spec = spectral_decompose(h);
    const UnitVector3 s = random_unit_vector(rng);
    const HiddenVarOmega w(rng.uniform(-0.5, 0.5));
    const double v = dispersion_free_observable(spec, s, w);
    CHECK((v == spec.mu1 || v == spec.mu2));
    // The matrix overload goes through the same resolution.
    CHECK(dispersion_free_observable(h, s, w) == v);
  }
}

TEST_CASE("observable integral reproduces the quantum expectation") {
  RandomStream rng(46, 0);
  for (int k = 0; k < 1000; ++k) {
    const Mat2 h = random_hermitian2(rng);
    const UnitVector3 s = random_unit_vector(rng);
    const double hv = integrate_observable(h, s);
    const double qm = expectation(QuantumState::pure_bloch(s), h);
    CHECK(std::abs(hv - qm) <= 1e-10);
  }
}

TEST_CASE("observable quadrature tracks the exact integral") {
  RandomStream rng(47, 0);
  for (int k = 0; k < 5; ++k) {
    const Mat2 h = random_hermitian2(rng);
    const Spectral2 spec = spectral_decompose(h);
    const UnitVector3 s = random_unit_vector(rng);
    const double exact = integrate_observable(spec, s);
    const double span = std::abs(spec.mu1 - spec.mu2);
    for (const int n : {1000, 100000}) {
      const double approx = integrate_observable_quadrature(spec, s, n);
      CHECK(std::abs(approx - exact) <= (span + 1.0) * 2.0 / n);
    }
  }
}

TEST_CASE("linearity fails pointwise on the canonical configuration") {
  const UnitVector3 ex{1.0, 0.0, 0.0};
  const UnitVector3 ez{0.0, 0.0, 1.0};
  // Orthogonal axes, even mixture, polarization along the first axis:
  // the combination's value disagrees for every omega.
  const double measure =
      linearity_failure_measure(ex, ez, MixCoefficient(0.5), ex);
  CHECK(measure == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("failure measure matches a brute-force omega grid") {
  RandomStream rng(48, 0);
  const int kGrid = 200001;
  for (int k = 0; k < 50; ++k) {
    const auto [n, m] = random_noncollinear_pair(rng);
    const MixCoefficient lambda(rng.uniform(0.05, 0.95));
    const UnitVector3 s = random_unit_vector(rng);

    const double closed = linearity_failure_measure(n, m, lambda, s);
    CHECK(closed > 0.0);
    CHECK(closed <= 1.0 + 1e-15);

    const Mat2 combo = lambda.value() * projector_up(n) +
                       (1.0 - lambda.value()) * projector_up(m);
    const Spectral2 spec = spectral_decompose(combo);
    int mismatches = 0;
    for (int i = 0; i < kGrid; ++i) {
      const HiddenVarOmega w(-0.5 + (i + 0.5) / kGrid);
      const double lhs = dispersion_free_observable(spec, s, w);
      const double rhs =
          lambda.value() * dispersion_free_projector(s, n, w) +
          (1.0 - lambda.value()) * dispersion_free_projector(s, m, w);
      if (std::abs(lhs - rhs) > 1e-12) ++mismatches;
    }
    const double grid = static_cast<double>(mismatches) / kGrid;
    CHECK(std::abs(closed - grid) <= 1e-4);
  }
}

TEST_CASE("coinciding axes are rejected as degenerate") {
  // A collinear pair degenerates the two-projector combination into a
  // single projector (which is trivially pointwise linear), so the
  // measure's domain excludes it outright.
  const UnitVector3 ez{0.0, 0.0, 1.0};
  const UnitVector3 s{0.6, 0.0, 0.8};
  CHECK_THROWS_AS(linearity_failure_measure(ez, ez, MixCoefficient(0.3), s),
                  DegenerateConfiguration);
  CHECK_THROWS_AS(linearity_failure_measure(ez, -ez, MixCoefficient(0.3), s),
                  DegenerateConfiguration);
}

TEST_CASE("linearity holds after integration") {
  RandomStream rng(49, 0);
  for (int k = 0; k < 500; ++k) {
    const auto [n, m] = random_noncollinear_pair(rng);
    const MixCoefficient lambda(rng.uniform(0.05, 0.95));
    const UnitVector3 s = random_unit_vector(rng);
    const auto [lhs, rhs] = integrated_linearity(n, m, lambda, s);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
    // Both sides equal the quantum expectation of the combination.
    const double quantum =
        lambda.value() * 0.5 * (1.0 + dot(s, n)) +
        (1.0 - lambda.value()) * 0.5 * (1.0 + dot(s, m));
    CHECK(std::abs(lhs - quantum) <= 1e-12);
  }
}

}  // TEST_SUITE
