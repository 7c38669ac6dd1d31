#pragma once

// Dispersion-free single-qubit model on the hidden variable
// omega in [-1/2, 1/2]: every projector gets a pointwise value in
// {0, 1}, every Hermitian observable a pointwise eigenvalue, and
// averaging over omega reproduces the quantum expectations for the
// pure state polarized along s.  The assignment is exactly linear only
// after integration; the pointwise failure is quantified by
// linearity_failure_measure.

#include <stdexcept>

#include "hvsim/complex_matrix.hpp"
#include "hvsim/geometry.hpp"

namespace hvsim {

// The model's sign convention at zero, fixed once: sign(0) := +1.
// This keeps the representation dispersion-free even at s.m = 0.
inline constexpr double model_sign(double x) { return x >= 0.0 ? 1.0 : -1.0; }

// Hidden variable, validated into [-1/2, 1/2].
class HiddenVarOmega {
 public:
  explicit HiddenVarOmega(double value) : value_(value) {
    if (!(value >= -0.5 && value <= 0.5)) {
      throw std::invalid_argument("hidden variable outside [-1/2, 1/2]");
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

// Mixing coefficient lambda in the open interval (0, 1); the endpoints
// are excluded because they degenerate the two-projector combination.
class MixCoefficient {
 public:
  explicit MixCoefficient(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0)) {
      throw std::invalid_argument("mix coefficient outside (0, 1)");
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

// Pointwise value of the projector onto spin-up along m, for the state
// polarized along s:  (1/2)[1 + sign(omega + |s.m|/2) sign(s.m)].
// Always exactly 0 or 1.
int dispersion_free_projector(const UnitVector3& s, const UnitVector3& m,
                              HiddenVarOmega omega);

// Pointwise spin value along m: 2 P - 1, always exactly -1 or +1.
int dispersion_free_spin(const UnitVector3& s, const UnitVector3& m,
                         HiddenVarOmega omega);

// Exact integral of the projector value over omega.  The value is the
// indicator of a single subinterval, so the integral is its length:
// (1 + s.m) / 2, matching the quantum probability.
double integrate_projector(const UnitVector3& s, const UnitVector3& m);

// Midpoint-rule check of the same integral with n samples; agrees with
// integrate_projector within 2/n.
double integrate_projector_quadrature(const UnitVector3& s,
                                      const UnitVector3& m, int n);

// Quantum expectation of the spin along m in the state polarized along
// s; equals the integral of dispersion_free_spin.
inline double hv_spin_expectation(const UnitVector3& s, const UnitVector3& m) {
  return dot(s, m);
}

// Spectral resolution O = mu1 P(p1_dir) + mu2 P(p2_dir) of a Hermitian
// 2x2 observable, mu1 >= mu2, p2_dir = -p1_dir.  A multiple of the
// identity has no preferred axis; it is flagged degenerate and gets
// the conventional axis (0, 0, 1).
struct Spectral2 {
  double mu1{};
  double mu2{};
  UnitVector3 p1_dir;
  UnitVector3 p2_dir;
  bool degenerate{false};
};

Spectral2 spectral_decompose(const Mat2& observable);

// Reconstruct mu1 P1 + mu2 P2 from the spectral data (the round-trip
// check for spectral_decompose).
Mat2 spectral_reconstruct(const Spectral2& spec);

// Pointwise value of a Hermitian observable through its spectral
// resolution: mu1 P1(omega) + mu2 P2(omega), evaluated with
// P2 = 1 - P1 so that the projector values stay complementary for
// every omega; the result is always one of the two eigenvalues.
double dispersion_free_observable(const Spectral2& spec, const UnitVector3& s,
                                  HiddenVarOmega omega);
double dispersion_free_observable(const Mat2& observable, const UnitVector3& s,
                                  HiddenVarOmega omega);

// Exact integral of dispersion_free_observable over omega: equals the
// quantum expectation mu1 (1 + s.p1)/2 + mu2 (1 - s.p1)/2.
double integrate_observable(const Spectral2& spec, const UnitVector3& s);
double integrate_observable(const Mat2& observable, const UnitVector3& s);

// Midpoint-rule version with n samples.
double integrate_observable_quadrature(const Spectral2& spec,
                                       const UnitVector3& s, int n);

// Lebesgue measure of the omega-set where the pointwise value of the
// positive-operator combination E = lambda P(n) + (1 - lambda) P(m)
// differs from the same combination of the pointwise projector values.
// Zero would mean the assignment is pointwise linear; for
// non-collinear n, m it is strictly positive.  Closed form via
// breakpoint analysis (both sides are piecewise constant in omega).
double linearity_failure_measure(const UnitVector3& n, const UnitVector3& m,
                                 MixCoefficient lambda, const UnitVector3& s);

// Both sides of the integrated linearity identity, which does hold:
// <E> against lambda <P(n)> + (1 - lambda) <P(m)>.
struct IntegratedLinearity {
  double lhs{};
  double rhs{};
};

IntegratedLinearity integrated_linearity(const UnitVector3& n,
                                         const UnitVector3& m,
                                         MixCoefficient lambda,
                                         const UnitVector3& s);

}  // namespace hvsim
