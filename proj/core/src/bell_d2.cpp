#include "hvsim/bell_d2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hvsim/quantum.hpp"

namespace hvsim {
namespace {

// The pointwise projector value as +-1 sign algebra; factored out so
// the {0,1} and {-1,+1} views share one definition.
int projector_sign(const UnitVector3& s, const UnitVector3& m, double omega) {
  const double c = dot(s, m);
  const double sign_product =
      model_sign(omega + 0.5 * std::abs(c)) * model_sign(c);
  return sign_product > 0.0 ? 1 : -1;
}

}  // namespace

int dispersion_free_projector(const UnitVector3& s, const UnitVector3& m,
                              HiddenVarOmega omega) {
  require_unit(s, "dispersion_free_projector: s");
  require_unit(m, "dispersion_free_projector: m");
  return projector_sign(s, m, omega.value()) > 0 ? 1 : 0;
}

int dispersion_free_spin(const UnitVector3& s, const UnitVector3& m,
                         HiddenVarOmega omega) {
  require_unit(s, "dispersion_free_spin: s");
  require_unit(m, "dispersion_free_spin: m");
  return projector_sign(s, m, omega.value());
}

double integrate_projector(const UnitVector3& s, const UnitVector3& m) {
  require_unit(s, "integrate_projector: s");
  require_unit(m, "integrate_projector: m");
  // The value-1 set is a single interval: [-c/2, 1/2] for c >= 0 and
  // [-1/2, c/2) for c < 0, with c = s.m; either way its length is
  // (1 + c)/2.
  return 0.5 + 0.5 * dot(s, m);
}

double integrate_projector_quadrature(const UnitVector3& s,
                                      const UnitVector3& m, int n) {
  if (n < 1) throw std::invalid_argument("quadrature: sample count < 1");
  std::int64_t ones = 0;
  for (int i = 0; i < n; ++i) {
    const double omega = -0.5 + (i + 0.5) / n;
    ones += dispersion_free_projector(s, m, HiddenVarOmega(omega));
  }
  return static_cast<double>(ones) / n;
}

Spectral2 spectral_decompose(const Mat2& observable) {
  if (!is_hermitian(observable, kHermitianTolerance)) {
    throw std::invalid_argument("spectral_decompose: not Hermitian");
  }
  // O = c0 + v.sigma with v read off the entries; eigenvalues c0 +- |v|.
  const double c0 = 0.5 * observable.trace().real();
  const Vec3 v{observable(1, 0).real(), observable(1, 0).imag(),
               0.5 * (observable(0, 0).real() - observable(1, 1).real())};
  const double r = norm(v);
  Spectral2 spec;
  if (r <= 1e-14) {
    // Multiple of the identity: any axis works, pick z by convention.
    spec.mu1 = c0;
    spec.mu2 = c0;
    spec.p1_dir = UnitVector3{0.0, 0.0, 1.0};
    spec.p2_dir = -spec.p1_dir;
    spec.degenerate = true;
    return spec;
  }
  spec.mu1 = c0 + r;
  spec.mu2 = c0 - r;
  spec.p1_dir = normalized(v);
  spec.p2_dir = -spec.p1_dir;
  return spec;
}

Mat2 spectral_reconstruct(const Spectral2& spec) {
  return spec.mu1 * projector_up(spec.p1_dir) +
         spec.mu2 * projector_up(spec.p2_dir);
}

double dispersion_free_observable(const Spectral2& spec, const UnitVector3& s,
                                  HiddenVarOmega omega) {
  const int p1 = dispersion_free_projector(s, spec.p1_dir, omega);
  return spec.mu1 * p1 + spec.mu2 * (1 - p1);
}

double dispersion_free_observable(const Mat2& observable, const UnitVector3& s,
                                  HiddenVarOmega omega) {
  return dispersion_free_observable(spectral_decompose(observable), s, omega);
}

double integrate_observable(const Spectral2& spec, const UnitVector3& s) {
  const double p1 = integrate_projector(s, spec.p1_dir);
  return spec.mu1 * p1 + spec.mu2 * (1.0 - p1);
}

double integrate_observable(const Mat2& observable, const UnitVector3& s) {
  return integrate_observable(spectral_decompose(observable), s);
}

double integrate_observable_quadrature(const Spectral2& spec,
                                       const UnitVector3& s, int n) {
  if (n < 1) throw std::invalid_argument("quadrature: sample count < 1");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double omega = -0.5 + (i + 0.5) / n;
    sum += dispersion_free_observable(spec, s, HiddenVarOmega(omega));
  }
  return sum / n;
}

double linearity_failure_measure(const UnitVector3& n, const UnitVector3& m,
                                 MixCoefficient lambda, const UnitVector3& s) {
  require_unit(n, "linearity_failure_measure: n");
  require_unit(m, "linearity_failure_measure: m");
  require_unit(s, "linearity_failure_measure: s");
  if (collinear(n, m)) {
    throw DegenerateConfiguration(
        "linearity_failure_measure: n and m are collinear");
  }
  const double lam = lambda.value();
  const Mat2 combo = lam * projector_up(n) + (1.0 - lam) * projector_up(m);
  const Spectral2 spec = spectral_decompose(combo);

  // Both sides are piecewise constant in omega; the only possible
  // jumps sit at -|s.axis|/2 for the three axes involved.  Compare on
  // the midpoint of every subinterval and sum the lengths where the
  // values differ.
  std::vector<double> cuts = {-0.5, 0.5, -0.5 * std::abs(dot(s, n)),
                              -0.5 * std::abs(dot(s, m)),
                              -0.5 * std::abs(dot(s, spec.p1_dir))};
  std::sort(cuts.begin(), cuts.end());
  double measure = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi - lo <= 0.0) continue;
    const HiddenVarOmega mid(0.5 * (lo + hi));
    const double lhs = dispersion_free_observable(spec, s, mid);
    const double rhs = lam * dispersion_free_projector(s, n, mid) +
                       (1.0 - lam) * dispersion_free_projector(s, m, mid);
    if (std::abs(lhs - rhs) > 1e-12) measure += hi - lo;
  }
  return measure;
}

IntegratedLinearity integrated_linearity(const UnitVector3& n,
                                         const UnitVector3& m,
                                         MixCoefficient lambda,
                                         const UnitVector3& s) {
  require_unit(n, "integrated_linearity: n");
  require_unit(m, "integrated_linearity: m");
  require_unit(s, "integrated_linearity: s");
  const double lam = lambda.value();
  const Mat2 combo = lam * projector_up(n) + (1.0 - lam) * projector_up(m);
  IntegratedLinearity result;
  result.lhs = integrate_observable(combo, s);
  result.rhs = lam * integrate_projector(s, n) +
               (1.0 - lam) * integrate_projector(s, m);
  return result;
}

}  // namespace hvsim
