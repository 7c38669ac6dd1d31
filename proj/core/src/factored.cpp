#include "hvsim/factored.hpp"

#include <cmath>
#include <stdexcept>

#include "hvsim/rng.hpp"

namespace hvsim {
namespace {

// Expectation of the spin along an arbitrary combination direction d
// (not necessarily unit) on one side of the model: |d| <s.dhat>, with
// the zero vector contributing zero outright.
double combination_expectation(const UnitVector3& s, const Vec3& d) {
  const double n = norm(d);
  if (n < 1e-15) return 0.0;
  return n * hv_spin_expectation(s, normalized(d));
}

}  // namespace

double product_expectation(const FactoredModel& model, const UnitVector3& a,
                           const UnitVector3& b) {
  require_unit(model.s1, "product_expectation: s1");
  require_unit(model.s2, "product_expectation: s2");
  require_unit(a, "product_expectation: a");
  require_unit(b, "product_expectation: b");
  return hv_spin_expectation(model.s1, a) * hv_spin_expectation(model.s2, b);
}

FactoredChshReport factored_chsh(const FactoredModel& model,
                                 const MeasurementSettings& s) {
  require_unit(model.s1, "factored_chsh: s1");
  require_unit(model.s2, "factored_chsh: s2");
  require_unit(s.a, "factored_chsh: a");
  require_unit(s.a_prime, "factored_chsh: a_prime");
  const TildeDecomposition t = tilde_vectors(s.b, s.b_prime);
  const double ea = hv_spin_expectation(model.s1, s.a);
  const double eap = hv_spin_expectation(model.s1, s.a_prime);
  FactoredChshReport r;
  r.path_a = t.norm_plus * ea * hv_spin_expectation(model.s2, t.b_tilde) +
             t.norm_minus * eap *
                 hv_spin_expectation(model.s2, t.b_tilde_prime);
  const double eb = hv_spin_expectation(model.s2, s.b);
  const double ebp = hv_spin_expectation(model.s2, s.b_prime);
  r.path_b = ea * (eb + ebp) + eap * (eb - ebp);
  r.difference = r.path_a - r.path_b;
  return r;
}

LinearityCheck linearity_after_integration(const FactoredModel& model,
                                           const UnitVector3& a,
                                           const UnitVector3& b,
                                           const UnitVector3& b_prime) {
  require_unit(model.s1, "linearity_after_integration: s1");
  require_unit(model.s2, "linearity_after_integration: s2");
  require_unit(a, "linearity_after_integration: a");
  require_unit(b, "linearity_after_integration: b");
  require_unit(b_prime, "linearity_after_integration: b_prime");
  const double ea = hv_spin_expectation(model.s1, a);
  const double eb = hv_spin_expectation(model.s2, b);
  const double ebp = hv_spin_expectation(model.s2, b_prime);
  LinearityCheck c;
  c.lhs_plus =
      ea * combination_expectation(model.s2, Vec3(b) + Vec3(b_prime));
  c.rhs_plus = ea * eb + ea * ebp;
  c.lhs_minus =
      ea * combination_expectation(model.s2, Vec3(b) - Vec3(b_prime));
  c.rhs_minus = ea * eb - ea * ebp;
  return c;
}

bool pointwise_nonlinearity_witness(const FactoredModel& model,
                                    const UnitVector3& b,
                                    const UnitVector3& b_prime,
                                    int sample_count, std::uint64_t seed) {
  require_unit(model.s2, "pointwise_nonlinearity_witness: s2");
  if (sample_count < 1) {
    throw std::invalid_argument(
        "pointwise_nonlinearity_witness: sample count < 1");
  }
  const TildeDecomposition t = tilde_vectors(b, b_prime);
  RandomStream rng(seed, 7);
  for (int i = 0; i < sample_count; ++i) {
    const HiddenVarOmega omega(rng.uniform(-0.5, 0.5));
    const double scaled_tilde =
        t.norm_plus * dispersion_free_spin(model.s2, t.b_tilde, omega);
    const double direct = dispersion_free_spin(model.s2, b, omega) +
                          dispersion_free_spin(model.s2, b_prime, omega);
    if (scaled_tilde - direct == 0.0) return false;
  }
  return true;
}

MarginalWeights marginal_weights(const FactoredModel& model,
                                 const UnitVector3& theta_direction) {
  require_unit(model.s1, "marginal_weights: s1");
  require_unit(theta_direction, "marginal_weights: theta_direction");
  MarginalWeights w;
  w.c_total = 1.0;
  w.c_theta = integrate_projector(model.s1, theta_direction);
  w.c_bar = 1.0 - w.c_theta;
  // Regression guard: the lambda2-marginals obtained by integrating
  // out lambda1 against 1, the a-projector value, or its complement
  // must all be flat multiples of the uniform lambda2 weight.  With
  // the factored uniform weight the lambda1 integral cannot depend on
  // lambda2; verify that on a sample grid.
  constexpr int kSamples = 64;
  for (int i = 0; i < kSamples; ++i) {
    const double lambda2 = -0.5 + (i + 0.5) / kSamples;
    // Uniform normalized lambda2 weight on [-1/2, 1/2].
    const double density = std::abs(lambda2) <= 0.5 ? 1.0 : 0.0;
    const double f_total = density;
    const double f_theta = integrate_projector(model.s1, theta_direction) *
                           density;
    const double f_bar = f_total - f_theta;
    const double scale = std::max(1.0, std::abs(f_total));
    if (std::abs(f_total - w.c_total * density) > 1e-10 * scale ||
        std::abs(f_theta - w.c_theta * density) > 1e-10 * scale ||
        std::abs(f_bar - w.c_bar * density) > 1e-10 * scale) {
      throw std::logic_error("marginal_weights: proportionality violated");
    }
  }
  return w;
}

}  // namespace hvsim
