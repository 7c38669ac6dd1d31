#include "hvsim/chsh_paths.hpp"

#include <cmath>
#include <stdexcept>

namespace hvsim {
namespace {

constexpr double kBellComparisonTolerance = 1e-12;

PathMaximum enumerate_max(Path path, const TildeDecomposition* t) {
  PathMaximum best;
  best.value = -1e300;
  for (int idx = 0; idx < 16; ++idx) {
    const DichotomicAssignment v = assignment_from_index(path, idx);
    const double val =
        (path == Path::A) ? path_a_value(v, *t) : path_b_value(v);
    if (val > best.value) {
      best.value = val;
      best.achieving_index = idx;
    }
  }
  best.weights[best.achieving_index] = 1.0;
  return best;
}

}  // namespace

DichotomicAssignment assignment_from_index(Path path, int index) {
  if (index < 0 || index >= 16) {
    throw std::invalid_argument("assignment_from_index: index outside [0,16)");
  }
  DichotomicAssignment v;
  v.fill(1);
  const auto& labels = (path == Path::A) ? kPathALabels : kPathBLabels;
  for (int k = 0; k < 4; ++k) {
    if (index & (1 << k)) v[static_cast<int>(labels[k])] = -1;
  }
  return v;
}

double path_a_value(const DichotomicAssignment& v,
                    const TildeDecomposition& t) {
  return t.norm_plus * value_of(v, ObservableLabel::ATheta) *
             value_of(v, ObservableLabel::BTilde) +
         t.norm_minus * value_of(v, ObservableLabel::AThetaPrime) *
             value_of(v, ObservableLabel::BTildePrime);
}

double path_a_value(const DichotomicAssignment& v,
                    const MeasurementSettings& s) {
  return path_a_value(v, tilde_vectors(s.b, s.b_prime));
}

double path_b_value(const DichotomicAssignment& v) {
  const int a = value_of(v, ObservableLabel::ATheta);
  const int ap = value_of(v, ObservableLabel::AThetaPrime);
  const int b = value_of(v, ObservableLabel::BPhi);
  const int bp = value_of(v, ObservableLabel::BPhiPrime);
  return static_cast<double>(a * (b + bp) + ap * (b - bp));
}

PathMaximum max_over_weights(Path path, const MeasurementSettings& s) {
  if (path == Path::A) {
    const TildeDecomposition t = tilde_vectors(s.b, s.b_prime);
    return enumerate_max(Path::A, &t);
  }
  return enumerate_max(Path::B, nullptr);
}

ChshReport discrepancy_report(const MeasurementSettings& s) {
  const TildeDecomposition t = tilde_vectors(s.b, s.b_prime);
  const PathMaximum a = enumerate_max(Path::A, &t);
  const PathMaximum b = enumerate_max(Path::B, nullptr);
  ChshReport report;
  report.path_a_max = a.value;
  report.path_b_max = b.value;
  report.gap = a.value - b.value;
  report.achieving_assignment_a = assignment_from_index(Path::A, a.achieving_index);
  report.achieving_assignment_b = assignment_from_index(Path::B, b.achieving_index);
  report.settings = s;
  return report;
}

BellOriginalResult bell_original_check(const UnitVector3& a,
                                       const UnitVector3& b,
                                       const UnitVector3& b_prime) {
  require_unit(a, "bell_original_check: a");
  require_unit(b, "bell_original_check: b");
  require_unit(b_prime, "bell_original_check: b_prime");
  BellOriginalResult r;
  r.lhs = std::abs(-dot(a, b) + dot(a, b_prime));
  r.rhs = 1.0 - dot(b, b_prime);
  r.violated = r.lhs > r.rhs + kBellComparisonTolerance;
  // Deterministic side under perfect anticorrelation: the second
  // party's value at any direction x is minus the first party's, so
  // eight sign patterns exhaust the model.  The pointwise inequality
  // |A(a)B(b) - A(a)B(b')| <= 1 + A(b)B(b') reduces to 0 <= 0 or
  // 2 <= 2 and therefore survives every weighting.
  r.hv_bound_holds = true;
  for (int idx = 0; idx < 8; ++idx) {
    const int va = (idx & 1) ? -1 : 1;
    const int vb = (idx & 2) ? -1 : 1;
    const int vbp = (idx & 4) ? -1 : 1;
    const int lhs_pt = std::abs(va * (-vb) - va * (-vbp));
    const int rhs_pt = 1 + vb * (-vbp);
    if (lhs_pt > rhs_pt) r.hv_bound_holds = false;
  }
  return r;
}

}  // namespace hvsim
