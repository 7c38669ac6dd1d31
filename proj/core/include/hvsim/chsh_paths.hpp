#pragma once

// Two evaluations of the same CHSH combination under dichotomic
// (+-1-valued) assignments.  Path A assigns values to the normalized
// sum/difference directions btilde, btilde' and weighs them with
// |b+b'|, |b-b'|; path B assigns values to b, b' themselves and uses
// the algebraic identity a(b+b') + a'(b-b') = +-2.  Both paths are
// bona fide evaluations of one operator, yet their maxima differ:
// |b+b'| + |b-b'| (up to 2 sqrt 2) against exactly 2.

#include <array>

#include "hvsim/geometry.hpp"

namespace hvsim {

// The six directions that can carry a dichotomic value.
enum class ObservableLabel : int {
  ATheta = 0,       // a
  AThetaPrime = 1,  // a'
  BPhi = 2,         // b
  BPhiPrime = 3,    // b'
  BTilde = 4,       // (b + b') / |b + b'|
  BTildePrime = 5,  // (b - b') / |b - b'|
};

inline constexpr int kLabelCount = 6;

// One deterministic valuation: a +-1 for every label.
using DichotomicAssignment = std::array<int, kLabelCount>;

inline int value_of(const DichotomicAssignment& v, ObservableLabel l) {
  return v[static_cast<int>(l)];
}

enum class Path { A, B };

// Each path reads four of the six labels, in this fixed order; bit k
// of an enumeration index flips the k-th label (bit clear -> +1).
inline constexpr std::array<ObservableLabel, 4> kPathALabels = {
    ObservableLabel::ATheta, ObservableLabel::AThetaPrime,
    ObservableLabel::BTilde, ObservableLabel::BTildePrime};
inline constexpr std::array<ObservableLabel, 4> kPathBLabels = {
    ObservableLabel::ATheta, ObservableLabel::AThetaPrime,
    ObservableLabel::BPhi, ObservableLabel::BPhiPrime};

// The assignment encoded by index in [0, 16); labels outside the
// path's list are set to +1.
DichotomicAssignment assignment_from_index(Path path, int index);

// Probability weights over the sixteen assignments of one path.
using WeightVector = std::array<double, 16>;

// CHSH value of one assignment read through the tilde directions:
// |b+b'| v(a) v(btilde) + |b-b'| v(a') v(btilde').  The settings
// overload derives the decomposition first and rejects collinear b, b'.
double path_a_value(const DichotomicAssignment& v,
                    const TildeDecomposition& t);
double path_a_value(const DichotomicAssignment& v,
                    const MeasurementSettings& s);

// CHSH value of the same assignment read through b, b' directly:
// v(a)(v(b) + v(b')) + v(a')(v(b) - v(b')).  Integer arithmetic; the
// result is exactly +2 or -2 for every assignment.
double path_b_value(const DichotomicAssignment& v);

// Maximum of a path's expected value over probability weights on the
// sixteen deterministic assignments.  The objective is linear, so the
// maximum sits at a point mass on an argmax assignment (lowest index
// on ties); path A reaches |b+b'| + |b-b'|, path B exactly 2.
// Path B ignores b, b' geometry and accepts collinear settings.
struct PathMaximum {
  double value{};
  int achieving_index{};   // lowest index attaining the maximum
  WeightVector weights{};  // point mass on achieving_index
};

PathMaximum max_over_weights(Path path, const MeasurementSettings& s);

// Side-by-side maxima of the two paths for one set of measurement
// directions; gap = path_a_max - path_b_max, strictly positive for
// every non-collinear (b, b') since |b+b'| + |b-b'| > 2 there.
struct ChshReport {
  double path_a_max{};
  double path_b_max{};
  double gap{};
  DichotomicAssignment achieving_assignment_a{};
  DichotomicAssignment achieving_assignment_b{};
  MeasurementSettings settings{};
};

ChshReport discrepancy_report(const MeasurementSettings& s);

// The 1964 three-setting inequality |E(a,b) - E(a,b')| <= 1 + E(b,b')
// under perfect anticorrelation.  The quantum side uses the singlet
// law E(x,y) = -x.y; the deterministic side enumerates the eight
// anticorrelated assignments and checks the bound pointwise (which
// implies it for every mixture of assignments).
struct BellOriginalResult {
  double lhs{};           // |E(a,b) - E(a,b')|, quantum
  double rhs{};           // 1 + E(b,b'), quantum
  bool violated{};        // lhs > rhs beyond 1e-12
  bool hv_bound_holds{};  // pointwise bound holds for all assignments
};

BellOriginalResult bell_original_check(const UnitVector3& a,
                                       const UnitVector3& b,
                                       const UnitVector3& b_prime);

}  // namespace hvsim
