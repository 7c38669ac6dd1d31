#pragma once

// Derivative-free maximization of the CHSH expectation over the four
// measurement directions, parameterized by eight angles.  Used to
// certify bound saturation: 2 sqrt 2 on the singlet, 2 on separable
// states, 2 sqrt 2 * p on Werner states.

#include <array>
#include <cstdint>
#include <vector>

#include "hvsim/geometry.hpp"
#include "hvsim/quantum.hpp"

namespace hvsim {

// (polar, azimuthal) pairs for a, a', b, b' in that order.
using AngleParams = std::array<double, 8>;

// Angles to unit vectors; periodicity is handled by the trig map
// itself, no wrapping needed.
MeasurementSettings settings_from_angles(const AngleParams& angles);

struct OptResult {
  double best_value{};
  MeasurementSettings best_settings{};
  int iterations{};       // total across restarts
  bool converged{};       // any restart converged
};

// Multi-start maximization: a coarse coplanar sweep (polar angles on a
// 15-degree grid, all four vectors in the x-z plane) seeds the first
// restart, the remaining restarts start from random angles; each
// restart refines with a simplex method over all eight angles.
// Deterministic for fixed (state, restarts, seed): restart r draws
// from its own stream (seed, 1000 + r) and ties are broken toward the
// lower restart index.  best_value is re-evaluated through the full
// operator route before returning, so it always satisfies
// |best_value - expectation(state, chsh_operator(best_settings))|
// within rounding.
OptResult maximize_chsh(const QuantumState& state, int restarts,
                        std::uint64_t seed, int threads = 1);

enum class StateFamily { Separable, Werner };

// One maximize_chsh per grid entry.  For the Werner family the entry
// is the mixing probability p; for the separable family the entry is
// only a label and the product state is drawn from the stream
// (seed, 2000 + index).
std::vector<std::pair<double, OptResult>> saturation_scan(
    StateFamily family, const std::vector<double>& param_grid,
    std::uint64_t seed, int restarts = 5, int threads = 1);

}  // namespace hvsim
