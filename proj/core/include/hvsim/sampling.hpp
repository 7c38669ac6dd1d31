#pragma once

// Random draws used by scans and tests.  Every function consumes an
// explicit RandomStream so call sites stay reproducible.

#include <vector>

#include "hvsim/geometry.hpp"
#include "hvsim/quantum.hpp"
#include "hvsim/rng.hpp"

namespace hvsim {

// Area-uniform direction on the unit sphere: z = 2u - 1, phi = 2 pi v.
UnitVector3 random_unit_vector(RandomStream& rng);

// A pair of directions redrawn until non-collinear.
std::pair<UnitVector3, UnitVector3> random_noncollinear_pair(
    RandomStream& rng);

// Four measurement directions with the (b, b') pair non-collinear.
MeasurementSettings random_settings(RandomStream& rng);

// GUE-style random Hermitian 2x2: independent normal diagonal,
// complex-normal off-diagonal.
Mat2 random_hermitian2(RandomStream& rng);

// Unitarily invariant random pure two-qubit state: four complex
// standard-normal amplitudes, normalized.
QuantumState random_pure4_state(RandomStream& rng);

// Random separable mixture with the given number of atoms; weights are
// uniform variates normalized to sum to one, directions sphere-uniform.
std::vector<SeparableAtom> random_separable_atoms(RandomStream& rng,
                                                  int atom_count);

}  // namespace hvsim
