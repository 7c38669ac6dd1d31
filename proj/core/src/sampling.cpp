#include "hvsim/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hvsim {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

UnitVector3 random_unit_vector(RandomStream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * kPi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

std::pair<UnitVector3, UnitVector3> random_noncollinear_pair(
    RandomStream& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const UnitVector3 b = random_unit_vector(rng);
    const UnitVector3 b_prime = random_unit_vector(rng);
    if (!collinear(b, b_prime)) return {b, b_prime};
  }
  throw std::logic_error("random_noncollinear_pair: kept drawing collinear");
}

MeasurementSettings random_settings(RandomStream& rng) {
  MeasurementSettings s;
  s.a = random_unit_vector(rng);
  s.a_prime = random_unit_vector(rng);
  const auto [b, b_prime] = random_noncollinear_pair(rng);
  s.b = b;
  s.b_prime = b_prime;
  return s;
}

Mat2 random_hermitian2(RandomStream& rng) {
  const double d0 = rng.normal();
  const double d1 = rng.normal();
  const double re = rng.normal() / std::sqrt(2.0);
  const double im = rng.normal() / std::sqrt(2.0);
  Mat2 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(0, 1) = Complex(re, -im);
  m(1, 0) = Complex(re, im);
  return m;
}

QuantumState random_pure4_state(RandomStream& rng) {
  std::array<Complex, 4> amp;
  double norm_sq = 0.0;
  for (auto& c : amp) {
    c = Complex(rng.normal(), rng.normal());
    norm_sq += std::norm(c);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& c : amp) c *= scale;
  return QuantumState::pure(amp);
}

std::vector<SeparableAtom> random_separable_atoms(RandomStream& rng,
                                                  int atom_count) {
  if (atom_count < 1) {
    throw std::invalid_argument("random_separable_atoms: count < 1");
  }
  std::vector<SeparableAtom> atoms(atom_count);
  double total = 0.0;
  for (auto& atom : atoms) {
    atom.weight = rng.uniform();
    atom.n_a = random_unit_vector(rng);
    atom.n_b = random_unit_vector(rng);
    total += atom.weight;
  }
  if (total < 1e-12) {
    for (auto& atom : atoms) atom.weight = 1.0 / atom_count;
    return atoms;
  }
  for (auto& atom : atoms) atom.weight /= total;
  return atoms;
}

}  // namespace hvsim
