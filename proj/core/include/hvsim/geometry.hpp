#pragma once

// Small 3-vector algebra for measurement directions and Bloch vectors.

#include <cmath>
#include <stdexcept>
#include <string>

#include "hvsim/errors.hpp"

namespace hvsim {

// |b x b'| at or below this value counts as collinear for the tilde
// decomposition and everything that divides by |b +- b'|.
inline constexpr double kCollinearityThreshold = 1e-9;

// Squared-norm tolerance for the unit-vector invariant.
inline constexpr double kUnitTolerance = 1e-12;

struct Vec3 {
  double x{}, y{}, z{};

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double k) const { return {k * x, k * y, k * z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& u, const Vec3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Measurement direction or Bloch vector; invariant x^2+y^2+z^2 = 1
// within kUnitTolerance, enforced at API boundaries via require_unit.
struct UnitVector3 {
  double x{}, y{}, z{1.0};

  operator Vec3() const { return {x, y, z}; }
  UnitVector3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const UnitVector3& u, const UnitVector3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline void require_unit(const UnitVector3& v, const char* what) {
  const double n2 = v.x * v.x + v.y * v.y + v.z * v.z;
  if (std::abs(n2 - 1.0) > kUnitTolerance) {
    throw std::invalid_argument(std::string(what) +
                                ": vector is not unit length");
  }
}

// Unit vector along v; rejects near-zero input.
inline UnitVector3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (n < 1e-15) {
    throw std::invalid_argument("normalized: zero-length vector");
  }
  return {v.x / n, v.y / n, v.z / n};
}

// The four directions a, a', b, b' entering the CHSH operator.
struct MeasurementSettings {
  UnitVector3 a, a_prime, b, b_prime;
};

// Orthogonal unit pair b~ = (b+b')/|b+b'|, b~' = (b-b')/|b-b'| together
// with the norms |b+b'| and |b-b'|.  Defined only for non-collinear b, b'.
struct TildeDecomposition {
  UnitVector3 b_tilde, b_tilde_prime;
  double norm_plus{}, norm_minus{};
};

inline bool collinear(const UnitVector3& b, const UnitVector3& b_prime) {
  return norm(cross(b, b_prime)) <= kCollinearityThreshold;
}

inline TildeDecomposition tilde_vectors(const UnitVector3& b,
                                        const UnitVector3& b_prime) {
  require_unit(b, "tilde_vectors: b");
  require_unit(b_prime, "tilde_vectors: b_prime");
  if (collinear(b, b_prime)) {
    throw DegenerateConfiguration(
        "tilde_vectors: b and b_prime are collinear");
  }
  const Vec3 plus = Vec3(b) + Vec3(b_prime);
  const Vec3 minus = Vec3(b) - Vec3(b_prime);
  TildeDecomposition t;
  t.norm_plus = norm(plus);
  t.norm_minus = norm(minus);
  t.b_tilde = normalized(plus);
  t.b_tilde_prime = normalized(minus);
  return t;
}

}  // namespace hvsim
