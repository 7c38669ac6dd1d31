#pragma once

// Exact quantum mechanics for one and two qubits: Pauli operators,
// states, the CHSH combination of spin correlations, expectation
// values and operator norms.  Everything here is the reference the
// hidden-variable models are compared against, so it stays small,
// explicit and exact.

#include <array>
#include <vector>

#include "hvsim/complex_matrix.hpp"
#include "hvsim/geometry.hpp"

namespace hvsim {

// Tolerance contracts shared by the state validators.
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = -1e-10;  // smallest admissible eigenvalue
inline constexpr double kImaginaryTolerance = 1e-10;

// ---- elementary operators ----

inline Mat2 sigma_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Mat2 sigma_y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

inline Mat2 sigma_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

inline Mat2 identity2() { return Mat2::identity(); }
inline Mat4 identity4() { return Mat4::identity(); }

// n . sigma for a unit direction n; traceless with eigenvalues +-1.
Mat2 pauli_dot(const UnitVector3& n);

// Rank-one spin-up projector along m: (1 + m.sigma)/2.
Mat2 projector_up(const UnitVector3& m);

inline Mat4 tensor_product(const Mat2& lhs, const Mat2& rhs) {
  return kronecker(lhs, rhs);
}

// ---- states ----

// A quantum state: a single qubit pinned by its Bloch vector, a pure
// two-qubit vector, or a two-qubit density matrix.  Factories validate
// their inputs (normalization, hermiticity, unit trace, positive
// semidefiniteness within the pinned tolerances) and throw
// std::invalid_argument on violations.
class QuantumState {
 public:
  enum class Kind { PureBloch2, Pure4, Density4 };

  static QuantumState pure_bloch(const UnitVector3& s);
  static QuantumState pure(const std::array<Complex, 4>& amplitudes);
  static QuantumState density(const Mat4& rho);

  Kind kind() const { return kind_; }
  bool is_two_qubit() const { return kind_ != Kind::PureBloch2; }

  // Bloch vector; PureBloch2 only.
  const UnitVector3& bloch() const;
  // Amplitudes; Pure4 only.
  const std::array<Complex, 4>& amplitudes() const;
  // Density-matrix view; for Pure4 this is |psi><psi|, two-qubit only.
  const Mat4& rho() const;

 private:
  QuantumState() = default;
  Kind kind_{Kind::PureBloch2};
  UnitVector3 bloch_{};
  std::array<Complex, 4> amp_{};
  Mat4 rho_{};
};

// The spin singlet (|01> - |10>)/sqrt(2); correlations are -a.b.
QuantumState singlet_state();

// Product state rho(n_a) (x) rho(n_b) of two pure qubits polarized
// along the given directions; correlations are (a.n_a)(b.n_b).
QuantumState separable_density(const UnitVector3& n_a,
                               const UnitVector3& n_b);

// One term of a separable mixture: a weight and the two Bloch
// directions of a pure product state.
struct SeparableAtom {
  double weight{};
  UnitVector3 n_a;
  UnitVector3 n_b;
};

// sum_i w_i rho(n_a_i) (x) rho(n_b_i); weights must be nonnegative and
// sum to one within kTraceTolerance.
QuantumState mixed_separable_density(const std::vector<SeparableAtom>& atoms);

// p |singlet><singlet| + (1 - p) I/4, p in [0, 1]; entangled for
// p > 1/3 yet within the two-sided CHSH bound for p <= 1/sqrt 2.
QuantumState werner_density(double p);

// ---- CHSH combination ----

// a.sigma (x) (b + b').sigma + a'.sigma (x) (b - b').sigma, assembled
// directly from the four settings (collinear b, b' allowed).
Mat4 chsh_operator(const MeasurementSettings& s);

// The same operator assembled through the normalized sum/difference
// directions: |b+b'| a.sigma (x) btilde.sigma + |b-b'| a'.sigma (x)
// btilde'.sigma.  Agrees with chsh_operator entrywise; requires
// non-collinear b, b'.
Mat4 chsh_operator_tilde_form(const MeasurementSettings& s);

// ---- expectations and norms ----

// <psi|O|psi> or Tr(rho O), with the imaginary residue checked against
// kImaginaryTolerance and then discarded (a residue above tolerance
// indicates a non-Hermitian observable and throws std::runtime_error).
// The state dimension must match the observable (single-qubit
// observables take PureBloch2 states, two-qubit observables take the
// rest); mismatches throw std::invalid_argument.
double expectation(const QuantumState& state, const Mat2& observable);
double expectation(const QuantumState& state, const Mat4& observable);

// Largest |eigenvalue| of a Hermitian observable, via the Jacobi
// eigensolver; non-Hermitian input (beyond 1e-12) is rejected.
double operator_norm(const Mat4& observable);

// <a.sigma (x) b.sigma> for one pair of directions.
double spin_correlation(const QuantumState& state, const UnitVector3& a,
                        const UnitVector3& b);

// Correlation matrix T_ij = <sigma_i (x) sigma_j>, the bilinear form
// behind fast CHSH evaluation: <B> = a.T(b+b') + a'.T(b-b').
std::array<std::array<double, 3>, 3> pauli_correlation_matrix(
    const QuantumState& state);

// CHSH expectation through a precomputed correlation matrix; agrees
// with expectation(state, chsh_operator(s)) to rounding.
double chsh_expectation_fast(const std::array<std::array<double, 3>, 3>& t,
                             const MeasurementSettings& s);

// Sum of the two tilde-direction correlations,
// <a.sigma (x) btilde.sigma> + <a'.sigma (x) btilde'.sigma>.
// Generically nonzero, which is what forbids treating the two CHSH
// terms as independently weighted averages.
double quantum_sum_check(const QuantumState& state, const UnitVector3& a,
                         const UnitVector3& a_prime,
                         const UnitVector3& b_tilde,
                         const UnitVector3& b_tilde_prime);

}  // namespace hvsim
