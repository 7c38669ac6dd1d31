#include "hvsim/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace hvsim {
namespace {

// v.sigma for an arbitrary (not necessarily unit) vector.
Mat2 pauli_vec(const Vec3& v) {
  Mat2 m;
  m(0, 0) = v.z;
  m(0, 1) = Complex(v.x, -v.y);
  m(1, 0) = Complex(v.x, v.y);
  m(1, 1) = -v.z;
  return m;
}

double real_checked(const Complex& value, const char* what) {
  if (std::abs(value.imag()) > kImaginaryTolerance) {
    throw std::runtime_error(std::string(what) +
                             ": imaginary residue above tolerance");
  }
  return value.real();
}

Complex trace_product(const Mat2& rho, const Mat2& o) {
  Complex t{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t += rho(i, j) * o(j, i);
  return t;
}

Complex trace_product(const Mat4& rho, const Mat4& o) {
  Complex t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += rho(i, j) * o(j, i);
  return t;
}

}  // namespace

Mat2 pauli_dot(const UnitVector3& n) {
  require_unit(n, "pauli_dot");
  return pauli_vec(n);
}

Mat2 projector_up(const UnitVector3& m) {
  require_unit(m, "projector_up");
  return 0.5 * (identity2() + pauli_vec(m));
}

// ---- states ----

QuantumState QuantumState::pure_bloch(const UnitVector3& s) {
  require_unit(s, "QuantumState::pure_bloch");
  QuantumState st;
  st.kind_ = Kind::PureBloch2;
  st.bloch_ = s;
  return st;
}

QuantumState QuantumState::pure(const std::array<Complex, 4>& amplitudes) {
  double n2 = 0.0;
  for (const auto& c : amplitudes) n2 += std::norm(c);
  if (std::abs(n2 - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("QuantumState::pure: not normalized");
  }
  QuantumState st;
  st.kind_ = Kind::Pure4;
  st.amp_ = amplitudes;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      st.rho_(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return st;
}

QuantumState QuantumState::density(const Mat4& rho) {
  if (!is_hermitian(rho, kHermitianTolerance)) {
    throw std::invalid_argument("QuantumState::density: not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTolerance ||
      std::abs(tr.imag()) > kTraceTolerance) {
    throw std::invalid_argument("QuantumState::density: trace is not 1");
  }
  const auto eig = hermitian_eigenvalues(rho);
  if (eig[0] < kPsdTolerance) {
    throw std::invalid_argument(
        "QuantumState::density: negative eigenvalue beyond tolerance");
  }
  QuantumState st;
  st.kind_ = Kind::Density4;
  st.rho_ = rho;
  return st;
}

const UnitVector3& QuantumState::bloch() const {
  if (kind_ != Kind::PureBloch2) {
    throw std::logic_error("QuantumState::bloch: not a single-qubit state");
  }
  return bloch_;
}

const std::array<Complex, 4>& QuantumState::amplitudes() const {
  if (kind_ != Kind::Pure4) {
    throw std::logic_error("QuantumState::amplitudes: not a pure d=4 state");
  }
  return amp_;
}

const Mat4& QuantumState::rho() const {
  if (kind_ == Kind::PureBloch2) {
    throw std::logic_error("QuantumState::rho: single-qubit state");
  }
  return rho_;
}

QuantumState singlet_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return QuantumState::pure({Complex{}, Complex{r}, Complex{-r}, Complex{}});
}

QuantumState separable_density(const UnitVector3& n_a,
                               const UnitVector3& n_b) {
  return QuantumState::density(
      tensor_product(projector_up(n_a), projector_up(n_b)));
}

QuantumState mixed_separable_density(const std::vector<SeparableAtom>& atoms) {
  if (atoms.empty()) {
    throw std::invalid_argument("mixed_separable_density: no atoms");
  }
  double total = 0.0;
  for (const auto& atom : atoms) {
    if (atom.weight < 0.0) {
      throw std::invalid_argument("mixed_separable_density: negative weight");
    }
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > kTraceTolerance) {
    throw std::invalid_argument(
        "mixed_separable_density: weights do not sum to 1");
  }
  Mat4 rho;
  for (const auto& atom : atoms) {
    rho = rho + atom.weight * tensor_product(projector_up(atom.n_a),
                                             projector_up(atom.n_b));
  }
  return QuantumState::density(rho);
}

QuantumState werner_density(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner_density: p outside [0, 1]");
  }
  const Mat4 rho =
      p * singlet_state().rho() + (0.25 * (1.0 - p)) * identity4();
  return QuantumState::density(rho);
}

// ---- CHSH combination ----

Mat4 chsh_operator(const MeasurementSettings& s) {
  require_unit(s.a, "chsh_operator: a");
  require_unit(s.a_prime, "chsh_operator: a_prime");
  require_unit(s.b, "chsh_operator: b");
  require_unit(s.b_prime, "chsh_operator: b_prime");
  const Vec3 plus = Vec3(s.b) + Vec3(s.b_prime);
  const Vec3 minus = Vec3(s.b) - Vec3(s.b_prime);
  return kronecker(pauli_vec(s.a), pauli_vec(plus)) +
         kronecker(pauli_vec(s.a_prime), pauli_vec(minus));
}

Mat4 chsh_operator_tilde_form(const MeasurementSettings& s) {
  require_unit(s.a, "chsh_operator_tilde_form: a");
  require_unit(s.a_prime, "chsh_operator_tilde_form: a_prime");
  const TildeDecomposition t = tilde_vectors(s.b, s.b_prime);
  return t.norm_plus * kronecker(pauli_dot(s.a), pauli_dot(t.b_tilde)) +
         t.norm_minus *
             kronecker(pauli_dot(s.a_prime), pauli_dot(t.b_tilde_prime));
}

// ---- expectations and norms ----

double expectation(const QuantumState& state, const Mat2& observable) {
  if (state.kind() != QuantumState::Kind::PureBloch2) {
    throw std::invalid_argument(
        "expectation: single-qubit observable needs a single-qubit state");
  }
  const Mat2 rho = projector_up(state.bloch());
  return real_checked(trace_product(rho, observable), "expectation");
}

double expectation(const QuantumState& state, const Mat4& observable) {
  if (!state.is_two_qubit()) {
    throw std::invalid_argument(
        "expectation: two-qubit observable needs a two-qubit state");
  }
  return real_checked(trace_product(state.rho(), observable), "expectation");
}

double operator_norm(const Mat4& observable) {
  if (!is_hermitian(observable, kHermitianTolerance)) {
    throw std::invalid_argument("operator_norm: not Hermitian");
  }
  const auto eig = hermitian_eigenvalues(observable);
  return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

double spin_correlation(const QuantumState& state, const UnitVector3& a,
                        const UnitVector3& b) {
  return expectation(state, tensor_product(pauli_dot(a), pauli_dot(b)));
}

std::array<std::array<double, 3>, 3> pauli_correlation_matrix(
    const QuantumState& state) {
  const std::array<Mat2, 3> sigma = {sigma_x(), sigma_y(), sigma_z()};
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[i][j] = expectation(state, tensor_product(sigma[i], sigma[j]));
  return t;
}

double chsh_expectation_fast(const std::array<std::array<double, 3>, 3>& t,
                             const MeasurementSettings& s) {
  const auto apply = [&t](const Vec3& v) -> Vec3 {
    return {t[0][0] * v.x + t[0][1] * v.y + t[0][2] * v.z,
            t[1][0] * v.x + t[1][1] * v.y + t[1][2] * v.z,
            t[2][0] * v.x + t[2][1] * v.y + t[2][2] * v.z};
  };
  const Vec3 plus = Vec3(s.b) + Vec3(s.b_prime);
  const Vec3 minus = Vec3(s.b) - Vec3(s.b_prime);
  return dot(Vec3(s.a), apply(plus)) + dot(Vec3(s.a_prime), apply(minus));
}

double quantum_sum_check(const QuantumState& state, const UnitVector3& a,
                         const UnitVector3& a_prime,
                         const UnitVector3& b_tilde,
                         const UnitVector3& b_tilde_prime) {
  return spin_correlation(state, a, b_tilde) +
         spin_correlation(state, a_prime, b_tilde_prime);
}

}  // namespace hvsim
