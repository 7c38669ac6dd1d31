#pragma once

// Fixed-size complex matrices (2x2 and 4x4) with a cyclic-Jacobi
// eigensolver for Hermitian inputs.  Dimensions here are tiny and
// fixed, so everything is dense and unblocked.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hvsim {

using Complex = std::complex<double>;

template <int N>
struct ComplexMatrix {
  static_assert(N == 2 || N == 4, "only 2x2 and 4x4 are used");
  std::array<Complex, N * N> a{};

  static constexpr int size() { return N; }

  Complex& operator()(int i, int j) { return a[i * N + j]; }
  const Complex& operator()(int i, int j) const { return a[i * N + j]; }

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero() { return {}; }

  ComplexMatrix operator+(const ComplexMatrix& o) const {
    ComplexMatrix r;
    for (int i = 0; i < N * N; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }

  ComplexMatrix operator-(const ComplexMatrix& o) const {
    ComplexMatrix r;
    for (int i = 0; i < N * N; ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }

  ComplexMatrix operator*(const ComplexMatrix& o) const {
    ComplexMatrix r;
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k < N; ++k) {
        const Complex aik = (*this)(i, k);
        if (aik == Complex{}) continue;
        for (int j = 0; j < N; ++j) r(i, j) += aik * o(k, j);
      }
    }
    return r;
  }

  friend ComplexMatrix operator*(double k, const ComplexMatrix& m) {
    ComplexMatrix r;
    for (int i = 0; i < N * N; ++i) r.a[i] = k * m.a[i];
    return r;
  }

  friend ComplexMatrix operator*(const Complex& k, const ComplexMatrix& m) {
    ComplexMatrix r;
    for (int i = 0; i < N * N; ++i) r.a[i] = k * m.a[i];
    return r;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Complex trace() const {
    Complex t{};
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

template <int N>
double frobenius_norm(const ComplexMatrix<N>& m) {
  double s = 0.0;
  for (const auto& v : m.a) s += std::norm(v);
  return std::sqrt(s);
}

template <int N>
double max_abs_entry(const ComplexMatrix<N>& m) {
  double s = 0.0;
  for (const auto& v : m.a) s = std::max(s, std::abs(v));
  return s;
}

template <int N>
bool is_hermitian(const ComplexMatrix<N>& m, double tol = 1e-12) {
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

// Kronecker product, first factor indexes the a-system: the row/column
// index of the result is 2*i_first + i_second (row-major).
inline Mat4 kronecker(const Mat2& lhs, const Mat2& rhs) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = lhs(i, j) * rhs(k, l);
  return r;
}

namespace detail {

inline double off_diagonal_norm_sq(const auto& m) {
  double s = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return s;
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations,
// stopping when the off-diagonal Frobenius norm drops below 1e-13.
// Returned ascending.
template <int N>
std::array<double, N> hermitian_eigenvalues(ComplexMatrix<N> m) {
  // Work on the exact Hermitian part so strict conjugate symmetry holds.
  m = 0.5 * (m + m.adjoint());

  constexpr double kStop = 1e-13;
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (std::sqrt(detail::off_diagonal_norm_sq(m)) < kStop) break;
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const Complex apq = m(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        // Unitary plane rotation annihilating the (p,q) entry.
        const Complex phase = apq / r;
        const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        ComplexMatrix<N> j = ComplexMatrix<N>::identity();
        j(p, p) = c;
        j(q, q) = c;
        j(p, q) = s * phase;
        j(q, p) = -s * std::conj(phase);
        m = j.adjoint() * m * j;
      }
    }
  }
  if (std::sqrt(detail::off_diagonal_norm_sq(m)) >= kStop) {
    throw std::runtime_error("hermitian_eigenvalues: Jacobi did not converge");
  }
  std::array<double, N> eig{};
  for (int i = 0; i < N; ++i) eig[i] = m(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace hvsim
