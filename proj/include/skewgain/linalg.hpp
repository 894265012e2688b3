#ifndef SKEWGAIN_LINALG_HPP
#define SKEWGAIN_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "skewgain/matrix.hpp"
#include "skewgain/polynomial.hpp"

namespace skewgain {

namespace detail {

// Fraction-free Bareiss elimination. Exact over any field; intermediate
// divisions by the previous pivot are exact. Row swaps flip the sign.
template <class F>
typename F::value_type det_bareiss(Matrix<F> m) {
  using V = typename F::value_type;
  const std::size_t n = m.rows();
  if (n == 0) return F::one();
  int sign = 1;
  V prev = F::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (F::is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && F::is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return F::zero();
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = F::zero();
    }
    prev = m(k, k);
  }
  V d = m(n - 1, n - 1);
  return sign < 0 ? V(-d) : d;
}

// Partially pivoted LU determinant for the floating backend.
template <class F>
typename F::value_type det_lu(Matrix<F> m) {
  using V = typename F::value_type;
  const std::size_t n = m.rows();
  if (n == 0) return F::one();
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    double best_mag = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double mag = std::abs(m(i, k));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag == 0.0) return F::zero();
    if (best != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(best, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      V factor = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
      m(i, k) = F::zero();
    }
  }
  V d = F::one();
  for (std::size_t i = 0; i < n; ++i) d *= m(i, i);
  return sign < 0 ? V(-d) : d;
}

}  // namespace detail

// Production determinant: exact fraction-free elimination over rationals,
// partially pivoted LU over the complex backend.
template <class F>
typename F::value_type det(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("NotSquare", "determinant of a non-square matrix");
  if constexpr (F::exact) {
    return detail::det_bareiss<F>(m);
  } else {
    return detail::det_lu<F>(m);
  }
}

// Direct Leibniz expansion over all permutations, sign tracked through
// transpositions. Debug/oracle path; factorial cost, capped.
template <class F>
typename F::value_type det_leibniz(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("NotSquare", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 10) throw Error("CapExceeded", "Leibniz determinant is limited to n <= 10");
  if (n == 0) return F::one();
  using V = typename F::value_type;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  V total = F::zero();
  // Recursive row-by-row assignment; `sign` flips with each swap.
  auto rec = [&](auto&& self, std::size_t row, int sign) -> void {
    if (row == n) {
      V term = sign > 0 ? F::one() : V(-F::one());
      for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
      total += term;
      return;
    }
    for (std::size_t i = row; i < n; ++i) {
      std::swap(perm[row], perm[i]);
      self(self, row + 1, i == row ? sign : -sign);
      std::swap(perm[row], perm[i]);
    }
  };
  rec(rec, 0, 1);
  return total;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion:
//   M_1 = M,  c_{n-1} = -tr(M_1)
//   M_k = M (M_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(M_k) / k
// Exact over rationals (the divisions are by integers), floating over the
// complex backend. Monic of degree n; constant term is (-1)^n det(M).
template <class F>
Polynomial<F> char_poly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) {
    throw Error("NotSquare", "characteristic polynomial of a non-square matrix");
  }
  using V = typename F::value_type;
  const std::size_t n = m.rows();
  std::vector<V> coeffs(n + 1, F::zero());
  coeffs[n] = F::one();
  Matrix<F> mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix<F> shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
      mk = m * shifted;
    }
    coeffs[n - k] = -(mk.trace() / F::from_int(static_cast<long>(k)));
  }
  return Polynomial<F>(std::move(coeffs));
}

}  // namespace skewgain

#endif  // SKEWGAIN_LINALG_HPP
