#ifndef SKEWGAIN_ROOTS_HPP
#define SKEWGAIN_ROOTS_HPP

#include <algorithm>
#include <complex>
#include <vector>

#include "skewgain/polynomial.hpp"

namespace skewgain {

struct RootEstimate {
  std::complex<double> value;
  int multiplicity = 1;
};

// All complex roots of the polynomial with the given ascending coefficients
// (leading coefficient nonzero) by Aberth-Ehrlich simultaneous iteration;
// degrees 1 and 2 use closed forms. Roots are returned unclustered, one per
// degree. Throws NonConvergence when the residual bound
// |p(z)| <= tol*(1+|z|)^degree cannot be met within the iteration cap.
std::vector<std::complex<double>> aberth_roots(
    std::vector<std::complex<double>> coeffs, double tol);

// Clusters raw approximations whose Newton-correction inclusion discs
// overlap; each cluster is replaced by its centroid with the cluster size as
// multiplicity, then clusters closer than tol are merged again.
std::vector<RootEstimate> cluster_roots(
    const std::vector<std::complex<double>>& raw,
    const std::vector<std::complex<double>>& coeffs, double tol);

namespace detail {

inline bool root_order(const RootEstimate& a, const RootEstimate& b) {
  if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
  return a.value.imag() < b.value.imag();
}

inline void merge_within_tol(std::vector<RootEstimate>& roots, double tol) {
  std::sort(roots.begin(), roots.end(), root_order);
  std::vector<RootEstimate> merged;
  for (const auto& r : roots) {
    if (!merged.empty() && std::abs(merged.back().value - r.value) <= tol) {
      merged.back().multiplicity += r.multiplicity;
    } else {
      merged.push_back(r);
    }
  }
  roots = std::move(merged);
}

template <class F>
std::vector<std::complex<double>> embed(const Polynomial<F>& p) {
  std::vector<std::complex<double>> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(F::to_complex(c));
  return out;
}

}  // namespace detail

// Roots with multiplicities, sorted by (real, imaginary). Exact-field
// polynomials are square-free decomposed first so multiplicities are exact;
// floating polynomials rely on inclusion-disc clustering.
template <class F>
std::vector<RootEstimate> poly_roots(const Polynomial<F>& p, double tol = 1e-9) {
  if (p.degree() < 1) {
    throw Error("BadParameters", "poly_roots requires degree >= 1");
  }
  std::vector<RootEstimate> roots;
  if constexpr (F::exact) {
    for (const auto& [factor, mult] : square_free_factors(p)) {
      for (const auto& z : aberth_roots(detail::embed(factor), tol)) {
        roots.push_back({z, mult});
      }
    }
  } else {
    auto coeffs = detail::embed(p);
    roots = cluster_roots(aberth_roots(coeffs, tol), coeffs, tol);
  }
  detail::merge_within_tol(roots, tol);
  return roots;
}

}  // namespace skewgain

#endif  // SKEWGAIN_ROOTS_HPP
