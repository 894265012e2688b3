#include "skewgain/roots.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "skewgain/error.hpp"
#include "skewgain/fields.hpp"

namespace skewgain {

namespace {

using cd = std::complex<double>;

// p(z) and p'(z) by a combined Horner pass.
std::pair<cd, cd> eval_with_derivative(const std::vector<cd>& coeffs, cd z) {
  cd p = 0.0, dp = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
  return {p, dp};
}

std::vector<cd> quadratic_roots(const cd& c0, const cd& c1, const cd& c2) {
  // Stable form: the larger root first, the other via c0/(c2*z1).
  cd disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  cd q = (std::real(std::conj(c1) * disc) >= 0.0) ? -0.5 * (c1 + disc)
                                                  : -0.5 * (c1 - disc);
  if (q == 0.0) return {cd(0.0), cd(0.0)};
  return {q / c2, c0 / q};
}

}  // namespace

std::vector<cd> aberth_roots(std::vector<cd> coeffs, double tol) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.size() < 2) {
    throw Error("BadParameters", "aberth_roots requires degree >= 1");
  }
  // Normalize monic.
  const cd lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;

  std::vector<cd> roots;
  // Exact zero constant terms are roots at the origin; deflating them keeps
  // the iteration away from a singular cluster at 0.
  std::size_t zeros = 0;
  while (zeros + 1 < coeffs.size() && coeffs[zeros] == 0.0) ++zeros;
  if (zeros > 0) {
    roots.assign(zeros, cd(0.0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
  }

  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 1) {
    roots.push_back(-coeffs[0]);
    return roots;
  }
  if (d == 2) {
    for (auto z : quadratic_roots(coeffs[0], coeffs[1], coeffs[2])) roots.push_back(z);
    return roots;
  }

  // Initial guesses on a circle around the root centroid, radius from the
  // Cauchy bound, angles offset so symmetric configurations do not stall.
  const cd center = -coeffs[d - 1] / static_cast<double>(d);
  double bound = 0.0;
  for (int k = 0; k < d; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  const double radius = 1.0 + bound;
  std::vector<cd> z(d);
  for (int j = 0; j < d; ++j) {
    double angle = 2.0 * std::numbers::pi * (j + 0.5) / d + 0.45;
    z[j] = center + radius * cd(std::cos(angle), std::sin(angle));
  }

  const int max_iter = 600;
  const double target = 1e-14;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst_step = 0.0;
    for (int j = 0; j < d; ++j) {
      auto [p, dp] = eval_with_derivative(coeffs, z[j]);
      if (p == 0.0) continue;
      cd newton = (dp == 0.0) ? cd(1e-10, 1e-10) : p / dp;
      cd sum = 0.0;
      for (int i = 0; i < d; ++i) {
        if (i != j) sum += 1.0 / (z[j] - z[i]);
      }
      cd denom = 1.0 - newton * sum;
      cd step = (denom == 0.0) ? newton : newton / denom;
      z[j] -= step;
      worst_step = std::max(worst_step, std::abs(step) / (1.0 + std::abs(z[j])));
    }
    if (worst_step <= target) break;
  }

  double worst_residual = 0.0;
  for (int j = 0; j < d; ++j) {
    double residual = std::abs(eval_with_derivative(coeffs, z[j]).first);
    double scale = std::pow(1.0 + std::abs(z[j]), d);
    worst_residual = std::max(worst_residual, residual / scale);
  }
  if (worst_residual > tol) {
    throw Error("NonConvergence",
                "root residual " + format_double(worst_residual) +
                    " exceeds tolerance " + format_double(tol));
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<RootEstimate> cluster_roots(const std::vector<cd>& raw,
                                        const std::vector<cd>& coeffs,
                                        double tol) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) return {};
  const int degree = static_cast<int>(coeffs.size()) - 1;

  // Inclusion radius per approximation: degree * |Newton correction|. Near a
  // multiple root the derivative collapses and the discs of the cluster
  // overlap, which is exactly the merge signal.
  std::vector<double> radius(raw.size());
  for (int j = 0; j < n; ++j) {
    auto [p, dp] = eval_with_derivative(coeffs, raw[j]);
    if (dp == 0.0) {
      radius[j] = 1e-3 * (1.0 + std::abs(raw[j]));
    } else {
      radius[j] = degree * std::abs(p / dp);
    }
  }

  std::vector<int> parent(raw.size());
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(raw[i] - raw[j]) <= radius[i] + radius[j] + tol) {
        parent[find(i)] = find(j);
      }
    }
  }

  std::vector<RootEstimate> out;
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    cd centroid = 0.0;
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (find(j) == i) {
        centroid += raw[j];
        ++count;
      }
    }
    out.push_back({centroid / static_cast<double>(count), count});
  }
  return out;
}

}  // namespace skewgain
