#ifndef SKEWGAIN_MATRICES_HPP
#define SKEWGAIN_MATRICES_HPP

#include <utility>
#include <vector>

#include "skewgain/families.hpp"
#include "skewgain/graph.hpp"
#include "skewgain/matrix.hpp"

namespace skewgain {

// a_ij = phi(v_i v_j) with a_ji = f(a_ij); zero diagonal.
template <class F>
Matrix<F> adjacency_matrix(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  Matrix<F> a(n, n);
  for (const auto& e : g.edges()) {
    a(e.tail, e.head) = e.gain;
    a(e.head, e.tail) = F::f(e.gain);
  }
  return a;
}

// Underlying-graph degrees embedded as field elements.
template <class F>
Matrix<F> degree_matrix(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  Matrix<F> d(n, n);
  for (int v = 0; v < n; ++v) d(v, v) = F::from_int(g.degree(v));
  return d;
}

// L = D - A.
template <class F>
std::pair<Matrix<F>, Matrix<F>> laplacian(const SkewGainGraph<F>& g) {
  Matrix<F> d = degree_matrix(g);
  Matrix<F> l = d - adjacency_matrix(g);
  return {std::move(d), std::move(l)};
}

// g-degree: per vertex, the sum of sqrt(g(gain)) over incident edges. The
// stored orientation does not matter since g(f(x)) = g(x).
template <class F>
Matrix<F> g_degree_matrix(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  Matrix<F> d(n, n);
  for (const auto& e : g.edges()) {
    auto s = F::sqrt_g(e.gain);
    d(e.tail, e.tail) += s;
    d(e.head, e.head) += s;
  }
  return d;
}

// L_g = D_g - A.
template <class F>
std::pair<Matrix<F>, Matrix<F>> g_laplacian(const SkewGainGraph<F>& g) {
  Matrix<F> d = g_degree_matrix(g);
  Matrix<F> l = d - adjacency_matrix(g);
  return {std::move(d), std::move(l)};
}

// Oriented incidence matrix H (n x m): column j carries g(phi(e_j)) at the
// tail row and -f(phi(e_j)) * sqrt(g(phi(e_j))) at the head row. Column
// order is edge order.
template <class F>
Matrix<F> incidence(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Matrix<F> h(n, m);
  for (int j = 0; j < m; ++j) {
    const auto& e = g.edge(j);
    h(e.tail, j) = F::g(e.gain);
    h(e.head, j) = -(F::f(e.gain) * F::sqrt_g(e.gain));
  }
  return h;
}

// H# (m x n): H with tail entries replaced by 1/sqrt(g(phi)) and head
// entries by -1/f(phi), then transposed. Built directly from the graph.
template <class F>
Matrix<F> incidence_sharp(const SkewGainGraph<F>& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Matrix<F> hs(m, n);
  for (int j = 0; j < m; ++j) {
    const auto& e = g.edge(j);
    hs(j, e.tail) = F::one() / F::sqrt_g(e.gain);
    hs(j, e.head) = -(F::one() / F::f(e.gain));
  }
  return hs;
}

// Entrywise f on the nonzero entries; zeros stay zero.
template <class F>
Matrix<F> f_entrywise(const Matrix<F>& b) {
  Matrix<F> out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!F::is_zero(b(i, j))) out(i, j) = F::f(b(i, j));
    }
  }
  return out;
}

// Gain block B of a complete bipartite graph: B_xy = phi(x y) for x in X,
// y in Y, rows and columns in the given (ascending) part order.
template <class F>
Matrix<F> bipartite_block(const SkewGainGraph<F>& g, const std::vector<int>& xs,
                          const std::vector<int>& ys) {
  if (xs.size() + ys.size() != static_cast<std::size_t>(g.vertex_count()) ||
      !is_complete_bipartite(g, xs, ys)) {
    throw Error("NotCompleteBipartite",
                "underlying graph is not complete bipartite on the given parts");
  }
  Matrix<F> b(xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      b(i, j) = *g.gain(xs[i], ys[j]);
    }
  }
  return b;
}

// Discovers the bipartition itself; NotCompleteBipartite if none works.
template <class F>
std::pair<std::vector<int>, std::vector<int>> complete_bipartite_parts(
    const SkewGainGraph<F>& g) {
  auto parts = bipartition(g);
  if (!parts || !is_complete_bipartite(g, parts->first, parts->second)) {
    throw Error("NotCompleteBipartite", "underlying graph is not complete bipartite");
  }
  return *parts;
}

}  // namespace skewgain

#endif  // SKEWGAIN_MATRICES_HPP
