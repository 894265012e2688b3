#ifndef SKEWGAIN_POLYNOMIAL_HPP
#define SKEWGAIN_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "skewgain/error.hpp"
#include "skewgain/fields.hpp"

namespace skewgain {

// Dense univariate polynomial with coefficients in ascending degree order.
// Trailing zero coefficients are trimmed; the zero polynomial has an empty
// coefficient list and degree -1.
template <class F>
class Polynomial {
 public:
  using Field = F;
  using Value = typename F::value_type;

  Polynomial() = default;
  explicit Polynomial(std::vector<Value> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Value c) { return Polynomial({std::move(c)}); }
  static Polynomial zero() { return Polynomial(); }
  // x - c
  static Polynomial linear_root(const Value& c) { return Polynomial({-c, F::one()}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Value>& coefficients() const { return coeffs_; }

  Value coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : F::zero();
  }

  Value leading() const {
    if (coeffs_.empty()) throw Error("BadParameters", "zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Value eval(const Value& x) const {
    Value acc = F::zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  Polynomial operator+(const Polynomial& rhs) const {
    std::vector<Value> out(std::max(coeffs_.size(), rhs.coeffs_.size()), F::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + rhs.coeff(k);
    return Polynomial(std::move(out));
  }

  Polynomial operator-(const Polynomial& rhs) const {
    std::vector<Value> out(std::max(coeffs_.size(), rhs.coeffs_.size()), F::zero());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) - rhs.coeff(k);
    return Polynomial(std::move(out));
  }

  Polynomial operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Value> out(coeffs_.size() + rhs.coeffs_.size() - 1, F::zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  Polynomial operator*(const Value& s) const {
    std::vector<Value> out = coeffs_;
    for (auto& c : out) c = c * s;
    return Polynomial(std::move(out));
  }

  // (x - c)^k
  static Polynomial shifted_power(const Value& c, int k) {
    Polynomial p = constant(F::one());
    for (int i = 0; i < k; ++i) p = p * linear_root(c);
    return p;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Value> out(coeffs_.size() - 1, F::zero());
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      out[k - 1] = coeffs_[k] * F::from_int(static_cast<long>(k));
    }
    return Polynomial(std::move(out));
  }

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  // Equality under the backend tolerance, degree for degree.
  bool approx_equal(const Polynomial& rhs, double tol) const {
    if (degree() != rhs.degree()) return false;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (!F::eq(coeffs_[k], rhs.coeffs_[k], tol)) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && F::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Value> coeffs_;
};

// Exact long division; rhs must be nonzero. Returns (quotient, remainder).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& lhs,
                                               const Polynomial<F>& rhs) {
  static_assert(F::exact, "polynomial division is exact-field only");
  if (rhs.is_zero()) throw Error("BadParameters", "polynomial division by zero");
  using V = typename F::value_type;
  std::vector<V> rem(lhs.coefficients());
  const int db = rhs.degree();
  if (lhs.degree() < db) return {Polynomial<F>(), lhs};
  std::vector<V> quo(lhs.degree() - db + 1, F::zero());
  V lead = rhs.leading();
  for (int k = lhs.degree() - db; k >= 0; --k) {
    V c = rem[k + db] / lead;
    if (F::is_zero(c)) continue;
    quo[k] = c;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * rhs.coeff(j);
  }
  return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

// Monic gcd via the Euclidean algorithm.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
  static_assert(F::exact, "polynomial gcd is exact-field only");
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) throw Error("BadParameters", "gcd of two zero polynomials");
  return a * (F::one() / a.leading());
}

// Yun's square-free decomposition: p = prod a_i^i with the a_i monic,
// square-free and pairwise coprime. Requires exact arithmetic, which is why
// rational characteristic polynomials get exact eigenvalue multiplicities.
template <class F>
std::vector<std::pair<Polynomial<F>, int>> square_free_factors(const Polynomial<F>& p) {
  static_assert(F::exact, "square-free decomposition is exact-field only");
  if (p.degree() < 1) throw Error("BadParameters", "square-free decomposition needs degree >= 1");
  Polynomial<F> f = p * (F::one() / p.leading());
  std::vector<std::pair<Polynomial<F>, int>> out;
  Polynomial<F> a0 = poly_gcd(f, f.derivative());
  Polynomial<F> b = divmod(f, a0).first;
  Polynomial<F> d = divmod(f.derivative(), a0).first - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial<F> ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = divmod(b, ai).first;
    d = divmod(d, ai).first - b.derivative();
  }
  return out;
}

namespace detail {

template <class F>
std::string coeff_text(const typename F::value_type& c);

template <>
inline std::string coeff_text<RationalId>(const mpq_class& c) {
  std::string s = c.get_str();
  if (s.find('/') != std::string::npos) return "(" + s + ")";
  return s;
}

template <>
inline std::string coeff_text<ComplexConj>(const std::complex<double>& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  return "(" + ComplexConj::format_gain(c) + ")";
}

inline bool coeff_is_one(const mpq_class& c) { return c == 1; }
inline bool coeff_is_minus_one(const mpq_class& c) { return c == -1; }
inline bool coeff_is_one(const std::complex<double>& c) {
  return c.real() == 1.0 && c.imag() == 0.0;
}
inline bool coeff_is_minus_one(const std::complex<double>& c) {
  return c.real() == -1.0 && c.imag() == 0.0;
}

}  // namespace detail

// Human-readable form: descending powers, caret exponents, no spaces,
// e.g. "x^3-4x^2-8x+11". Fractional and complex coefficients are
// parenthesized.
template <class F>
std::string to_display_string(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    auto c = p.coeff(static_cast<std::size_t>(k));
    if (F::is_zero(c)) continue;
    std::string body = detail::coeff_text<F>(c);
    bool negative = !body.empty() && body[0] == '-' && body.find('(') == std::string::npos;
    if (negative) body.erase(0, 1);
    if (k > 0) {
      if (detail::coeff_is_one(c)) {
        body = "";
      } else if (detail::coeff_is_minus_one(c)) {
        body = "";
        negative = true;
      }
      body += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? "-" : "+";
    }
    out += body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace skewgain

#endif  // SKEWGAIN_POLYNOMIAL_HPP
