#ifndef SKEWGAIN_FIELDS_HPP
#define SKEWGAIN_FIELDS_HPP

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "skewgain/error.hpp"

namespace skewgain {

// Deterministic splitmix64 generator. The standard distributions are
// implementation-defined, so all seeded randomness in the library goes
// through this to keep identical seeds reproducible across builds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Signed value in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Field backend over the rationals with the identity involution:
// f(x) = x, g(x) = x^2, sqrt_g(x) = |x|. All arithmetic is exact.
struct RationalId {
  using value_type = mpq_class;

  static constexpr const char* id = "rational-id";
  static constexpr bool exact = true;

  static value_type zero() { return mpq_class(0); }
  static value_type one() { return mpq_class(1); }
  static value_type from_int(long v) { return mpq_class(v); }

  static value_type f(const value_type& x) { return x; }

  static value_type g(const value_type& x) {
    require_nonzero(x);
    return x * x;
  }

  static value_type sqrt_g(const value_type& x) {
    require_nonzero(x);
    return abs(x);
  }

  static bool is_zero(const value_type& x) { return sgn(x) == 0; }
  static bool eq(const value_type& a, const value_type& b, double /*tol*/ = 0.0) {
    return a == b;
  }

  static double to_double(const value_type& x) { return x.get_d(); }
  static std::complex<double> to_complex(const value_type& x) {
    return {x.get_d(), 0.0};
  }

  // "p" or "p/q" with arbitrary-precision integers, q > 0.
  static value_type parse_gain(const std::string& text);
  // Canonical lowest-terms form, denominator omitted when 1.
  static std::string format_gain(const value_type& x);

  static value_type random_nonzero(Rng& rng) {
    long num = rng.range(1, 9) * (rng.below(2) ? 1 : -1);
    long den = rng.range(1, 4);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

 private:
  static void require_nonzero(const value_type& x) {
    if (sgn(x) == 0) throw Error("ZeroArgument", "gain maps require a nonzero argument");
  }
};

// Field backend over the complex numbers with conjugation:
// f(z) = conj(z), g(z) = |z|^2, sqrt_g(z) = |z|. Double precision;
// equality is relative to a tolerance (default 1e-9).
struct ComplexConj {
  using value_type = std::complex<double>;

  static constexpr const char* id = "complex-conj";
  static constexpr bool exact = false;
  static constexpr double default_tol = 1e-9;

  static value_type zero() { return {0.0, 0.0}; }
  static value_type one() { return {1.0, 0.0}; }
  static value_type from_int(long v) { return {static_cast<double>(v), 0.0}; }

  static value_type f(const value_type& z) { return std::conj(z); }

  static value_type g(const value_type& z) {
    require_nonzero(z);
    return z * std::conj(z);
  }

  static value_type sqrt_g(const value_type& z) {
    require_nonzero(z);
    return {std::abs(z), 0.0};
  }

  static bool is_zero(const value_type& z) {
    return z.real() == 0.0 && z.imag() == 0.0;
  }
  static bool eq(const value_type& a, const value_type& b, double tol = default_tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
  }

  static double to_double(const value_type& z) { return z.real(); }
  static std::complex<double> to_complex(const value_type& z) { return z; }

  // "a", "bi", "a+bi" or "a-bi" with decimal components ("i" alone is a
  // unit coefficient).
  static value_type parse_gain(const std::string& text);
  // Shortest round-tripping decimal components.
  static std::string format_gain(const value_type& z);

  static value_type random_nonzero(Rng& rng) {
    double re = 0.0, im = 0.0;
    while (re == 0.0 && im == 0.0) {
      re = static_cast<double>(rng.range(-4, 4)) / 2.0;
      im = static_cast<double>(rng.range(-4, 4)) / 2.0;
    }
    return {re, im};
  }

 private:
  static void require_nonzero(const value_type& z) {
    if (is_zero(z)) throw Error("ZeroArgument", "gain maps require a nonzero argument");
  }
};

// Shortest decimal representation that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace skewgain

#endif  // SKEWGAIN_FIELDS_HPP
