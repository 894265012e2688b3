#include "skewgain/fields.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

namespace skewgain {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Signed arbitrary-precision integer literal.
bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  return all_digits(s.substr(start));
}

// Decimal floating-point component: sign, digits, optional fraction and
// exponent. This is what the writer emits via std::to_chars.
bool parse_decimal(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (*begin == '+') ++begin;  // from_chars rejects a leading '+'
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

mpq_class RationalId::parse_gain(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den) || den.find_first_not_of('0') == std::string::npos) {
      throw Error("ParseError", "rational denominator must be a positive integer: '" + text + "'");
    }
  }
  if (!is_integer_literal(num)) {
    throw Error("ParseError", "bad rational gain '" + text + "' (expected p or p/q)");
  }
  if (num[0] == '+') num.erase(0, 1);  // mpq_set_str rejects a leading '+'
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    throw Error("ParseError", "bad rational gain '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string RationalId::format_gain(const mpq_class& x) {
  return x.get_str();
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

// One additive term of a complex literal: either a real component or an
// imaginary component ending in 'i' ("i" and "-i" mean coefficient +/-1).
bool parse_term(const std::string& term, double& re, double& im) {
  if (term.empty()) return false;
  if (term.back() == 'i') {
    std::string coeff = term.substr(0, term.size() - 1);
    if (coeff.empty() || coeff == "+") {
      im += 1.0;
      return true;
    }
    if (coeff == "-") {
      im += -1.0;
      return true;
    }
    double b = 0.0;
    if (!parse_decimal(coeff, b)) return false;
    im += b;
    return true;
  }
  double a = 0.0;
  if (!parse_decimal(term, a)) return false;
  re += a;
  return true;
}

}  // namespace

std::complex<double> ComplexConj::parse_gain(const std::string& text) {
  if (text.empty()) throw Error("ParseError", "empty complex gain");
  // Split at a '+'/'-' that starts the second term (not at position 0 and
  // not part of an exponent).
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] != '+' && text[i] != '-') continue;
    char prev = text[i - 1];
    if (prev == 'e' || prev == 'E') continue;
    split = i;
    break;
  }
  double re = 0.0, im = 0.0;
  bool ok;
  if (split == std::string::npos) {
    ok = parse_term(text, re, im);
  } else {
    std::string first = text.substr(0, split);
    std::string second = text.substr(split);  // keeps its sign
    // Grammar is "a+bi" / "a-bi": real part first, imaginary second.
    ok = parse_term(first, re, im) && parse_term(second, re, im) &&
         first.back() != 'i' && second.back() == 'i';
  }
  if (!ok) {
    throw Error("ParseError", "bad complex gain '" + text + "' (expected a, bi, a+bi or a-bi)");
  }
  return {re, im};
}

std::string ComplexConj::format_gain(const std::complex<double>& z) {
  const double a = z.real();
  const double b = z.imag();
  auto imag_term = [](double v) -> std::string {
    if (v == 1.0) return "i";
    if (v == -1.0) return "-i";
    return format_double(v) + "i";
  };
  if (b == 0.0) return format_double(a);
  if (a == 0.0) return imag_term(b);
  if (b < 0.0) {
    std::string t = imag_term(b);  // already carries the '-'
    return format_double(a) + t;
  }
  return format_double(a) + "+" + imag_term(b);
}

}  // namespace skewgain
