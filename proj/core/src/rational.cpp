#include "renlab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "renlab/errors.hpp"

namespace renlab {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("InvalidRational", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("InvalidRational", "empty rational literal");

  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw Error("InvalidRational",
                "expected an integer or num/den fraction, got \"" + text + "\"");

  // Explicit base 10: the default base-0 constructor would read a leading
  // zero as octal.
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw Error("InvalidRational", "zero denominator in \"" + text + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  // mpq_class is kept canonical by construction in this library.
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_decimal(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("InvalidRational", "empty decimal literal");
  if (s.find('/') != std::string::npos) return rational_from_string(s);

  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    i = 1;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  long exponent = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      std::string tail = s.substr(i + 1);
      if (!is_integer_literal(tail))
        throw Error("InvalidRational", "bad exponent in \"" + text + "\"");
      exponent = std::strtol(tail.c_str(), nullptr, 10);
      break;
    } else {
      throw Error("InvalidRational", "bad decimal literal \"" + text + "\"");
    }
  }
  if (!seen_digit) throw Error("InvalidRational", "bad decimal literal \"" + text + "\"");

  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  long power = exponent - frac_digits;
  Integer num = mantissa, den = 1;
  if (power >= 0) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(power));
    num *= scale;
  } else {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-power));
  }
  if (neg) num = -num;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(q * scale) to nearest, ties away from zero:
  Rational scaled = q * Rational(scale);
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer twice = 2 * num;
  Integer rounded;
  // floor((2*num + den) / (2*den)) implements nearest/ties-up for positives;
  // mirror for negatives to get ties away from zero.
  if (num >= 0) {
    Integer t = twice + den;
    mpz_fdiv_q(rounded.get_mpz_t(), t.get_mpz_t(), Integer(2 * den).get_mpz_t());
  } else {
    Integer t = -twice + den;
    mpz_fdiv_q(rounded.get_mpz_t(), t.get_mpz_t(), Integer(2 * den).get_mpz_t());
    rounded = -rounded;
  }
  bool neg = rounded < 0;
  Integer mag = neg ? Integer(-rounded) : rounded;
  std::string raw = mag.get_str();
  std::string out;
  if (digits == 0) {
    out = raw;
  } else {
    if (static_cast<int>(raw.size()) <= digits)
      raw.insert(0, static_cast<std::size_t>(digits) - raw.size() + 1, '0');
    out = raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
  }
  return neg ? "-" + out : out;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational pow_rational(const Rational& q, unsigned long e) {
  Rational r = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace renlab
