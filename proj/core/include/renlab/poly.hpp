#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "renlab/rational.hpp"

namespace renlab {

/// Hard cap on polynomial arity (fixed-size exponent keys keep the term map
/// compact and the ordering branch-free).
inline constexpr int kMaxVars = 12;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

using Exponents = std::array<std::uint16_t, kMaxVars>;

inline int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Canonical term order: total degree descending, then exponent vector
/// lexicographically descending. Map iteration therefore yields the printed
/// order directly ("p1^2 before p1*p2 before p2^2 before p1 ...").
struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on the arrays, larger first
  }
};

/// Sparse multivariate polynomial over exact rationals in variables
/// p1..p_nvars. Immutable-style value type; all arithmetic is exact.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDesc>;

  /// Zero polynomial in `nvars` variables (1 <= nvars <= kMaxVars).
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& value);
  static MultiPoly variable(int nvars, int index);  // index is 1-based
  static MultiPoly monomial(int nvars, const Exponents& e, const Rational& coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; kZeroPolyDegree for the zero polynomial.
  int degree() const;

  /// Largest exponent of variable `index` (1-based) over all terms.
  int max_exponent(int index) const;

  const Rational& coeff(const Exponents& e) const;  // 0 if absent
  void add_term(const Exponents& e, const Rational& coeff);

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& rhs) const;

  /// Substitute every variable: p_i -> images[i-1]. All images must share an
  /// arity, which becomes the result's arity.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  /// Fix variables j+1..nvars to `value`, producing a j-variable polynomial.
  MultiPoly fix_trailing(int j, const Rational& value) const;

  /// Reinterpret in fewer variables (requires vars m+1.. unused) or more.
  MultiPoly shrink_vars(int m) const;
  MultiPoly extend_vars(int m) const;

  /// Exact evaluation at a point (point.size() == nvars).
  Rational eval(std::span<const Rational> point) const;

  /// Canonical text: terms in map order joined by " + ", each term
  /// "coeff * p1^e1 * p2^e2" with unit exponents elided and the coefficient
  /// always printed ("1 * p1^2 + 1 * p2", "0" for the zero polynomial).
  std::string to_text() const;

  /// Parse the to_text language (whitespace-insensitive). Variables must be
  /// p1..p_nvars; like terms are combined. Errors: ArityMismatch, BadPoly.
  static MultiPoly from_text(const std::string& text, int nvars);

 private:
  int nvars_;
  TermMap terms_;

  void check_arity(const MultiPoly& other) const;
};

}  // namespace renlab
