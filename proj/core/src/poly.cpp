#include "renlab/poly.hpp"

#include <cctype>
#include <sstream>

#include "renlab/errors.hpp"

namespace renlab {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw Error("ArityMismatch", "polynomial arity must be in [1, " +
                                     std::to_string(kMaxVars) + "], got " +
                                     std::to_string(nvars));
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i)
    r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Rational& value) {
  MultiPoly p(nvars);
  if (value != 0) p.terms_.emplace(Exponents{}, value);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  check_nvars(nvars);
  if (index < 1 || index > nvars)
    throw Error("ArityMismatch", "variable p" + std::to_string(index) +
                                     " out of range for arity " + std::to_string(nvars));
  Exponents e{};
  e[index - 1] = 1;
  MultiPoly p(nvars);
  p.terms_.emplace(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Rational& coeff) {
  MultiPoly p(nvars);
  p.add_term(e, coeff);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kZeroPolyDegree;
  // Map order is degree-major descending, so the first key is maximal.
  return total_degree(terms_.begin()->first);
}

int MultiPoly::max_exponent(int index) const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(e[index - 1]));
  return best;
}

const Rational& MultiPoly::coeff(const Exponents& e) const {
  static const Rational zero = 0;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
  for (int i = nvars_; i < kMaxVars; ++i)
    if (e[i] != 0)
      throw Error("ArityMismatch", "exponent on p" + std::to_string(i + 1) +
                                       " in a polynomial of arity " + std::to_string(nvars_));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (nvars_ != other.nvars_)
    throw Error("ArityMismatch", "mixed polynomial arities " + std::to_string(nvars_) +
                                     " and " + std::to_string(other.nvars_));
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  check_arity(rhs);
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  check_arity(rhs);
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  check_arity(rhs);
  MultiPoly out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != static_cast<std::size_t>(nvars_))
    throw Error("ArityMismatch", "substitution needs " + std::to_string(nvars_) +
                                     " images, got " + std::to_string(images.size()));
  int out_vars = images.empty() ? nvars_ : images[0].nvars();
  for (const MultiPoly& img : images)
    if (img.nvars() != out_vars)
      throw Error("ArityMismatch", "substitution images have mixed arities");

  // Memoized per-variable power ladders.
  std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(nvars_));
  auto power_of = [&](int var, int e) -> const MultiPoly& {
    auto& ladder = powers[static_cast<std::size_t>(var)];
    if (ladder.empty()) ladder.push_back(MultiPoly::constant(out_vars, 1));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * images[static_cast<std::size_t>(var)]);
    return ladder[static_cast<std::size_t>(e)];
  };

  MultiPoly out(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term = term * power_of(i, e[i]);
    out = out + term;
  }
  return out;
}

MultiPoly MultiPoly::fix_trailing(int j, const Rational& value) const {
  if (j < 0 || j > nvars_)
    throw Error("ArityMismatch", "cannot keep " + std::to_string(j) +
                                     " variables of " + std::to_string(nvars_));
  MultiPoly out(std::max(j, 1));
  for (const auto& [e, c] : terms_) {
    unsigned long tail = 0;
    Exponents head{};
    for (int i = 0; i < nvars_; ++i) {
      if (i < j)
        head[i] = e[i];
      else
        tail += e[i];
    }
    out.add_term(head, c * pow_rational(value, tail));
  }
  return out;
}

MultiPoly MultiPoly::shrink_vars(int m) const {
  check_nvars(m);
  MultiPoly out(m);
  for (const auto& [e, c] : terms_) {
    for (int i = m; i < nvars_; ++i)
      if (e[i] != 0)
        throw Error("ArityMismatch",
                    "variable p" + std::to_string(i + 1) + " is in use; cannot shrink");
    out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::extend_vars(int m) const {
  check_nvars(m);
  if (m < nvars_)
    throw Error("ArityMismatch", "extend_vars cannot reduce arity");
  MultiPoly out(m);
  out.terms_ = terms_;
  return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw Error("ArityMismatch", "evaluation point has " + std::to_string(point.size()) +
                                     " coordinates, expected " + std::to_string(nvars_));
  std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(nvars_));
  auto power_of = [&](int var, int e) -> const Rational& {
    auto& ladder = powers[static_cast<std::size_t>(var)];
    if (ladder.empty()) ladder.push_back(Rational(1));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * point[static_cast<std::size_t>(var)]);
    return ladder[static_cast<std::size_t>(e)];
  };
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    acc += term;
  }
  return acc;
}

std::string MultiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rational_to_string(c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << " * p" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  unsigned long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("BadPoly", "expected an integer at offset " +
                                                 std::to_string(start) + " in \"" + s + "\"");
    return std::stoul(s.substr(start, pos - start));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw Error("BadPoly", "expected digits at offset " +
                                                 std::to_string(start) + " in \"" + s + "\"");
    return s.substr(start, pos - start);
  }
};

}  // namespace

MultiPoly MultiPoly::from_text(const std::string& text, int nvars) {
  check_nvars(nvars);
  PolyLexer lex{text};
  MultiPoly out(nvars);
  if (lex.done()) throw Error("BadPoly", "empty polynomial text");

  bool first_term = true;
  while (!lex.done()) {
    int sign = 1;
    if (!first_term) {
      if (lex.accept('+')) {
      } else if (lex.accept('-')) {
        sign = -1;
      } else {
        throw Error("BadPoly", "expected '+' or '-' at offset " +
                                   std::to_string(lex.pos) + " in \"" + text + "\"");
      }
    }
    while (lex.accept('-')) sign = -sign;  // unary minus (possibly repeated)
    lex.accept('+');

    Rational coeff = sign;
    Exponents e{};
    bool expect_factor = true;
    while (expect_factor) {
      char c = lex.peek();
      if (c == 'p') {
        ++lex.pos;
        unsigned long idx = lex.integer();
        if (idx < 1 || idx > static_cast<unsigned long>(nvars))
          throw Error("ArityMismatch", "variable p" + std::to_string(idx) +
                                           " out of range for arity " + std::to_string(nvars));
        unsigned long exp = 1;
        if (lex.accept('^')) exp = lex.integer();
        if (e[idx - 1] + exp > 0xffffUL) throw Error("BadPoly", "exponent too large");
        e[idx - 1] = static_cast<std::uint16_t>(e[idx - 1] + exp);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = lex.digits();
        std::string den = "1";
        if (lex.accept('/')) den = lex.digits();
        Integer n(num), d(den);
        if (d == 0) throw Error("BadPoly", "zero denominator in \"" + text + "\"");
        Rational q(n, d);
        q.canonicalize();
        coeff *= q;
      } else {
        throw Error("BadPoly", "unexpected character '" + std::string(1, c) +
                                   "' at offset " + std::to_string(lex.pos) + " in \"" +
                                   text + "\"");
      }
      expect_factor = lex.accept('*');
    }
    out.add_term(e, coeff);
    first_term = false;
  }
  return out;
}

}  // namespace renlab
