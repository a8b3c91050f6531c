#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "renlab/poly.hpp"
#include "renlab/rational.hpp"
#include "testutil.hpp"

using namespace renlab;
using testor::error_code_of;

namespace {
Exponents ex(std::initializer_list<int> es) {
  Exponents e{};
  std::size_t i = 0;
  for (int v : es) e[i++] = static_cast<std::uint16_t>(v);
  return e;
}
}  // namespace

TEST_CASE("canonical text is graded-lex, degree-major descending") {
  MultiPoly p(2);
  p.add_term(ex({0, 1}), Rational(1));   // p2
  p.add_term(ex({2, 0}), Rational(1));   // p1^2
  p.add_term(ex({0, 0}), Rational(3));   // 3
  CHECK(p.to_text() == "1 * p1^2 + 1 * p2 + 3");

  SUBCASE("same degree orders by descending exponent vector") {
    MultiPoly q(2);
    q.add_term(ex({0, 2}), Rational(1));
    q.add_term(ex({1, 1}), Rational(2));
    CHECK(q.to_text() == "2 * p1 * p2 + 1 * p2^2");
  }
  SUBCASE("negative coefficients and zero polynomial") {
    MultiPoly z(2);
    CHECK(z.to_text() == "0");
    CHECK(z.is_zero());
    CHECK(z.degree() == kZeroPolyDegree);
    MultiPoly n = MultiPoly::variable(2, 1).scaled(make_rational(-1, 2));
    CHECK(n.to_text() == "-1/2 * p1");
  }
}

TEST_CASE("arithmetic") {
  MultiPoly p1 = MultiPoly::variable(2, 1);
  MultiPoly p2 = MultiPoly::variable(2, 2);
  MultiPoly s = p1 + p2;
  CHECK((s * s).to_text() == "1 * p1^2 + 2 * p1 * p2 + 1 * p2^2");
  CHECK(s.pow(2) == s * s);
  CHECK(s.pow(0) == MultiPoly::constant(2, 1));
  CHECK((s - s).is_zero());
  CHECK((-s).to_text() == "-1 * p1 + -1 * p2");
  CHECK(s.degree() == 1);
  CHECK((s * s).degree() == 2);

  SUBCASE("cancellation drops terms") {
    MultiPoly d = s * s - p1 * p1 - p2 * p2;
    CHECK(d.term_count() == 1);
    CHECK(d.to_text() == "2 * p1 * p2");
  }
  SUBCASE("arity mismatch is rejected") {
    CHECK(error_code_of([&] { (void)(p1 + MultiPoly::variable(3, 1)); }) ==
          "ArityMismatch");
  }
}

TEST_CASE("evaluation and substitution") {
  // f = p1^2 + p2
  MultiPoly f(2);
  f.add_term(ex({2, 0}), Rational(1));
  f.add_term(ex({0, 1}), Rational(1));
  std::vector<Rational> at = {make_rational(1, 2), make_rational(1, 4)};
  CHECK(f.eval(at) == make_rational(1, 2));

  SUBCASE("substitute p2 -> 1 - p1 into one variable") {
    std::vector<MultiPoly> images = {MultiPoly::variable(2, 1),
                                     MultiPoly::constant(2, 1) -
                                         MultiPoly::variable(2, 1)};
    MultiPoly g = f.substitute(images);
    CHECK(g.to_text() == "1 * p1^2 + -1 * p1 + 1");
  }
  SUBCASE("fix_trailing closes out trailing variables") {
    MultiPoly g = f.fix_trailing(1, Rational(1));  // p2 := 1
    CHECK(g.nvars() == 1);
    CHECK(g.to_text() == "1 * p1^2 + 1");
  }
  SUBCASE("shrink and extend") {
    MultiPoly g = f.extend_vars(4);
    CHECK(g.nvars() == 4);
    CHECK(g.shrink_vars(2) == f);
    CHECK(error_code_of([&] { f.shrink_vars(1); }) == "ArityMismatch");
  }
  SUBCASE("max_exponent") {
    CHECK(f.max_exponent(1) == 2);
    CHECK(f.max_exponent(2) == 1);
  }
}

TEST_CASE("text round trip") {
  for (const char* text : {"1 * p1^2 + 1 * p2", "-1/2 * p1 + 1", "0",
                           "2 * p1 * p2^3 + -1 * p2", "1/3"}) {
    MultiPoly p = MultiPoly::from_text(text, 2);
    CHECK(p.to_text() == text);
  }

  SUBCASE("loose input normalizes") {
    CHECK(MultiPoly::from_text("p2 + p1^2", 2).to_text() == "1 * p1^2 + 1 * p2");
    CHECK(MultiPoly::from_text("p1 - p2", 2).to_text() == "1 * p1 + -1 * p2");
    CHECK(MultiPoly::from_text("3*p1*p1", 2).to_text() == "3 * p1^2");
  }
  SUBCASE("errors") {
    CHECK(error_code_of([] { MultiPoly::from_text("p3", 2); }) == "ArityMismatch");
    CHECK(error_code_of([] { MultiPoly::from_text("1 +", 2); }) == "BadPoly");
    CHECK(error_code_of([] { MultiPoly::from_text("q1", 2); }) == "BadPoly");
    CHECK(error_code_of([] { MultiPoly::from_text("1 * * p1", 2); }) == "BadPoly");
  }
}
