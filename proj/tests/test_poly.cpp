#include <random>

#include "doctest.h"
#include "germ/germ.hpp"
#include "germ/parser.hpp"

using namespace germ;

namespace {

Germ P(const char* text, const char* vars) {
  return parse_germ(text, parse_varlist(vars));
}

// Small random germs for property tests: n=2, degree <= 4, few terms.
Germ random_germ(std::mt19937_64& rng, const VarSet& vars, bool allow_zero) {
  Germ f(vars);
  std::size_t terms = rng() % 4 + (allow_zero ? 0 : 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(vars.size());
    for (auto& x : e) x = static_cast<unsigned>(rng() % 3);
    long num = static_cast<long>(rng() % 9) - 4;
    unsigned long den = 1 + rng() % 3;
    Rat c(num, den);
    c.canonicalize();
    f.add_term(e, c);
  }
  return f;
}

}  // namespace

TEST_CASE("parse: basic forms") {
  Germ f = P("x^2 + y^3", "x,y");
  CHECK(f.term_count() == 2);
  CHECK(f.coeff({2, 0}) == 1);
  CHECK(f.coeff({0, 3}) == 1);

  CHECK(parse_germ("0").is_zero());
  CHECK(P("0", "x,y") == Germ(parse_varlist("x,y")));

  Germ g = P("3/2*x*y^3 - x^3 + x^3", "x,y");
  CHECK(g.term_count() == 1);
  CHECK(g.coeff({1, 3}) == Rat(3, 2));
}

TEST_CASE("parse: inferred variables are sorted") {
  Germ f = parse_germ("y^2 + x");
  CHECK(f.vars().names == std::vector<std::string>{"x", "y"});
  CHECK(f.coeff({1, 0}) == 1);
  CHECK(f.coeff({0, 2}) == 1);
  // "xy" is one identifier, not implicit multiplication
  Germ g = parse_germ("xy");
  CHECK(g.vars().names == std::vector<std::string>{"xy"});
}

TEST_CASE("parse: parentheses and unary minus") {
  CHECK(P("-x^2 + y", "x,y") == P("y - x^2", "x,y"));
  CHECK(P("(x + y)*(x - y)", "x,y") == P("x^2 - y^2", "x,y"));
  CHECK(P("(-x)*(-x)", "x,y") == P("x^2", "x,y"));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse_germ("x + ^ 2"), ParseError);
  CHECK_THROWS_AS(P("z", "x,y"), ParseError);  // unknown variable
  CHECK_THROWS_AS(parse_germ("x^-2"), ParseError);
  CHECK_THROWS_AS(parse_germ("3/0"), ParseError);
  CHECK_THROWS_AS(parse_germ(""), ParseError);
  CHECK_THROWS_AS(parse_germ("x*"), ParseError);
  try {
    parse_germ("x^-2");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()).find("negative exponent") != std::string::npos);
  }
}

TEST_CASE("arithmetic examples") {
  VarSet xy = parse_varlist("x,y");
  CHECK((P("x", "x,y") + P("-x", "x,y")).is_zero());
  CHECK(P("x^2", "x,y") + P("y^3", "x,y") == P("x^2 + y^3", "x,y"));
  CHECK(P("x^2 + y", "x,y") + P("x^2 - y", "x,y") == P("2*x^2", "x,y"));

  CHECK(P("x + y", "x,y") * P("x - y", "x,y") == P("x^2 - y^2", "x,y"));
  Germ f = P("x^2 + 3/2*x*y", "x,y");
  CHECK(f * Germ::constant(xy, Rat(1)) == f);
  CHECK((f * Germ(xy)).is_zero());

  CHECK_THROWS_AS(P("x", "x,y") + P("x", "x,z"), DomainError);
}

TEST_CASE("partial derivatives") {
  Germ f = P("x^2 + y^3", "x,y");
  CHECK(f.partial(0) == P("2*x", "x,y"));
  CHECK(f.partial(1) == P("3*y^2", "x,y"));
  CHECK(Germ::constant(parse_varlist("x,y"), Rat(5)).partial(0).is_zero());
  CHECK_THROWS_AS(f.partial(2), DomainError);
}

TEST_CASE("support and restriction") {
  Germ f = P("x^2 + y^3", "x,y");
  CHECK(f.support() == std::vector<Exponent>{{0, 3}, {2, 0}});
  CHECK(Germ(parse_varlist("x,y")).support().empty());
  CHECK(P("x^3 + x*y^3", "x,y").support() ==
        std::vector<Exponent>{{1, 3}, {3, 0}});

  Germ g = P("x^2 + x*y + y^3", "x,y");
  CHECK(g.restrict_to_zero({true, false}) == P("y^3", "x,y"));
  CHECK(g.restrict_to_zero({false, false}) == g);
  CHECK(P("x*y", "x,y").restrict_to_zero({false, true}).is_zero());
}

TEST_CASE("property: ring axioms, Leibniz, support, round trip") {
  VarSet xy = parse_varlist("x,y");
  std::mt19937_64 rng(20240229);
  for (int iter = 0; iter < 60; ++iter) {
    Germ f = random_germ(rng, xy, true);
    Germ g = random_germ(rng, xy, true);
    Germ h = random_germ(rng, xy, true);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK((f * g).partial(i) == f.partial(i) * g + f * g.partial(i));

    auto sup = (f + g).support();
    for (const Exponent& e : sup)
      CHECK((f.coeff(e) != 0 || g.coeff(e) != 0));

    CHECK(parse_germ(to_string(f), f.vars()) == f);
  }
}
