#include <random>

#include "doctest.h"
#include "germ/local_algebra.hpp"
#include "germ/parser.hpp"
#include "oracle_colength.hpp"

using namespace germ;

namespace {

Germ P(const char* text, const char* vars) {
  return parse_germ(text, parse_varlist(vars));
}

std::vector<Exponent> lead_exponents(const StandardBasis& sb) {
  std::vector<Exponent> out;
  for (const Germ& g : sb.elements) out.push_back(leading_term(g).first);
  std::sort(out.begin(), out.end());
  return out;
}

// z_i -> lambda_i z_i, exact.
Germ scale_coordinates(const Germ& f, const std::vector<Rat>& lambda) {
  Germ out(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Rat factor = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) factor *= lambda[i];
    out.add_term(e, factor);
  }
  return out;
}

}  // namespace

TEST_CASE("local order: 1 is greatest, lower degree wins, revlex ties") {
  CHECK(cmp_local({0, 0}, {1, 0}) > 0);
  CHECK(cmp_local({1, 0}, {2, 0}) > 0);
  CHECK(cmp_local({2, 0}, {1, 1}) > 0);  // same degree, revlex
  CHECK(cmp_local({1, 1}, {0, 2}) > 0);
  CHECK(cmp_local({1, 1}, {1, 1}) == 0);
  // compatible with multiplication
  CHECK(cmp_local({2, 1}, {1, 2}) > 0);  // (1,0)+(1,1) vs (0,1)+(1,1)
}

TEST_CASE("mora normal form: membership, no-op, local unit reduction") {
  VarSet xy = parse_varlist("x,y");
  Germ x = P("x", "x,y");
  CHECK(mora_normal_form(x, {x}).is_zero());
  CHECK(mora_normal_form(P("y", "x,y"), {x}) == P("y", "x,y"));

  // x^2 reduces to 0 by {x^2 + x^3}: the quotient is the local unit 1/(1+x).
  Germ g = P("x^2 + x^3", "x,y");
  CHECK(mora_normal_form(P("x^2", "x,y"), {g}).is_zero());
  // cross-check the unit: x^2 * (1 + x) is literally in <g>
  CHECK(mora_normal_form(P("x^2", "x,y") * P("1 + x", "x,y"), {g}).is_zero());
}

TEST_CASE("standard basis: examples") {
  VarSet xy = parse_varlist("x,y");
  StandardBasis sb =
      standard_basis(Ideal(xy, {P("2*x", "x,y"), P("3*y^2", "x,y")}));
  CHECK(lead_exponents(sb) == std::vector<Exponent>{{0, 2}, {1, 0}});
  // monic up to unit scaling
  for (const Germ& g : sb.elements) CHECK(leading_term(g).second == 1);

  StandardBasis sb2 = standard_basis(
      Ideal(xy, {P("3*x^2 + y^3", "x,y"), P("3*x*y^2", "x,y")}));
  CHECK(lead_exponents(sb2) ==
        std::vector<Exponent>{{0, 5}, {1, 2}, {2, 0}});

  // unit times x: staircase is {(1,0)}
  StandardBasis sb3 = standard_basis(Ideal(xy, {P("x + x^2 + x*y^3", "x,y")}));
  CHECK(lead_exponents(sb3) == std::vector<Exponent>{{1, 0}});
}

TEST_CASE("standard basis: every s-polynomial reduces to zero") {
  std::vector<Ideal> ideals = {
      Ideal(parse_varlist("x,y"),
            {P("3*x^2 + y^3", "x,y"), P("3*x*y^2", "x,y")}),
      Ideal::jacobian(P("x^3 + x*y^3", "x,y")),
      Ideal::jacobian(P("x^5 + y^5 + x^3*y^3", "x,y")),
      Ideal::tjurina(P("x^5 + y^5 + x^3*y^3", "x,y")),
      Ideal::jacobian(P("x^2*y + y^5", "x,y")),
  };
  for (const Ideal& ideal : ideals) {
    StandardBasis sb = standard_basis(ideal);
    for (std::size_t i = 0; i < sb.elements.size(); ++i)
      for (std::size_t j = i + 1; j < sb.elements.size(); ++j) {
        const auto& lti = leading_term(sb.elements[i]);
        const auto& ltj = leading_term(sb.elements[j]);
        Exponent l = exp_lcm(lti.first, ltj.first);
        Germ spoly =
            sb.elements[i].mul_monomial(exp_sub(l, lti.first), 1 / lti.second) -
            sb.elements[j].mul_monomial(exp_sub(l, ltj.first), 1 / ltj.second);
        CHECK(mora_normal_form(spoly, sb.elements).is_zero());
      }
  }
}

TEST_CASE("colength: examples") {
  VarSet xy = parse_varlist("x,y");
  CHECK(colength(Ideal(xy, {P("x", "x,y"), P("y", "x,y")})) == Colength::of(1));
  CHECK(colength(Ideal(xy, {P("2*x", "x,y"), P("3*y^2", "x,y")})) ==
        Colength::of(2));
  CHECK(colength(Ideal(xy, {P("x^2", "x,y")})) == Colength::infinite());
}

TEST_CASE("milnor number: examples and preconditions") {
  for (int n = 2; n <= 6; ++n) {
    std::string poly, vars;
    for (int i = 0; i < n; ++i) {
      if (i) {
        poly += " + ";
        vars += ",";
      }
      poly += "z" + std::to_string(i) + "^2";
      vars += "z" + std::to_string(i);
    }
    CHECK(milnor_number(parse_germ(poly, parse_varlist(vars))) ==
          Colength::of(1));
  }
  CHECK(milnor_number(P("x^2 + y^3", "x,y")) == Colength::of(2));
  CHECK(milnor_number(P("x^3 + x*y^3", "x,y")) == Colength::of(7));
  CHECK(milnor_number(P("x", "x,y")) == Colength::of(0));  // smooth
  CHECK(milnor_number(P("x^2", "x,y")) == Colength::infinite());

  CHECK_THROWS_AS(milnor_number(Germ(parse_varlist("x,y"))), DomainError);
  CHECK_THROWS_AS(milnor_number(P("x + 1", "x,y")), DomainError);
}

TEST_CASE("tjurina number: examples, tau <= mu, tau < mu witness") {
  CHECK(tjurina_number(P("x^2 + y^2 + z^2", "x,y,z")) == Colength::of(1));
  CHECK(tjurina_number(P("x^2 + y^3", "x,y")) == Colength::of(2));

  Germ w = P("x^5 + y^5 + x^3*y^3", "x,y");
  Colength mu = milnor_number(w);
  Colength tau = tjurina_number(w);
  CHECK(mu == Colength::of(16));
  CHECK(tau == Colength::of(15));
  CHECK(tau.value < mu.value);
}

TEST_CASE("is_isolated") {
  CHECK(is_isolated(P("x^2 + y^3", "x,y")));
  CHECK_FALSE(is_isolated(P("x^2", "x,y")));
  CHECK(is_isolated(P("x", "x,y")));  // smooth convention: mu = 0
}

TEST_CASE("determinism and unit/scaling invariance") {
  Germ f = P("x^3 + x*y^3", "x,y");
  StandardBasis a = standard_basis(Ideal::jacobian(f));
  StandardBasis b = standard_basis(Ideal::jacobian(f));
  CHECK(a.elements == b.elements);

  std::mt19937_64 rng(7);
  std::vector<Germ> corpus = {
      P("x^2 + y^3", "x,y"), P("x^3 + x*y^3", "x,y"),
      P("x^5 + y^5 + x^3*y^3", "x,y"), P("x^2*y + y^5", "x,y")};
  for (const Germ& g : corpus) {
    Colength mu = milnor_number(g);
    Colength tau = tjurina_number(g);
    // unit invariance
    CHECK(milnor_number(g.scaled(Rat(-7, 3))) == mu);
    // coordinate scaling z_i -> lambda_i z_i
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<Rat> lambda;
      for (std::size_t i = 0; i < g.nvars(); ++i) {
        Rat l(static_cast<long>(1 + rng() % 5), 1 + rng() % 3);
        l.canonicalize();
        lambda.push_back(l);
      }
      Germ scaled = scale_coordinates(g, lambda);
      CHECK(milnor_number(scaled) == mu);
      CHECK(tjurina_number(scaled) == tau);
    }
  }
}

TEST_CASE("oracle agreement: brute-force linear algebra colength") {
  std::vector<std::pair<const char*, std::uint64_t>> cases = {
      {"x^2 + y^3", 2},      {"x^3 + x*y^3", 7}, {"x^2*y + y^5", 6},
      {"x^4 + y^2", 3},      {"x*y", 1},         {"x^2 + x*y + y^2", 1},
      {"x^3 + y^3 + x^2*y^2", 4},
  };
  for (const auto& [text, expected] : cases) {
    Germ f = P(text, "x,y");
    Colength mu = milnor_number(f);
    REQUIRE(mu.finite);
    CHECK(mu.value == expected);
    auto oracle = germ_test::oracle_colength(Ideal::jacobian(f).gens);
    REQUIRE(oracle.has_value());
    CHECK(*oracle == expected);

    Colength tau = tjurina_number(f);
    auto oracle_tau = germ_test::oracle_colength(Ideal::tjurina(f).gens);
    REQUIRE(oracle_tau.has_value());
    CHECK(*oracle_tau == tau.value);
  }
  // smooth point: unit Jacobian ideal
  auto smooth = germ_test::oracle_colength(Ideal::jacobian(P("x + y^2", "x,y")).gens);
  REQUIRE(smooth.has_value());
  CHECK(*smooth == 0);
}

TEST_CASE("suspension multiplies milnor numbers") {
  // mu(f(x,y) + z^k) = mu(f) * (k-1), an independent consistency check on
  // the whole standard-basis pipeline.
  std::vector<std::pair<const char*, std::uint64_t>> plane_germs = {
      {"x^2 + y^3", 2}, {"x^3 + x*y^3", 7}, {"x^2*y + y^5", 6},
      {"x^3 + y^3 + x^2*y^2", 4}};
  for (const auto& [text, mu2] : plane_germs) {
    for (unsigned k = 2; k <= 4; ++k) {
      std::string poly = std::string(text) + " + z^" + std::to_string(k);
      Germ f = parse_germ(poly, parse_varlist("x,y,z"));
      CHECK(milnor_number(f) == Colength::of(mu2 * (k - 1)));
    }
  }
  // moduli examples: x^p + y^q + z^r + x*y*z has mu = p + q + r - 1
  CHECK(milnor_number(P("x^3 + y^3 + z^4 + x*y*z", "x,y,z")) ==
        Colength::of(9));
  CHECK(milnor_number(P("x^4 + y^4 + z^4 + x*y*z", "x,y,z")) ==
        Colength::of(11));
}

TEST_CASE("resource guards are distinct errors") {
  Limits tight;
  tight.max_degree = 3;
  CHECK_THROWS_AS(milnor_number(P("x^5 + y^5 + x^3*y^3", "x,y"), tight),
                  ResourceLimitError);
  Limits pairs;
  pairs.max_pairs = 0;
  CHECK_THROWS_AS(
      standard_basis(Ideal(parse_varlist("x,y"),
                           {P("3*x^2 + y^3", "x,y"), P("3*x*y^2", "x,y")}),
                     pairs),
      ResourceLimitError);
}
