#include <algorithm>
#include <random>

#include "doctest.h"
#include "germ/local_algebra.hpp"
#include "germ/newton.hpp"
#include "germ/parser.hpp"

using namespace germ;

namespace {

Germ P(const char* text, const char* vars) {
  return parse_germ(text, parse_varlist(vars));
}

Germ brieskorn_pham(const std::vector<unsigned>& exps) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < exps.size(); ++i)
    names.push_back("z" + std::to_string(i));
  VarSet vars{names};
  Germ f(vars);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    Exponent e(exps.size(), 0);
    e[i] = exps[i];
    f.add_term(e, Rat(1));
  }
  return f;
}

Germ permute_vars(const Germ& f, const std::vector<std::size_t>& perm) {
  Germ out(f.vars());  // same names; exponents shuffled
  for (const auto& [e, c] : f.terms()) {
    Exponent p(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) p[perm[i]] = e[i];
    out.add_term(p, c);
  }
  return out;
}

}  // namespace

TEST_CASE("newton polyhedron: vertices and compact facets") {
  NewtonPolyhedron p = newton_polyhedron(P("x^2 + y^3", "x,y"));
  CHECK(p.vertices == std::vector<Exponent>{{0, 3}, {2, 0}});
  REQUIRE(p.facets.size() == 1);
  CHECK(p.facets[0].points == std::vector<Exponent>{{0, 3}, {2, 0}});
  CHECK(p.facets[0].normal == std::vector<Int>{3, 2});
  CHECK(p.facets[0].offset == 6);

  NewtonPolyhedron q = newton_polyhedron(P("x^4 + y^4", "x,y"));
  CHECK(q.vertices == std::vector<Exponent>{{0, 4}, {4, 0}});
  REQUIRE(q.facets.size() == 1);
  CHECK(q.facets[0].normal == std::vector<Int>{1, 1});

  // (1,3) is a vertex even though the support is not convenient
  NewtonPolyhedron r = newton_polyhedron(P("x^3 + x*y^3", "x,y"));
  CHECK(r.vertices == std::vector<Exponent>{{1, 3}, {3, 0}});
  REQUIRE(r.facets.size() == 1);
  CHECK(r.facets[0].normal == std::vector<Int>{3, 2});
  CHECK(r.facets[0].offset == 9);

  // interior support point is not a vertex; a lone monomial has no compact facet
  NewtonPolyhedron s = newton_polyhedron(P("x*y", "x,y"));
  CHECK(s.vertices == std::vector<Exponent>{{1, 1}});
  CHECK(s.facets.empty());
  NewtonPolyhedron t = newton_polyhedron(P("x^2 + x*y + y^2 + x^2*y^3", "x,y"));
  CHECK(t.vertices == std::vector<Exponent>{{0, 2}, {2, 0}});  // (1,1) on the facet, (2,3) inside
  REQUIRE(t.facets.size() == 1);
  CHECK(t.facets[0].points ==
        std::vector<Exponent>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(t.facets[0].vertices == std::vector<Exponent>{{0, 2}, {2, 0}});

  CHECK_THROWS_AS(newton_polyhedron(Germ(parse_varlist("x,y"))), DomainError);
  CHECK_THROWS_AS(
      newton_polyhedron(brieskorn_pham({2, 2, 2, 2, 2, 2, 2})),  // 7 variables
      DomainError);
}

TEST_CASE("is_convenient") {
  CHECK(is_convenient(P("x^2 + y^3", "x,y")));
  CHECK_FALSE(is_convenient(P("x*y", "x,y")));
  CHECK_FALSE(is_convenient(P("x^3 + x*y^3", "x,y")));
  CHECK(is_convenient(P("x*y + x^2 + y^2", "x,y")));
}

TEST_CASE("under diagram: areas and volumes") {
  UnderDiagram u = under_diagram(P("x^2 + y^3", "x,y"));
  CHECK(u.simplices.size() == 1);
  CHECK(u.volume() == Rat(3));

  CHECK(under_diagram(P("x^4 + y^4", "x,y")).volume() == Rat(8));  // m^2/2
  CHECK(under_diagram(brieskorn_pham({2, 2, 2})).volume() ==
        Rat(4, 3));  // m^n/n!
  CHECK(under_diagram(brieskorn_pham({5, 5, 5, 5})).volume() ==
        Rat(625, 24));

  CHECK_THROWS_AS(under_diagram(P("x*y", "x,y")), DomainError);
  CHECK_THROWS_AS(under_diagram(P("1 + x + y", "x,y")), DomainError);
}

TEST_CASE("newton number: examples") {
  for (unsigned m = 2; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      Germ f = brieskorn_pham(std::vector<unsigned>(n, m));
      Int expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), m - 1, n);
      CHECK(newton_number(f) == expected);
    }
  }
  CHECK(newton_number(P("x^2 + y^3", "x,y")) == 2);
  for (unsigned k = 1; k <= 6; ++k) {
    Germ f = brieskorn_pham({k + 1});  // one variable
    CHECK(newton_number(f) == Int(k));
  }
  CHECK_THROWS_AS(newton_number(P("x*y", "x,y")), DomainError);
}

TEST_CASE("newton number: permutation invariance") {
  std::vector<Germ> inputs = {
      P("x^2 + y^3 + z^4", "x,y,z"),
      P("x^3 + y^3 + z^3 + x^2*y^2", "x,y,z"),
      P("x^5 + y^5 + x^3*y^3", "x,y"),
  };
  for (const Germ& f : inputs) {
    Int base = newton_number(f);
    std::vector<std::size_t> perm(f.nvars());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      CHECK(newton_number(permute_vars(f, perm)) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("triangulation order does not change the volume") {
  std::vector<Germ> inputs = {
      P("x^2 + x*y + y^2", "x,y"),
      P("x^4 + x^2*y + x*y^2 + y^4", "x,y"),
      P("x^3 + y^3 + z^3 + x*y*z", "x,y,z"),
      brieskorn_pham({3, 4, 5}),
  };
  for (const Germ& f : inputs) {
    Rat a = under_diagram(f, PullOrder::LexMin).volume();
    Rat b = under_diagram(f, PullOrder::LexMax).volume();
    CHECK(a == b);
  }
}

TEST_CASE("brieskorn-pham product law") {
  for (unsigned a = 2; a <= 5; ++a)
    for (unsigned b = 2; b <= 5; ++b)
      CHECK(newton_number(brieskorn_pham({a, b})) == Int((a - 1) * (b - 1)));
  for (unsigned a = 2; a <= 4; ++a)
    for (unsigned b = 2; b <= 4; ++b)
      for (unsigned c = 2; c <= 4; ++c)
        CHECK(newton_number(brieskorn_pham({a, b, c})) ==
              Int((a - 1) * (b - 1) * (c - 1)));
}

TEST_CASE("kouchnirenko bound on convenient corpus inputs") {
  // mu >= nu always; equality on these nondegenerate inputs.
  std::vector<const char*> tight = {"x^2 + y^3",          "x^5 + y^2",
                                    "x^3 + y^4",          "x^4 + y^5",
                                    "x^2 + x*y + y^2",    "x^5 + y^5 + x^3*y^3",
                                    "x^3 + y^3 + x^2*y^2"};
  for (const char* text : tight) {
    Germ f = P(text, "x,y");
    Colength mu = milnor_number(f);
    REQUIRE(mu.finite);
    Int nu = newton_number(f);
    CHECK(Int(static_cast<unsigned long>(mu.value)) >= nu);
    CHECK(Int(static_cast<unsigned long>(mu.value)) == nu);
  }
  // strict case: degenerate principal part (x+y)^2 + higher order
  Germ g = P("x^2 + 2*x*y + y^2 + x^4 + y^4", "x,y");
  Colength mu = milnor_number(g);
  REQUIRE(mu.finite);
  CHECK(Int(static_cast<unsigned long>(mu.value)) >= newton_number(g));
  CHECK(Int(static_cast<unsigned long>(mu.value)) > newton_number(g));
}

TEST_CASE("parallel evaluation matches the serial reference") {
  std::vector<Germ> inputs = {
      brieskorn_pham({2, 3, 4, 5}),
      brieskorn_pham({5, 5, 5, 5, 5}),
      P("x^3 + y^3 + z^3 + x*y*z", "x,y,z"),
      P("x^2 + y^3 + z^4", "x,y,z"),
  };
  for (const Germ& f : inputs)
    CHECK(newton_number(f, true) == newton_number_serial(f));
}
