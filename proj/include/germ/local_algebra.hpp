// Standard bases in the local ring at the origin, and the colength-based
// singularity invariants built on them (Milnor and Tjurina numbers).
//
// The monomial order is fixed: anti-graded reverse lexicographic. Lower total
// degree means greater monomial, so 1 is the greatest monomial and leading
// terms pick out the tangent cone. Division uses Mora's weak normal form with
// ecart selection, which terminates for this order without any truncation --
// inputs are polynomials and results are exact.
#ifndef GERM_LOCAL_ALGEBRA_HPP
#define GERM_LOCAL_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "germ/errors.hpp"
#include "germ/germ.hpp"

namespace germ {

// +1 if a is greater than b in the local order, -1 if smaller, 0 if equal.
// Ties within a degree: last differing entry smaller => greater monomial.
int cmp_local(const Exponent& a, const Exponent& b);

// Leading data of a nonzero polynomial under the local order.
const std::pair<const Exponent, Rat>& leading_term(const Germ& f);
// Spread between the top degree and the leading-term degree.
unsigned ecart(const Germ& f);

// Finitely generated ideal; zero generators are dropped at construction, so
// gens may end up empty (the zero ideal).
struct Ideal {
  VarSet vars;
  std::vector<Germ> gens;

  Ideal(VarSet v, std::vector<Germ> g);
  static Ideal jacobian(const Germ& f);
  static Ideal tjurina(const Germ& f);
};

// Weak normal form: returns r with u*f = sum q_i g_i + r for some local unit
// u, and the leading term of r not divisible by any leading term of G.
// Deterministic: divisor of minimal ecart, ties by greater leading term,
// then by position. Reduction is fraction-free over primitive integer
// scalings, so a nonzero r comes back with coprime integer coefficients and
// positive leading coefficient (a unit multiple of the naive remainder).
Germ mora_normal_form(const Germ& f, const std::vector<Germ>& G, Guard& guard);
Germ mora_normal_form(const Germ& f, const std::vector<Germ>& G,
                      const Limits& limits = {});

// Monic, minimalized (no leading term divides another), sorted by descending
// leading term. Every s-polynomial of pairs reduces to zero.
struct StandardBasis {
  VarSet vars;
  std::vector<Germ> elements;
};

StandardBasis standard_basis(const Ideal& ideal, const Limits& limits = {});

// Minimal generators of the leading-term monomial ideal; an antichain under
// componentwise divisibility.
struct Staircase {
  std::size_t nvars = 0;
  std::vector<Exponent> gens;  // ascending lexicographic
};

Staircase staircase(const StandardBasis& basis);

struct Colength {
  bool finite = false;
  std::uint64_t value = 0;

  static Colength infinite() { return {}; }
  static Colength of(std::uint64_t v) { return {true, v}; }
  bool operator==(const Colength&) const = default;
};

std::string to_string(const Colength& c);

// Number of monomials outside the staircase; infinite exactly when some axis
// has no pure power among the generators.
Colength count_outside(const Staircase& s);

Colength colength(const Ideal& ideal, const Limits& limits = {});

// dim O/J(f). Requires f(0) = 0 and f != 0. Zero for a smooth point,
// infinite for a non-isolated singularity.
Colength milnor_number(const Germ& f, const Limits& limits = {});

// dim O/(<f> + J(f)). Same preconditions as milnor_number.
Colength tjurina_number(const Germ& f, const Limits& limits = {});

bool is_isolated(const Germ& f, const Limits& limits = {});

}  // namespace germ

#endif
