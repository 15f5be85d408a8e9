#include "germ/local_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace germ {

int cmp_local(const Exponent& a, const Exponent& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

const std::pair<const Exponent, Rat>& leading_term(const Germ& f) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const std::pair<const Exponent, Rat>* best = nullptr;
  for (const auto& t : f.terms())
    if (!best || cmp_local(t.first, best->first) > 0) best = &t;
  return *best;
}

unsigned ecart(const Germ& f) {
  return f.max_total_degree() - total_degree(leading_term(f).first);
}

namespace {

const Exponent& lm(const Germ& f) { return leading_term(f).first; }

Germ make_monic(const Germ& f) { return f.scaled(1 / leading_term(f).second); }

// Scales to coprime integer coefficients with positive leading coefficient.
// Unit scaling, so ideal membership and leading structure are unchanged; it
// keeps the fraction-free reduction below from blowing up coefficients.
Germ primitive_part(const Germ& f) {
  if (f.is_zero()) return f;
  Int denom_lcm = 1;
  for (const auto& [e, c] : f.terms()) denom_lcm = lcm(denom_lcm, c.get_den());
  Int content = 0;
  for (const auto& [e, c] : f.terms())
    content = gcd(content, Int(c.get_num() * (denom_lcm / c.get_den())));
  Rat scale(denom_lcm, content);
  scale.canonicalize();
  Germ out = f.scaled(leading_term(f).second < 0 ? Rat(-scale) : scale);
  return out;
}

// Cached leading data for the growing reducer set of Mora's algorithm.
struct Reducer {
  Germ poly;
  Exponent lead;
  Rat lead_coeff;
  unsigned ec;

  explicit Reducer(Germ p) : poly(std::move(p)) {
    const auto& lt = leading_term(poly);
    lead = lt.first;
    lead_coeff = lt.second;
    ec = poly.max_total_degree() - total_degree(lead);
  }
};

}  // namespace

Ideal::Ideal(VarSet v, std::vector<Germ> g) : vars(std::move(v)) {
  for (auto& f : g) {
    if (f.vars() != vars)
      throw DomainError("variable-set mismatch among ideal generators");
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
}

Ideal Ideal::jacobian(const Germ& f) {
  std::vector<Germ> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i));
  return Ideal(f.vars(), std::move(g));
}

Ideal Ideal::tjurina(const Germ& f) {
  std::vector<Germ> g;
  g.push_back(f);
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i));
  return Ideal(f.vars(), std::move(g));
}

Germ mora_normal_form(const Germ& f, const std::vector<Germ>& G, Guard& guard) {
  std::vector<Reducer> reducers;
  reducers.reserve(G.size());
  for (const Germ& g : G)
    if (!g.is_zero()) reducers.emplace_back(primitive_part(g));
  Germ h = f.is_zero() ? f : primitive_part(f);
  while (!h.is_zero()) {
    const auto& lt_h = leading_term(h);
    const Exponent lead_h = lt_h.first;
    const Rat coeff_h = lt_h.second;
    const unsigned ec_h = h.max_total_degree() - total_degree(lead_h);
    // Divisor of minimal ecart; ties by greater leading term, then position.
    std::size_t best = reducers.size();
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!exp_divides(reducers[i].lead, lead_h)) continue;
      if (best == reducers.size() || reducers[i].ec < reducers[best].ec ||
          (reducers[i].ec == reducers[best].ec &&
           cmp_local(reducers[i].lead, reducers[best].lead) > 0))
        best = i;
    }
    if (best == reducers.size()) break;
    // The intermediate result becomes a reducer when the chosen divisor has
    // larger ecart; this is what makes the loop terminate for local orders.
    if (reducers[best].ec > ec_h) reducers.emplace_back(h);
    const Reducer& g = reducers[best];
    // Fraction-free step: lc(g) h - lc(h) m g cancels the leading term with
    // integer arithmetic only; the content is stripped right away.
    h = h.scaled(g.lead_coeff) -
        g.poly.mul_monomial(exp_sub(lead_h, g.lead), coeff_h);
    if (!h.is_zero()) h = primitive_part(h);
    guard.on_reduction_step();
    if (!h.is_zero()) guard.check_degree(h.max_total_degree());
  }
  return h;
}

Germ mora_normal_form(const Germ& f, const std::vector<Germ>& G,
                      const Limits& limits) {
  Guard guard(limits);
  return mora_normal_form(f, G, guard);
}

StandardBasis standard_basis(const Ideal& ideal, const Limits& limits) {
  Guard guard(limits);
  std::vector<Germ> basis;
  for (const Germ& g : ideal.gens) {
    guard.check_degree(g.max_total_degree());
    basis.push_back(primitive_part(g));
  }

  struct Pair {
    std::size_t i, j;
    Exponent lcm;
  };
  std::vector<Pair> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.push_back({i, j, exp_lcm(lm(basis[i]), lm(basis[j]))});
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    // Normal selection: lcm greatest in the local order; ties by (i, j).
    std::size_t best = 0;
    for (std::size_t p = 1; p < pending.size(); ++p) {
      int c = cmp_local(pending[p].lcm, pending[best].lcm);
      if (c > 0 ||
          (c == 0 && (pending[p].i < pending[best].i ||
                      (pending[p].i == pending[best].i &&
                       pending[p].j < pending[best].j))))
        best = p;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);
    guard.on_pair();

    const Germ& fi = basis[pr.i];
    const Germ& fj = basis[pr.j];
    // Cross-multiplied s-polynomial keeps everything over the integers.
    Germ spoly =
        fi.mul_monomial(exp_sub(pr.lcm, lm(fi)), leading_term(fj).second) -
        fj.mul_monomial(exp_sub(pr.lcm, lm(fj)), leading_term(fi).second);
    Germ r = mora_normal_form(spoly, basis, guard);
    if (!r.is_zero()) {
      basis.push_back(primitive_part(r));
      add_pairs_for(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  // Greatest leading terms first, so divisors are kept before their multiples.
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int c = cmp_local(lm(basis[a]), lm(basis[b]));
    return c != 0 ? c > 0 : a < b;
  });
  std::vector<Germ> kept;
  for (std::size_t idx : order) {
    bool redundant = false;
    for (const Germ& k : kept)
      if (exp_divides(lm(k), lm(basis[idx]))) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(make_monic(basis[idx]));
  }
  return {ideal.vars, std::move(kept)};
}

Staircase staircase(const StandardBasis& basis) {
  Staircase s;
  s.nvars = basis.vars.size();
  std::vector<Exponent> exps;
  for (const Germ& g : basis.elements) exps.push_back(lm(g));
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (const Exponent& e : exps) {
    bool redundant = false;
    for (const Exponent& d : exps)
      if (d != e && exp_divides(d, e)) {
        redundant = true;
        break;
      }
    if (!redundant) s.gens.push_back(e);
  }
  return s;
}

std::string to_string(const Colength& c) {
  return c.finite ? std::to_string(c.value) : std::string("infinite");
}

namespace {

// Box cap for quotient-basis enumeration; far beyond desk scale.
constexpr std::uint64_t kMaxBoxSize = std::uint64_t{1} << 23;

struct BoxCounter {
  std::size_t nvars;
  std::vector<unsigned> bound;                       // pure-power exponent per axis
  std::vector<std::vector<const Exponent*>> by_level;  // gens first applicable at level
  Exponent prefix;

  std::uint64_t count(std::size_t level) {
    for (const Exponent* g : by_level[level]) {
      bool divides = true;
      for (std::size_t i = 0; i < level; ++i)
        if ((*g)[i] > prefix[i]) {
          divides = false;
          break;
        }
      if (divides) return 0;
    }
    if (level == nvars) return 1;
    std::uint64_t total = 0;
    for (unsigned e = 0; e < bound[level]; ++e) {
      prefix[level] = e;
      total += count(level + 1);
    }
    return total;
  }
};

}  // namespace

Colength count_outside(const Staircase& s) {
  if (s.nvars == 0) throw DomainError("colength needs at least one variable");
  if (s.gens.empty()) return Colength::infinite();
  Exponent zero(s.nvars, 0);
  for (const Exponent& g : s.gens)
    if (g == zero) return Colength::of(0);  // unit ideal

  // Finite iff every axis carries a pure power; those powers bound the box.
  std::vector<unsigned> bound(s.nvars, 0);
  std::vector<bool> have(s.nvars, false);
  for (const Exponent& g : s.gens) {
    std::size_t positive = 0, axis = 0;
    for (std::size_t i = 0; i < s.nvars; ++i)
      if (g[i] > 0) {
        ++positive;
        axis = i;
      }
    if (positive == 1) {
      have[axis] = true;
      bound[axis] = g[axis];  // antichain: at most one pure power per axis
    }
  }
  for (bool h : have)
    if (!h) return Colength::infinite();

  std::uint64_t box = 1;
  for (unsigned b : bound) {
    box *= b;
    if (box > kMaxBoxSize)
      throw ResourceLimitError("quotient basis enumeration too large");
  }

  BoxCounter counter;
  counter.nvars = s.nvars;
  counter.bound = bound;
  counter.by_level.resize(s.nvars + 1);
  for (const Exponent& g : s.gens) {
    std::size_t last = 0;
    for (std::size_t i = 0; i < s.nvars; ++i)
      if (g[i] > 0) last = i + 1;
    counter.by_level[last].push_back(&g);
  }
  counter.prefix.assign(s.nvars, 0);
  return Colength::of(counter.count(0));
}

Colength colength(const Ideal& ideal, const Limits& limits) {
  if (ideal.vars.size() == 0)
    throw DomainError("colength needs at least one variable");
  if (ideal.gens.empty()) return Colength::infinite();
  return count_outside(staircase(standard_basis(ideal, limits)));
}

Colength milnor_number(const Germ& f, const Limits& limits) {
  if (f.is_zero()) throw DomainError("milnor number of the zero polynomial");
  if (f.constant_term() != 0)
    throw DomainError("germ must vanish at the origin");
  return colength(Ideal::jacobian(f), limits);
}

Colength tjurina_number(const Germ& f, const Limits& limits) {
  if (f.is_zero()) throw DomainError("tjurina number of the zero polynomial");
  if (f.constant_term() != 0)
    throw DomainError("germ must vanish at the origin");
  return colength(Ideal::tjurina(f), limits);
}

bool is_isolated(const Germ& f, const Limits& limits) {
  return milnor_number(f, limits).finite;
}

}  // namespace germ
