// Sparse multivariate polynomials over Q with a fixed, ordered variable set.
// Values are immutable in spirit: every operation returns a fresh canonical
// polynomial (no stored zero coefficients, exponents all of length nvars).
#ifndef GERM_GERM_HPP
#define GERM_GERM_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/errors.hpp"
#include "germ/rational.hpp"

namespace germ {

// Per-variable exponents, length == ambient variable count.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);
bool exp_divides(const Exponent& a, const Exponent& b);  // a <= b componentwise
Exponent exp_add(const Exponent& a, const Exponent& b);
Exponent exp_sub(const Exponent& a, const Exponent& b);  // a - b, requires b <= a
Exponent exp_lcm(const Exponent& a, const Exponent& b);

// Ordered list of distinct variable names, fixed for a computation.
struct VarSet {
  std::vector<std::string> names;

  VarSet() = default;
  explicit VarSet(std::vector<std::string> n);

  std::size_t size() const { return names.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool operator==(const VarSet&) const = default;
};

class Germ {
 public:
  Germ() = default;
  explicit Germ(VarSet vars) : vars_(std::move(vars)) {}

  static Germ monomial(VarSet vars, Exponent e, Rat c);
  static Germ constant(VarSet vars, Rat c);

  const VarSet& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponent, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rat coeff(const Exponent& e) const;
  Rat constant_term() const;
  unsigned max_total_degree() const;  // 0 for the zero polynomial
  unsigned min_total_degree() const;  // 0 for the zero polynomial

  // Canonicalizing insert: adds c*x^e, erasing the term if the sum cancels.
  void add_term(const Exponent& e, const Rat& c);

  Germ operator+(const Germ& g) const;
  Germ operator-(const Germ& g) const;
  Germ operator-() const;
  Germ operator*(const Germ& g) const;
  bool operator==(const Germ&) const = default;

  Germ scaled(const Rat& c) const;
  Germ mul_monomial(const Exponent& e, const Rat& c) const;
  Germ partial(std::size_t i) const;

  // Exponents with nonzero coefficient, ascending lexicographic.
  std::vector<Exponent> support() const;

  // Drops every term positive on a killed variable; the variable set stays.
  Germ restrict_to_zero(const std::vector<bool>& kill) const;

 private:
  void require_same_vars(const Germ& g) const;

  VarSet vars_;
  std::map<Exponent, Rat> terms_;
};

}  // namespace germ

#endif
