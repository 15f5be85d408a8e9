#include "germ/germ.hpp"

#include <algorithm>
#include <set>

namespace germ {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool exp_divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

VarSet::VarSet(std::vector<std::string> n) : names(std::move(n)) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw DomainError("empty variable name");
    if (!seen.insert(name).second)
      throw DomainError("duplicate variable name '" + name + "'");
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

Germ Germ::monomial(VarSet vars, Exponent e, Rat c) {
  if (e.size() != vars.size())
    throw DomainError("exponent length does not match variable count");
  Germ f(std::move(vars));
  f.add_term(e, c);
  return f;
}

Germ Germ::constant(VarSet vars, Rat c) {
  Exponent zero(vars.size(), 0);
  return monomial(std::move(vars), std::move(zero), std::move(c));
}

Rat Germ::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Germ::constant_term() const { return coeff(Exponent(nvars(), 0)); }

unsigned Germ::max_total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

unsigned Germ::min_total_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

void Germ::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars())
    throw DomainError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Germ::require_same_vars(const Germ& g) const {
  if (vars_ != g.vars_) throw DomainError("variable-set mismatch");
}

Germ Germ::operator+(const Germ& g) const {
  require_same_vars(g);
  Germ r(*this);
  for (const auto& [e, c] : g.terms_) r.add_term(e, c);
  return r;
}

Germ Germ::operator-(const Germ& g) const {
  require_same_vars(g);
  Germ r(*this);
  for (const auto& [e, c] : g.terms_) r.add_term(e, -c);
  return r;
}

Germ Germ::operator-() const { return scaled(Rat(-1)); }

Germ Germ::operator*(const Germ& g) const {
  require_same_vars(g);
  Germ r(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : g.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

Germ Germ::scaled(const Rat& c) const {
  Germ r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Germ Germ::mul_monomial(const Exponent& e, const Rat& c) const {
  Germ r(vars_);
  if (c == 0) return r;
  for (const auto& [e0, k] : terms_) r.terms_.emplace(exp_add(e0, e), k * c);
  return r;
}

Germ Germ::partial(std::size_t i) const {
  if (i >= nvars()) throw DomainError("variable index out of range");
  Germ r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    r.add_term(d, c * Rat(e[i]));
  }
  return r;
}

std::vector<Exponent> Germ::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Germ Germ::restrict_to_zero(const std::vector<bool>& kill) const {
  if (kill.size() != nvars()) throw DomainError("kill mask length mismatch");
  Germ r(vars_);
  for (const auto& [e, c] : terms_) {
    bool drop = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (kill[i] && e[i] > 0) {
        drop = true;
        break;
      }
    if (!drop) r.terms_.emplace(e, c);
  }
  return r;
}

}  // namespace germ
