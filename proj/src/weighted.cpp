#include "germ/weighted.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "germ/linalg.hpp"

namespace germ {

unsigned multiplicity(const Germ& f) {
  if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial");
  if (f.constant_term() != 0)
    throw DomainError("germ must vanish at the origin");
  return f.min_total_degree();
}

LeadingDecomposition leading_form(const Germ& f) {
  unsigned m = multiplicity(f);
  LeadingDecomposition d{m, Germ(f.vars()), Germ(f.vars())};
  for (const auto& [e, c] : f.terms())
    (total_degree(e) == m ? d.leading : d.tail).add_term(e, c);
  return d;
}

WeightRecovery recover_weights(const Germ& f) {
  if (f.is_zero()) throw DomainError("weight recovery of the zero polynomial");
  const std::size_t n = f.nvars();
  RatMat rows;
  for (const Exponent& a : f.support()) {
    RatRow row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(a[i]);
    row[n] = -1;
    rows.push_back(std::move(row));
  }
  auto basis = rat_nullspace(rows);
  WeightRecovery rec;
  if (basis.empty()) {
    rec.kind = WeightRecoveryKind::None;
    return rec;
  }
  if (basis.size() >= 2) {
    rec.kind = WeightRecoveryKind::Underdetermined;
    rec.space_basis = std::move(basis);
    return rec;
  }
  RatRow v = std::move(basis[0]);
  bool all_pos = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q > 0; });
  bool all_neg = std::all_of(v.begin(), v.end(), [](const Rat& q) { return q < 0; });
  if (all_neg) {
    for (Rat& q : v) q = -q;
    all_pos = true;
  }
  if (!all_pos) {
    rec.kind = WeightRecoveryKind::None;
    return rec;
  }
  // Canonical representative of the ray: coprime positive integers.
  std::vector<Int> w = primitive_integer_direction(v);
  rec.kind = WeightRecoveryKind::Unique;
  WeightSystem ws;
  for (std::size_t i = 0; i < n; ++i) ws.weights.emplace_back(w[i]);
  ws.degree = Rat(w[n]);
  rec.weights = std::move(ws);
  return rec;
}

bool is_weighted_homogeneous(const Germ& f, const WeightSystem& ws) {
  if (ws.weights.size() != f.nvars())
    throw DomainError("weight count does not match variable count");
  for (const auto& [e, c] : f.terms()) {
    Rat s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += ws.weights[i] * Rat(e[i]);
    if (s != ws.degree) return false;
  }
  return true;
}

bool NormalizedWeights::all_equal() const {
  for (const Int& w : weights)
    if (w != weights.front()) return false;
  return !weights.empty();
}

NormalizedWeights normalize_weights(const WeightSystem& ws) {
  if (ws.weights.empty()) throw DomainError("empty weight system");
  for (const Rat& w : ws.weights)
    if (w <= 0) throw DomainError("weights must be strictly positive");
  if (ws.degree <= 0) throw DomainError("weighted degree must be positive");

  Int scale = ws.degree.get_den();
  for (const Rat& w : ws.weights) scale = lcm(scale, w.get_den());
  std::vector<Int> ints;
  ints.reserve(ws.weights.size());
  Int g = Rat(ws.degree * Rat(scale)).get_num();
  for (const Rat& w : ws.weights) {
    ints.push_back(Rat(w * Rat(scale)).get_num());
    g = gcd(g, ints.back());
  }
  Int d = Rat(ws.degree * Rat(scale)).get_num() / g;
  for (Int& w : ints) w /= g;

  NormalizedWeights nw;
  nw.perm.resize(ints.size());
  std::iota(nw.perm.begin(), nw.perm.end(), std::size_t{0});
  std::stable_sort(nw.perm.begin(), nw.perm.end(),
                   [&](std::size_t a, std::size_t b) { return ints[a] < ints[b]; });
  nw.weights.reserve(ints.size());
  for (std::size_t i : nw.perm) nw.weights.push_back(ints[i]);
  nw.degree = d;
  return nw;
}

Rat wh_milnor_closed_form(const WeightSystem& ws) {
  if (ws.weights.empty()) throw DomainError("empty weight system");
  Rat p = 1;
  for (const Rat& w : ws.weights) {
    if (w <= 0) throw DomainError("weights must be strictly positive");
    p *= (ws.degree - w) / w;
  }
  return p;
}

bool is_semihomogeneous(const Germ& f, const Limits& limits) {
  return is_isolated(leading_form(f).leading, limits);
}

std::string to_string(const WeightSystem& ws) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ws.weights.size(); ++i) {
    if (i) os << ',';
    os << ws.weights[i].get_str();
  }
  os << "; " << ws.degree.get_str() << ')';
  return os.str();
}

std::string to_string(const NormalizedWeights& nw) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < nw.weights.size(); ++i) {
    if (i) os << ',';
    os << nw.weights[i].get_str();
  }
  os << "; " << nw.degree.get_str() << ')';
  return os.str();
}

}  // namespace germ
