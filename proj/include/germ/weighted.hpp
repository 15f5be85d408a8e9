// Multiplicity, leading forms, and weighted homogeneity: recovery of a weight
// system from the support, the normalization convention, and the closed-form
// Milnor number used as an independent cross-check oracle.
#ifndef GERM_WEIGHTED_HPP
#define GERM_WEIGHTED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germ/germ.hpp"
#include "germ/local_algebra.hpp"

namespace germ {

// Lowest total degree in the expansion at the origin.
// Requires f != 0 and f(0) = 0.
unsigned multiplicity(const Germ& f);

struct LeadingDecomposition {
  unsigned m = 0;  // multiplicity
  Germ leading;    // homogeneous part of degree m, nonzero
  Germ tail;       // all terms of degree > m
};

LeadingDecomposition leading_form(const Germ& f);

// Strictly positive rational weights w and degree d: f is weighted
// homogeneous of type (d; w) when every support exponent a satisfies
// a.w == d.
struct WeightSystem {
  std::vector<Rat> weights;
  Rat degree;
};

// Canonical form: coprime positive integers, weights ascending. perm[i] is
// the original index of the variable now in slot i.
struct NormalizedWeights {
  std::vector<Int> weights;
  Int degree;
  std::vector<std::size_t> perm;

  bool all_equal() const;
};

enum class WeightRecoveryKind { Unique, Underdetermined, None };

struct WeightRecovery {
  WeightRecoveryKind kind = WeightRecoveryKind::None;
  std::optional<WeightSystem> weights;        // set iff Unique
  std::vector<std::vector<Rat>> space_basis;  // rows (w_1..w_n, d), iff Underdetermined
};

// Solves {a.w = d : a in support(f)} up to scaling. Unique when the solution
// ray is one-dimensional and strictly positive; Underdetermined when the
// solution space has dimension >= 2; None otherwise.
WeightRecovery recover_weights(const Germ& f);

bool is_weighted_homogeneous(const Germ& f, const WeightSystem& ws);

NormalizedWeights normalize_weights(const WeightSystem& ws);

// prod_i (d - w_i)/w_i, exact. Equals the Milnor number for weighted
// homogeneous isolated germs; used only as a cross-check oracle.
Rat wh_milnor_closed_form(const WeightSystem& ws);

// True iff the leading form has an isolated singularity at the origin.
bool is_semihomogeneous(const Germ& f, const Limits& limits = {});

std::string to_string(const WeightSystem& ws);
std::string to_string(const NormalizedWeights& nw);

}  // namespace germ

#endif
