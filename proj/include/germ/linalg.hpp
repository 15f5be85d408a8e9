// Small dense exact linear algebra over Q, plus an exact LP feasibility test.
// Everything here is desk scale: matrices of a few dozen rows at most.
#ifndef GERM_LINALG_HPP
#define GERM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

std::size_t rat_rank(RatMat a);

// Basis of {x : a x = 0}, deterministic (free columns in ascending order).
std::vector<RatRow> rat_nullspace(const RatMat& a);

// Exact determinant of a square integer matrix (Bareiss elimination).
Int int_det(std::vector<std::vector<Int>> a);

// Scales a rational vector to a primitive integer vector (coprime entries),
// preserving direction. The zero vector maps to the zero vector.
std::vector<Int> primitive_integer_direction(const RatRow& v);

// Exact feasibility of  point ∈ conv(generators) + R^n_{>=0}  via a phase-one
// simplex with Bland's rule. All inputs are componentwise non-negative.
bool in_convex_hull_plus_orthant(const std::vector<Rat>& point,
                                 const std::vector<std::vector<Rat>>& generators);

}  // namespace germ

#endif
