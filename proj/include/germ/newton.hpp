// Newton polyhedron of a germ, the region under the diagram, exact lattice
// volumes, and the Kouchnirenko Newton number.
//
// Everything is computed over exact rationals. Compact facets are found by
// supporting-hyperplane enumeration over support subsets (robust against
// collinear support and fat facets); the under-diagram region is triangulated
// by cones over a deterministic lexicographic pulling triangulation of each
// compact facet, so volumes come out as integer determinants over factorials.
//
// The Newton number sums factorial-weighted volumes over all coordinate
// subspaces. Subspace contributions are independent; newton_number can
// evaluate them in parallel, and the serial path is kept as the reference.
#ifndef GERM_NEWTON_HPP
#define GERM_NEWTON_HPP

#include <cstddef>
#include <vector>

#include "germ/germ.hpp"
#include "germ/rational.hpp"

namespace germ {

// Exact convex hulls at desk scale: dimensions above this are rejected.
inline constexpr std::size_t kMaxNewtonDim = 6;

struct CompactFacet {
  std::vector<Int> normal;  // primitive inner normal, all entries positive
  Int offset;               // normal . x == offset on the facet
  std::vector<Exponent> points;    // all support points on the facet
  std::vector<Exponent> vertices;  // subset: polyhedron vertices on the facet
};

struct NewtonPolyhedron {
  std::size_t nvars = 0;
  std::vector<Exponent> support;
  std::vector<Exponent> vertices;  // vertices of the polyhedron (subset of support)
  std::vector<CompactFacet> facets;
};

// Requires f != 0 and 1 <= nvars <= kMaxNewtonDim.
NewtonPolyhedron newton_polyhedron(const Germ& f);

// True iff every axis carries a positive pure power of its variable.
bool is_convenient(const Germ& f);

enum class PullOrder { LexMin, LexMax };

// Triangulation of the cone with apex 0 over the compact facets. Simplices
// have pairwise disjoint interiors; each lists its n non-apex vertices.
struct UnderDiagram {
  std::size_t nvars = 0;
  std::vector<std::vector<Exponent>> simplices;

  Rat volume() const;
};

// Requires convenient support and no constant term.
UnderDiagram under_diagram(const NewtonPolyhedron& p,
                           PullOrder order = PullOrder::LexMin);
UnderDiagram under_diagram(const Germ& f, PullOrder order = PullOrder::LexMin);

// Kouchnirenko's alternating sum over coordinate subspaces. Requires f
// convenient with f(0) = 0; non-convenient input is a distinct error.
Int newton_number(const Germ& f, bool parallel = true);
Int newton_number_serial(const Germ& f);

}  // namespace germ

#endif
