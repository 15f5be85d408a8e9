#include "germ/newton.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

#include "germ/errors.hpp"
#include "germ/linalg.hpp"

namespace germ {

namespace {

using IPoint = std::vector<Int>;

IPoint to_ipoint(const Exponent& e) {
  IPoint p;
  p.reserve(e.size());
  for (unsigned x : e) p.emplace_back(x);
  return p;
}

Int idot(const std::vector<Int>& w, const IPoint& a) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
  return s;
}

// Visits all k-subsets of {0..m-1} in ascending order.
template <typename F>
void for_each_combination(std::size_t m, std::size_t k, F&& fn) {
  if (k > m || k == 0) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < m) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

// Nullspace that also works for a 0-row system (the whole space).
std::vector<RatRow> nullspace_cols(const RatMat& m, std::size_t cols) {
  if (m.empty()) {
    std::vector<RatRow> basis;
    for (std::size_t i = 0; i < cols; ++i) {
      RatRow v(cols, Rat(0));
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return rat_nullspace(m);
}

// Primitive normal of the hyperplane through the chosen points, or empty when
// they are affinely dependent.
std::vector<Int> hyperplane_normal(const std::vector<IPoint>& pts,
                                   const std::vector<std::size_t>& subset,
                                   std::size_t dim) {
  RatMat diffs;
  for (std::size_t r = 1; r < subset.size(); ++r) {
    RatRow row(dim);
    for (std::size_t c = 0; c < dim; ++c)
      row[c] = Rat(pts[subset[r]][c] - pts[subset[0]][c]);
    diffs.push_back(std::move(row));
  }
  auto basis = nullspace_cols(diffs, dim);
  if (basis.size() != 1) return {};
  return primitive_integer_direction(basis[0]);
}

struct Plane {
  std::vector<Int> normal;  // all points satisfy normal . x >= offset
  Int offset;
  std::vector<std::size_t> on;  // indices of points on the plane
};

// All facets of conv(pts) where pts has full affine dimension `dim` in
// ambient dimension `dim`. Deterministic: ordered by (normal, offset).
std::vector<Plane> facet_planes(const std::vector<IPoint>& pts, std::size_t dim) {
  std::map<std::pair<std::vector<Int>, Int>, bool> seen;
  for_each_combination(pts.size(), dim, [&](const std::vector<std::size_t>& subset) {
    std::vector<Int> w = hyperplane_normal(pts, subset, dim);
    if (w.empty()) return;
    Int offset = idot(w, pts[subset[0]]);
    bool any_above = false, any_below = false;
    for (const IPoint& p : pts) {
      Int v = idot(w, p);
      if (v > offset) any_above = true;
      if (v < offset) any_below = true;
      if (any_above && any_below) return;  // not supporting
    }
    if (any_below) {
      for (Int& x : w) x = -x;
      offset = -offset;
    }
    seen.emplace(std::make_pair(std::move(w), std::move(offset)), true);
  });
  std::vector<Plane> planes;
  for (const auto& [key, unused] : seen) {
    Plane pl;
    pl.normal = key.first;
    pl.offset = key.second;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (idot(pl.normal, pts[i]) == pl.offset) pl.on.push_back(i);
    planes.push_back(std::move(pl));
  }
  return planes;
}

// Pulling triangulation of conv of the points selected by idx, of affine
// dimension d: cone the pulled vertex over the triangulated facets that do
// not contain it. Deterministic for a fixed pull order; degenerate inputs
// (collinear points, fat facets) are handled by construction.
std::vector<std::vector<std::size_t>> pull_triangulate(
    const std::vector<IPoint>& master, const std::vector<std::size_t>& idx,
    std::size_t d, PullOrder order) {
  if (d == 0 || idx.size() == d + 1) return {idx};

  // Pulled vertex: lexicographically extreme point.
  std::size_t apex = 0;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    bool better = order == PullOrder::LexMin ? master[idx[i]] < master[idx[apex]]
                                             : master[idx[i]] > master[idx[apex]];
    if (better) apex = i;
  }

  // Project to a coordinate chart of the affine hull: the pivot columns of
  // the difference matrix give an injective projection.
  const std::size_t ambient = master[idx[0]].size();
  RatMat diffs;
  for (std::size_t r = 1; r < idx.size(); ++r) {
    RatRow row(ambient);
    for (std::size_t c = 0; c < ambient; ++c)
      row[c] = Rat(master[idx[r]][c] - master[idx[0]][c]);
    diffs.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  {
    RatMat m = diffs;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ambient && rank < m.size(); ++col) {
      std::size_t pr = rank;
      while (pr < m.size() && m[pr][col] == 0) ++pr;
      if (pr == m.size()) continue;
      std::swap(m[rank], m[pr]);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == rank || m[r][col] == 0) continue;
        Rat factor = m[r][col] / m[rank][col];
        for (std::size_t c = col; c < ambient; ++c)
          m[r][c] -= factor * m[rank][c];
      }
      pivots.push_back(col);
      ++rank;
    }
  }
  if (pivots.size() != d)
    throw InternalInconsistencyError("face has unexpected affine dimension");

  std::vector<IPoint> proj;
  proj.reserve(idx.size());
  for (std::size_t i : idx) {
    IPoint p;
    p.reserve(d);
    for (std::size_t c : pivots) p.push_back(master[i][c]);
    proj.push_back(std::move(p));
  }

  std::vector<std::vector<std::size_t>> out;
  for (const Plane& facet : facet_planes(proj, d)) {
    bool contains_apex =
        std::find(facet.on.begin(), facet.on.end(), apex) != facet.on.end();
    if (contains_apex) continue;
    std::vector<std::size_t> sub_idx;
    for (std::size_t i : facet.on) sub_idx.push_back(idx[i]);
    for (auto& tri : pull_triangulate(master, sub_idx, d - 1, order)) {
      tri.insert(tri.begin(), idx[apex]);
      out.push_back(std::move(tri));
    }
  }
  return out;
}

void check_newton_input(const Germ& f) {
  if (f.is_zero())
    throw DomainError("newton polyhedron of the zero polynomial");
  if (f.nvars() < 1 || f.nvars() > kMaxNewtonDim)
    throw DomainError("unsupported dimension " + std::to_string(f.nvars()) +
                      " (newton computations handle 1.." +
                      std::to_string(kMaxNewtonDim) + " variables)");
}

// Compact facets of the Newton polyhedron of the given support: supporting
// hyperplanes with strictly positive primitive inner normal. Enumerating
// support subsets is exact and robust at desk scale; validity against the
// recession orthant is automatic from the sign of the normal.
std::vector<Plane> compact_facet_planes(const std::vector<IPoint>& pts,
                                        std::size_t n) {
  if (n == 1) {
    Plane pl;
    pl.normal = {Int(1)};
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i][0] < pts[best][0]) best = i;
    pl.offset = pts[best][0];
    pl.on = {best};
    return {pl};
  }
  std::map<std::pair<std::vector<Int>, Int>, bool> seen;
  for_each_combination(pts.size(), n, [&](const std::vector<std::size_t>& subset) {
    std::vector<Int> w = hyperplane_normal(pts, subset, n);
    if (w.empty()) return;
    bool all_pos = std::all_of(w.begin(), w.end(), [](const Int& x) { return x > 0; });
    bool all_neg = std::all_of(w.begin(), w.end(), [](const Int& x) { return x < 0; });
    if (all_neg) {
      for (Int& x : w) x = -x;
      all_pos = true;
    }
    if (!all_pos) return;
    Int offset = idot(w, pts[subset[0]]);
    for (const IPoint& p : pts)
      if (idot(w, p) < offset) return;  // supports from the wrong side
    seen.emplace(std::make_pair(std::move(w), std::move(offset)), true);
  });
  std::vector<Plane> planes;
  for (const auto& [key, unused] : seen) {
    Plane pl;
    pl.normal = key.first;
    pl.offset = key.second;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (idot(pl.normal, pts[i]) == pl.offset) pl.on.push_back(i);
    planes.push_back(std::move(pl));
  }
  return planes;
}

// Cone-over-diagram triangulation for a convenient support in dimension dim.
std::vector<std::vector<Exponent>> triangulate_diagram(
    const std::vector<Exponent>& support, std::size_t dim, PullOrder order) {
  std::vector<IPoint> pts;
  pts.reserve(support.size());
  for (const Exponent& e : support) pts.push_back(to_ipoint(e));
  std::vector<std::vector<Exponent>> simplices;
  for (const Plane& facet : compact_facet_planes(pts, dim)) {
    std::vector<std::size_t> idx = facet.on;
    for (auto& tri : pull_triangulate(pts, idx, dim - 1, order)) {
      std::vector<Exponent> s;
      s.reserve(tri.size());
      for (std::size_t i : tri) s.push_back(support[i]);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

Rat cone_volume(const std::vector<std::vector<Exponent>>& simplices,
                std::size_t dim) {
  Int factorial = 1;
  for (std::size_t i = 2; i <= dim; ++i) factorial *= Int(i);
  Int total = 0;
  for (const auto& s : simplices) {
    std::vector<std::vector<Int>> m;
    m.reserve(dim);
    for (const Exponent& e : s) m.push_back(to_ipoint(e));
    total += abs(int_det(std::move(m)));
  }
  Rat vol(total, factorial);
  vol.canonicalize();
  return vol;
}

void require_convenient_support(const std::vector<Exponent>& support,
                                std::size_t dim) {
  Exponent zero(dim, 0);
  for (const Exponent& e : support)
    if (e == zero)
      throw DomainError("constant term present: not a germ at the origin");
  for (std::size_t i = 0; i < dim; ++i) {
    bool found = false;
    for (const Exponent& e : support) {
      if (e[i] == 0) continue;
      bool pure = true;
      for (std::size_t j = 0; j < dim; ++j)
        if (j != i && e[j] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found)
      throw DomainError("support is not convenient (no pure power on axis " +
                        std::to_string(i) + ")");
  }
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const Germ& f) {
  check_newton_input(f);
  NewtonPolyhedron p;
  p.nvars = f.nvars();
  p.support = f.support();

  std::vector<IPoint> pts;
  for (const Exponent& e : p.support) pts.push_back(to_ipoint(e));

  // A support point is a vertex iff it is outside the hull-plus-orthant of
  // the remaining points.
  for (std::size_t i = 0; i < p.support.size(); ++i) {
    std::vector<Rat> point(p.nvars);
    for (std::size_t c = 0; c < p.nvars; ++c) point[c] = Rat(pts[i][c]);
    std::vector<std::vector<Rat>> others;
    for (std::size_t j = 0; j < p.support.size(); ++j) {
      if (j == i) continue;
      std::vector<Rat> q(p.nvars);
      for (std::size_t c = 0; c < p.nvars; ++c) q[c] = Rat(pts[j][c]);
      others.push_back(std::move(q));
    }
    if (others.empty() || !in_convex_hull_plus_orthant(point, others))
      p.vertices.push_back(p.support[i]);
  }

  for (const Plane& pl : compact_facet_planes(pts, p.nvars)) {
    CompactFacet facet;
    facet.normal = pl.normal;
    facet.offset = pl.offset;
    for (std::size_t i : pl.on) facet.points.push_back(p.support[i]);
    for (const Exponent& e : facet.points)
      if (std::find(p.vertices.begin(), p.vertices.end(), e) != p.vertices.end())
        facet.vertices.push_back(e);
    p.facets.push_back(std::move(facet));
  }
  return p;
}

bool is_convenient(const Germ& f) {
  if (f.is_zero()) throw DomainError("convenience of the zero polynomial");
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    bool found = false;
    for (const auto& [e, c] : f.terms()) {
      if (e[i] == 0) continue;
      bool pure = true;
      for (std::size_t j = 0; j < f.nvars(); ++j)
        if (j != i && e[j] != 0) {
          pure = false;
          break;
        }
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Rat UnderDiagram::volume() const { return cone_volume(simplices, nvars); }

UnderDiagram under_diagram(const NewtonPolyhedron& p, PullOrder order) {
  require_convenient_support(p.support, p.nvars);
  UnderDiagram ud;
  ud.nvars = p.nvars;
  ud.simplices = triangulate_diagram(p.support, p.nvars, order);
  return ud;
}

UnderDiagram under_diagram(const Germ& f, PullOrder order) {
  check_newton_input(f);
  UnderDiagram ud;
  ud.nvars = f.nvars();
  std::vector<Exponent> support = f.support();
  require_convenient_support(support, ud.nvars);
  ud.simplices = triangulate_diagram(support, ud.nvars, order);
  return ud;
}

Int newton_number(const Germ& f, bool parallel) {
  check_newton_input(f);
  const std::size_t n = f.nvars();
  const std::vector<Exponent> support = f.support();
  require_convenient_support(support, n);

  const long long mask_count = (1LL << n) - 1;
  std::vector<Rat> volumes(static_cast<std::size_t>(mask_count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(mask_count));

  // Subspace contributions are independent; each restricted support stays
  // convenient because the axis powers survive restriction.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (long long mask = 1; mask <= mask_count; ++mask) {
    try {
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1LL << i)) dims.push_back(i);
      std::vector<Exponent> restricted;
      for (const Exponent& e : support) {
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i)
          if (!(mask & (1LL << i)) && e[i] > 0) {
            inside = false;
            break;
          }
        if (!inside) continue;
        Exponent r(dims.size());
        for (std::size_t k = 0; k < dims.size(); ++k) r[k] = e[dims[k]];
        restricted.push_back(std::move(r));
      }
      volumes[static_cast<std::size_t>(mask - 1)] = cone_volume(
          triangulate_diagram(restricted, dims.size(), PullOrder::LexMin),
          dims.size());
    } catch (...) {
      errors[static_cast<std::size_t>(mask - 1)] = std::current_exception();
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  // Alternating factorial-weighted sum plus the (-1)^n constant.
  Rat total = (n % 2 == 0) ? Rat(1) : Rat(-1);
  for (long long mask = 1; mask <= mask_count; ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    Int factorial = 1;
    for (std::size_t i = 2; i <= k; ++i) factorial *= Int(i);
    Rat term = Rat(factorial) * volumes[static_cast<std::size_t>(mask - 1)];
    total += ((n - k) % 2 == 0) ? term : Rat(-term);
  }
  if (!rat_is_integer(total))
    throw InternalInconsistencyError("newton number is not an integer");
  return total.get_num();
}

Int newton_number_serial(const Germ& f) { return newton_number(f, false); }

}  // namespace germ
