#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "czlab/element.hpp"
#include "czlab/interval.hpp"

namespace czlab {

// Thrown when an enumeration window exceeds the configured point cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conjunction of three interval constraints on a point (x, y):
//   x in ix,  y in iy,  x - y in id.
// Every set this library manipulates is a finite union of such cells, and
// all operations on them are exact: the cell is nonempty iff ix and iy are
// nonempty and (ix - iy) meets id, which is decidable by endpoint
// comparisons alone (one-dimensional Helly property of intervals).
struct Cell {
  IntervalZ x = IntervalZ::all();
  IntervalZ y = IntervalZ::all();
  IntervalZ d = IntervalZ::all();
};

inline bool cell_empty(const Cell& c) {
  if (c.x.empty() || c.y.empty()) return true;
  return intersect(c.x - c.y, c.d).empty();
}

// Exact set of differences x - y achieved by points of the cell.
inline IntervalZ cell_diffs(const Cell& c) {
  if (c.x.empty() || c.y.empty()) return IntervalZ::none();
  return intersect(c.d, c.x - c.y);
}

inline bool cell_contains(const Cell& c, Element p) {
  return c.x.contains(p.i) && c.y.contains(p.j) && c.d.contains(p.i - p.j);
}

inline Cell cell_intersect(const Cell& a, const Cell& b) {
  return {intersect(a.x, b.x), intersect(a.y, b.y), intersect(a.d, b.d)};
}

// Replaces each constraint interval by the exact shadow of the cell on that
// axis. One simultaneous pass reaches the fixpoint: for any feasible value
// on one axis there are witnesses on the others, so the shadows are already
// mutually consistent. Tight cells make containment tests and printed forms
// canonical. Precondition: the cell is nonempty.
inline Cell cell_tighten(const Cell& c) {
  return {intersect(c.x, c.y + c.d), intersect(c.y, c.x - c.d),
          intersect(c.d, c.x - c.y)};
}

// Sufficient (and, for tightened cells, exact) containment test.
inline bool cell_subset(const Cell& a, const Cell& b) {
  return b.x.contains(a.x) && b.y.contains(a.y) && b.d.contains(a.d);
}

// Finite rectangle used for enumeration and brute-force oracles.
struct Window {
  Coord xlo, xhi, ylo, yhi;

  static constexpr Window square(Coord w) { return {-w, w, -w, w}; }
  constexpr bool contains(Element p) const {
    return xlo <= p.i && p.i <= xhi && ylo <= p.j && p.j <= yhi;
  }
  constexpr bool valid() const { return xlo <= xhi && ylo <= yhi; }
  // Point count; safe against Coord overflow for any valid window.
  constexpr unsigned __int128 count() const {
    if (!valid()) return 0;
    return (unsigned __int128)(xhi - xlo + 1) *
           (unsigned __int128)(yhi - ylo + 1);
  }
};

// Finite union of cells. Stored cells are always nonempty and tightened;
// the list is otherwise unnormalized (overlaps allowed). Equality and
// containment are decided semantically via complements.
class Region {
 public:
  Region() = default;

  static Region empty() { return Region(); }
  static Region all() { return of_cell(Cell{}); }
  static Region of_cell(const Cell& c) {
    Region r;
    r.push(c);
    return r;
  }
  static Region of_cells(const std::vector<Cell>& cs) {
    Region r;
    for (const Cell& c : cs) r.push(c);
    return r;
  }
  static Region point(Element p) {
    return of_cell({IntervalZ::single(p.i), IntervalZ::single(p.j),
                    IntervalZ::single(p.i - p.j)});
  }

  const std::vector<Cell>& cells() const { return cells_; }
  bool trivially_empty() const { return cells_.empty(); }

  // Adds a cell, dropping empties and absorbing nested cells: the stored
  // list never keeps a cell contained in another (exact on tightened cells).
  void push(const Cell& c) {
    if (cell_empty(c)) return;
    Cell t = cell_tighten(c);
    for (const Cell& kept : cells_)
      if (cell_subset(t, kept)) return;
    std::erase_if(cells_, [&t](const Cell& kept) {
      return cell_subset(kept, t);
    });
    cells_.push_back(t);
  }

 private:
  std::vector<Cell> cells_;
};

inline bool member(const Region& r, Element p) {
  for (const Cell& c : r.cells())
    if (cell_contains(c, p)) return true;
  return false;
}

inline Region unite(const Region& a, const Region& b) {
  Region r = a;
  for (const Cell& c : b.cells()) r.push(c);
  return r;
}

inline Region intersect(const Region& a, const Region& b) {
  Region r;
  for (const Cell& ca : a.cells())
    for (const Cell& cb : b.cells()) r.push(cell_intersect(ca, cb));
  return r;
}

// Complement of one cell: disjunction of the negated atoms, at most two
// cells per finite constraint side.
inline std::vector<Cell> cell_complement(const Cell& c) {
  std::vector<Cell> out;
  auto add_axis = [&out](const IntervalZ& iv, int axis) {
    auto emit = [&out, axis](IntervalZ piece) {
      Cell cc;
      (axis == 0 ? cc.x : axis == 1 ? cc.y : cc.d) = piece;
      out.push_back(cc);
    };
    if (iv.lo.is_finite()) emit(IntervalZ::at_most(iv.lo.value() - 1));
    if (iv.hi.is_finite()) emit(IntervalZ::at_least(iv.hi.value() + 1));
  };
  add_axis(c.x, 0);
  add_axis(c.y, 1);
  add_axis(c.d, 2);
  return out;
}

inline Region complement(const Region& r) {
  Region acc = Region::all();
  for (const Cell& c : r.cells()) {
    Region next;
    for (const Cell& piece : cell_complement(c))
      for (const Cell& a : acc.cells()) next.push(cell_intersect(a, piece));
    acc = next;
    if (acc.trivially_empty()) return acc;
  }
  return acc;
}

inline Region difference(const Region& a, const Region& b) {
  return intersect(a, complement(b));
}

inline bool is_empty(const Region& r) {
  // Stored cells are nonempty by construction.
  return r.cells().empty();
}

inline bool is_subset(const Region& a, const Region& b) {
  // Fast path: each cell of a inside a single cell of b.
  for (const Cell& ca : a.cells()) {
    bool covered = false;
    for (const Cell& cb : b.cells())
      if (cell_subset(ca, cb)) {
        covered = true;
        break;
      }
    if (!covered) return is_empty(intersect(a, complement(b)));
  }
  return true;
}

inline bool equals(const Region& a, const Region& b) {
  return is_subset(a, b) && is_subset(b, a);
}

// Image under the coordinate swap (i,j) -> (j,i), i.e. under inversion.
inline Region swap_xy(const Region& r) {
  Region out;
  for (const Cell& c : r.cells()) out.push({c.y, c.x, -c.d});
  return out;
}

// ---- order-derived point sets ------------------------------------------

// up_set(a) = {s : a <= s} = {(a.i-k, a.j-k) : k >= 0}.
inline Region up_set(Element a) {
  return Region::of_cell({IntervalZ::at_most(a.i), IntervalZ::at_most(a.j),
                          IntervalZ::single(diff(a))});
}

// down_set(a) = {s : s <= a} = {(a.i+k, a.j+k) : k >= 0}.
inline Region down_set(Element a) {
  return Region::of_cell({IntervalZ::at_least(a.i), IntervalZ::at_least(a.j),
                          IntervalZ::single(diff(a))});
}

inline Region strict_down_set(Element a) {
  return Region::of_cell({IntervalZ::at_least(a.i + 1),
                          IntervalZ::at_least(a.j + 1),
                          IntervalZ::single(diff(a))});
}

inline Region updown_set(Element a) {
  return unite(up_set(a), down_set(a));
}

// The idempotents: the diagonal x = y.
inline Region diagonal() {
  return Region::of_cell({IntervalZ::all(), IntervalZ::all(),
                          IntervalZ::single(0)});
}

// Quadrant {(x,y) : x >= n, y >= n}.
inline Region quadrant(Coord n) {
  return Region::of_cell({IntervalZ::at_least(n), IntervalZ::at_least(n),
                          IntervalZ::all()});
}

// Left half-plane {(x,y) : x <= 0}; the isolated locus of the wedge
// topology, and dense in it.
inline Region iz_region() {
  return Region::of_cell({IntervalZ::at_most(0), IntervalZ::all(),
                          IntervalZ::all()});
}

// Union of the up_sets of (i+k, j) over all k >= 0; closed form is the
// wedge {(x,y) : y <= j, x - y >= i - j}.
inline Region o_wedge(Element a) {
  return Region::of_cell({IntervalZ::all(), IntervalZ::at_most(a.j),
                          IntervalZ::at_least(diff(a))});
}

// ---- semigroup action on regions ----------------------------------------
//
// Each translation splits at the multiplication branch boundary. One branch
// acts as an affine shift on a sub-cell; the other collapses the sub-cell
// onto a fixed row or column parameterized by the achieved differences.
// Both images are single cells, so the results below are exact. The two
// branches agree on the boundary line, which may therefore be covered twice.

// {z*g : z in r}.
inline Region translate_right(const Region& r, Element g) {
  Region out;
  for (const Cell& c : r.cells()) {
    // Branch y <= g.i: z*g = (d + g.i, g.j) where d ranges over the
    // differences achieved with y restricted.
    IntervalZ da = intersect(
        c.d, c.x - intersect(c.y, IntervalZ::at_most(g.i)));
    out.push({da.shifted(g.i), IntervalZ::single(g.j),
              da.shifted(g.i - g.j)});
    // Branch y >= g.i: affine shift of y by g.j - g.i.
    Coord delta = g.j - g.i;
    out.push({c.x, intersect(c.y, IntervalZ::at_least(g.i)).shifted(delta),
              c.d.shifted(-delta)});
  }
  return out;
}

// {g*z : z in r}.
inline Region translate_left(Element g, const Region& r) {
  Region out;
  for (const Cell& c : r.cells()) {
    // Branch x >= g.j: affine shift of x by g.i - g.j.
    Coord delta = g.i - g.j;
    out.push({intersect(c.x, IntervalZ::at_least(g.j)).shifted(delta), c.y,
              c.d.shifted(delta)});
    // Branch x <= g.j: g*z = (g.i, g.j - d).
    IntervalZ db = intersect(
        c.d, intersect(c.x, IntervalZ::at_most(g.j)) - c.y);
    out.push({IntervalZ::single(g.i), (-db).shifted(g.j),
              db.shifted(g.i - g.j)});
  }
  return out;
}

// {z : z*g in t}.
inline Region preimage_right(const Region& t, Element g) {
  Region out;
  for (const Cell& c : t.cells()) {
    // Branch y <= g.i lands on the row y' = g.j with x' = d + g.i.
    if (c.y.contains(g.j)) {
      IntervalZ dd = intersect(c.x.shifted(-g.i),
                               c.d.shifted(g.j - g.i));
      out.push({IntervalZ::all(), IntervalZ::at_most(g.i), dd});
    }
    // Branch y >= g.i is the affine shift.
    Coord delta = g.j - g.i;
    out.push({c.x,
              intersect(c.y.shifted(-delta), IntervalZ::at_least(g.i)),
              c.d.shifted(delta)});
  }
  return out;
}

// {z : g*z in t}.
inline Region preimage_left(Element g, const Region& t) {
  Region out;
  for (const Cell& c : t.cells()) {
    Coord delta = g.i - g.j;
    out.push({intersect(c.x.shifted(-delta), IntervalZ::at_least(g.j)),
              c.y, c.d.shifted(-delta)});
    // Branch x <= g.j lands on the column x' = g.i with y' = g.j - d.
    if (c.x.contains(g.i)) {
      IntervalZ dd = intersect((-c.y).shifted(g.j),
                               c.d.shifted(g.j - g.i));
      out.push({IntervalZ::at_most(g.j), IntervalZ::all(), dd});
    }
  }
  return out;
}

// {a*b : a in ra, b in rb}, exact. Per cell pair the product splits on the
// coupling a.j <= b.i / a.j >= b.i. On each side, eliminating the coupled
// existential by pairwise endpoint comparisons (one-dimensional Helly)
// leaves a single output cell; the lower bounds kept from the elimination
// (u >= A.x.lo on one side, v >= B.y.lo on the other) are the feasibility
// constraints that keep the result exact when the coupled intersection of
// the operands can vanish.
inline Region product(const Region& ra, const Region& rb) {
  Region out;
  for (const Cell& a : ra.cells()) {
    for (const Cell& b : rb.cells()) {
      // Branch a.j <= b.i: a*b = (d1 + x2, y2).
      {
        IntervalZ d1 = cell_diffs(a);
        IntervalZ p = intersect(b.x, {a.y.lo, Bound::pos_inf()});
        if (!d1.empty() && !p.empty() && !b.y.empty() && !b.d.empty()) {
          Cell c{intersect(p + d1, {a.x.lo, Bound::pos_inf()}),
                 intersect(b.y, p - b.d), d1 + b.d};
          out.push(c);
        }
      }
      // Branch a.j >= b.i: a*b = (x1, y1 - d2).
      {
        IntervalZ d2 = cell_diffs(b);
        IntervalZ q = intersect(a.y, {b.x.lo, Bound::pos_inf()});
        if (!d2.empty() && !q.empty() && !a.x.empty() && !a.d.empty()) {
          Cell c{intersect(a.x, q + a.d),
                 intersect(q - d2, {b.y.lo, Bound::pos_inf()}), a.d + d2};
          out.push(c);
        }
      }
    }
  }
  return out;
}

// ---- equation solving -----------------------------------------------------

// {z : z*r = t}.
inline Region solve_right(Element r, Element t) {
  return preimage_right(Region::point(t), r);
}

// {z : l*z = t}.
inline Region solve_left(Element l, Element t) {
  return preimage_left(l, Region::point(t));
}

// {z : l*z*r = t}.
inline Region solve_two_sided(Element l, Element r, Element t) {
  return preimage_right(preimage_left(l, Region::point(t)), r);
}

// ---- suprema of linear functionals ---------------------------------------

// sup over the region of one of three functionals; -inf on an empty
// restriction, +inf when unbounded. These drive the exact quantifier
// elimination for the neighborhood families.
class SupFunctional {
 public:
  // sup of min(x, y).
  static SupFunctional min_xy() { return SupFunctional(Kind::MinXY, 0, 0); }
  // sup of x - y over the part of the region with y <= c.
  static SupFunctional diff_within_y_le(Coord c) {
    return SupFunctional(Kind::DiffWithinYLe, c, 0);
  }
  // sup of t such that (i + t, j + t) lies in the region.
  static SupFunctional t_along_down_ray(Coord i, Coord j) {
    return SupFunctional(Kind::TAlongDownRay, i, j);
  }

  Bound eval_cell(const Cell& c) const {
    switch (kind_) {
      case Kind::MinXY: {
        // Largest t with a cell point satisfying x >= t and y >= t.
        Bound m = min(c.x.hi, c.y.hi);
        m = min(m, c.y.hi + c.d.hi);
        m = min(m, c.x.hi - c.d.lo);
        return m;
      }
      case Kind::DiffWithinYLe: {
        Cell r = c;
        r.y = intersect(r.y, IntervalZ::at_most(a_));
        IntervalZ dd = cell_diffs(r);
        if (dd.empty()) return Bound::neg_inf();
        return dd.hi;
      }
      case Kind::TAlongDownRay: {
        if (!c.d.contains(a_ - b_)) return Bound::neg_inf();
        IntervalZ t = intersect(c.x.shifted(-a_), c.y.shifted(-b_));
        if (t.empty()) return Bound::neg_inf();
        return t.hi;
      }
    }
    return Bound::neg_inf();
  }

 private:
  enum class Kind { MinXY, DiffWithinYLe, TAlongDownRay };
  SupFunctional(Kind k, Coord a, Coord b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  Coord a_, b_;
};

inline Bound sup_along(const Region& r, const SupFunctional& f) {
  Bound best = Bound::neg_inf();
  for (const Cell& c : r.cells()) best = max(best, f.eval_cell(c));
  return best;
}

// ---- enumeration and witnesses -------------------------------------------

constexpr unsigned __int128 kDefaultMaxPoints = 10'000'000;

// All region points inside the window, sorted lexicographically.
// Rejects windows larger than the cap before doing any work.
inline std::vector<Element> enumerate(const Region& r, const Window& w,
                                      unsigned __int128 max_points =
                                          kDefaultMaxPoints) {
  if (w.count() > max_points)
    throw cap_exceeded("enumeration window exceeds the point cap");
  std::set<Element> pts;
  for (const Cell& c : r.cells()) {
    IntervalZ xs = intersect(c.x, IntervalZ::of(w.xlo, w.xhi));
    if (xs.empty()) continue;
    for (Coord x = xs.lo.value(); x <= xs.hi.value(); ++x) {
      IntervalZ ys = intersect(c.y, IntervalZ::of(w.ylo, w.yhi));
      // x - y in d  <=>  y in [x - d.hi, x - d.lo].
      ys = intersect(ys, {Bound::of(x) - c.d.hi, Bound::of(x) - c.d.lo});
      if (ys.empty()) continue;
      for (Coord y = ys.lo.value(); y <= ys.hi.value(); ++y)
        pts.insert({x, y});
    }
  }
  return std::vector<Element>(pts.begin(), pts.end());
}

// Deterministic sample point of a nonempty region (nearest to the origin
// within the first stored cell).
inline std::optional<Element> some_point(const Region& r) {
  if (r.cells().empty()) return std::nullopt;
  const Cell& c = r.cells().front();
  Coord d = cell_diffs(c).clamp(0);
  Coord x = intersect(c.x, c.y.shifted(d)).clamp(0);
  return Element{x, x - d};
}

inline std::string to_string(const Cell& c) {
  return "{x in " + c.x.str() + "; y in " + c.y.str() + "; d in " +
         c.d.str() + "}";
}

// Canonical printed form; parseable back by the expression language.
inline std::string to_string(const Region& r) {
  if (r.cells().empty()) return "empty";
  std::string s;
  for (std::size_t k = 0; k < r.cells().size(); ++k) {
    if (k) s += " | ";
    s += to_string(r.cells()[k]);
  }
  return s;
}

}  // namespace czlab
