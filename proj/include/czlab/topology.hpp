#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "czlab/region.hpp"

namespace czlab {

// Four monotone neighborhood families, indexed by n >= 1. basic(p, n+1) is
// contained in basic(p, n), and p lies in every basic(p, n), so a family
// defines a topology through its filter of basic neighborhoods.
//
//   Tau1   {p} + the quadrant x >= n, y >= n.
//   Tau2   {p} + the strict chain below (p.i + n, p.j + n).
//   TauB   {p} alone when p.i <= 0 (such points are isolated);
//          for p.i >= 1, {p} + the wedge y <= p.j, x - y >= p.i - p.j + n,
//          which is the union of the up_sets of (p.i + s, p.j), s >= n.
//   TauBd  the image of TauB under inversion; isolation flips to p.j <= 0.
//
// The base-point case split for TauB is deliberate: the wedge form applies
// from p.i >= 1 only, and the left half-plane x <= 0 is exactly the
// isolated locus (its mirror y <= 0 for TauBd).
enum class Family { Tau1, Tau2, TauB, TauBd };

enum class Side { Left, Right };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Tau1: return "tau1";
    case Family::Tau2: return "tau2";
    case Family::TauB: return "tauB";
    case Family::TauBd: return "tauBd";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
  if (s == "tau1") return Family::Tau1;
  if (s == "tau2") return Family::Tau2;
  if (s == "tauB") return Family::TauB;
  if (s == "tauBd") return Family::TauBd;
  return std::nullopt;
}

constexpr Coord min_index = 1;

inline bool is_isolated(Family f, Element p) {
  switch (f) {
    case Family::Tau1:
    case Family::Tau2: return false;
    case Family::TauB: return p.i <= 0;
    case Family::TauBd: return p.j <= 0;
  }
  return false;
}

inline Region basic(Family f, Element p, Coord n) {
  if (n < min_index) throw std::invalid_argument("basic: index must be >= 1");
  switch (f) {
    case Family::Tau1:
      return unite(Region::point(p), quadrant(n));
    case Family::Tau2:
      return unite(Region::point(p),
                   strict_down_set({p.i + n, p.j + n}));
    case Family::TauB: {
      if (p.i <= 0) return Region::point(p);
      Region wedge = Region::of_cell({IntervalZ::all(),
                                      IntervalZ::at_most(p.j),
                                      IntervalZ::at_least(diff(p) + n)});
      return unite(Region::point(p), wedge);
    }
    case Family::TauBd: {
      if (p.j <= 0) return Region::point(p);
      Region wedge = Region::of_cell({IntervalZ::at_most(p.i),
                                      IntervalZ::all(),
                                      IntervalZ::at_most(diff(p) - n)});
      return unite(Region::point(p), wedge);
    }
  }
  return Region::empty();
}

inline std::vector<Element> isolated_in_window(Family f, const Window& w) {
  std::vector<Element> out;
  for (Coord x = w.xlo; x <= w.xhi; ++x)
    for (Coord y = w.ylo; y <= w.yhi; ++y)
      if (is_isolated(f, {x, y})) out.push_back({x, y});
  return out;
}

// Least n with basic(p, n) inside s, if any. Decided exactly: each family's
// tail is eliminated by one sup_along query against the complement of s.
inline std::optional<Coord> exists_n_subset(Family f, Element p,
                                            const Region& s) {
  if (!member(s, p)) return std::nullopt;
  if (is_isolated(f, p)) return min_index;
  Region bad = complement(s);
  Bound m;
  switch (f) {
    case Family::Tau1:
      // Quadrant part avoids bad iff n exceeds sup min(x,y) over bad.
      m = sup_along(bad, SupFunctional::min_xy());
      if (m.is_pos_inf()) return std::nullopt;
      if (m.is_neg_inf()) return min_index;
      return std::max(min_index, m.value() + 1);
    case Family::Tau2:
      // Tail points are (p.i+t, p.j+t) for t >= n+1.
      m = sup_along(bad, SupFunctional::t_along_down_ray(p.i, p.j));
      if (m.is_pos_inf()) return std::nullopt;
      if (m.is_neg_inf()) return min_index;
      return std::max(min_index, m.value());
    case Family::TauB:
      // Wedge avoids bad iff p.i - p.j + n exceeds the sup of x - y over
      // the part of bad with y <= p.j.
      m = sup_along(bad, SupFunctional::diff_within_y_le(p.j));
      if (m.is_pos_inf()) return std::nullopt;
      if (m.is_neg_inf()) return min_index;
      return std::max(min_index, m.value() - diff(p) + 1);
    case Family::TauBd:
      m = sup_along(swap_xy(bad), SupFunctional::diff_within_y_le(p.i));
      if (m.is_pos_inf()) return std::nullopt;
      if (m.is_neg_inf()) return min_index;
      return std::max(min_index, m.value() + diff(p) + 1);
  }
  return std::nullopt;
}

// Whether every basic(p, n) meets s. Exact by the same sup queries: the
// tail direction must be unbounded inside s (or p itself lies in s).
inline bool forall_n_meets(Family f, Element p, const Region& s) {
  if (member(s, p)) return true;
  if (is_isolated(f, p)) return false;
  switch (f) {
    case Family::Tau1:
      return sup_along(s, SupFunctional::min_xy()).is_pos_inf();
    case Family::Tau2:
      return sup_along(s, SupFunctional::t_along_down_ray(p.i, p.j))
          .is_pos_inf();
    case Family::TauB:
      return sup_along(s, SupFunctional::diff_within_y_le(p.j)).is_pos_inf();
    case Family::TauBd:
      return sup_along(swap_xy(s), SupFunctional::diff_within_y_le(p.i))
          .is_pos_inf();
  }
  return false;
}

// Least n with q outside basic(p, n). Total for these families, so the
// returned value is always a real separation witness.
inline Coord separates(Family f, Element p, Element q) {
  if (p == q) throw std::invalid_argument("separates: p and q must differ");
  auto n = exists_n_subset(f, p, complement(Region::point(q)));
  if (!n) throw std::logic_error("separates: no index excludes q");
  return *n;
}

// Verdict of the shift-continuity probe at p for x -> g*x (Left) or
// x -> x*g (Right), examined at target levels k = 1..K.
struct ContinuityVerdict {
  enum class Kind { ContinuousUpTo, Discontinuous, Unresolved };
  Kind kind = Kind::Unresolved;
  Family family = Family::Tau1;
  Side side = Side::Left;
  Element g{}, p{};
  int bound = 0;       // K for ContinuousUpTo/Unresolved, k* for Discontinuous
  // ContinuousUpTo: a witness source index n(k) for every k = 1..K.
  std::vector<std::pair<Coord, Coord>> witnesses;
  // Discontinuous: preimage of the complement of the failing target
  // neighborhood; every basic(p, n) meets it.
  Region certificate;
};

// For each k: either the least n with shift(basic(p,n)) inside
// basic(shift(p), k), or a certificate that no n works. The two cases are
// exact complements (the preimage of the complement is the complement of
// the preimage), which is re-checked at runtime before a Discontinuous
// verdict is returned.
inline ContinuityVerdict shift_continuity(Family f, Side side, Element g,
                                          Element p, int K) {
  if (K < 1) throw std::invalid_argument("shift_continuity: K must be >= 1");
  ContinuityVerdict v;
  v.family = f;
  v.side = side;
  v.g = g;
  v.p = p;
  Element q = side == Side::Left ? multiply(g, p) : multiply(p, g);
  for (int k = 1; k <= K; ++k) {
    Region target = basic(f, q, k);
    Region pre = side == Side::Left ? preimage_left(g, target)
                                    : preimage_right(target, g);
    if (auto n = exists_n_subset(f, p, pre)) {
      v.witnesses.emplace_back(k, *n);
      continue;
    }
    Region bad_target = complement(target);
    Region bad = side == Side::Left ? preimage_left(g, bad_target)
                                    : preimage_right(bad_target, g);
    if (!forall_n_meets(f, p, bad))
      throw std::logic_error(
          "shift_continuity: quantifier queries disagree");
    v.kind = ContinuityVerdict::Kind::Discontinuous;
    v.bound = k;
    v.certificate = bad;
    return v;
  }
  v.kind = ContinuityVerdict::Kind::ContinuousUpTo;
  v.bound = K;
  return v;
}

}  // namespace czlab
