#pragma once

#include <cassert>
#include <cstdint>
#include <string>

namespace czlab {

using Coord = std::int64_t;

// One endpoint of an integer interval: -inf, a finite integer, or +inf.
// Total order: -inf < every finite value < +inf.
class Bound {
 public:
  constexpr Bound() : tag_(0), v_(0) {}

  static constexpr Bound neg_inf() { return Bound(-1, 0); }
  static constexpr Bound pos_inf() { return Bound(+1, 0); }
  static constexpr Bound of(Coord v) { return Bound(0, v); }

  constexpr bool is_neg_inf() const { return tag_ < 0; }
  constexpr bool is_pos_inf() const { return tag_ > 0; }
  constexpr bool is_finite() const { return tag_ == 0; }

  constexpr Coord value() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr bool operator==(Bound a, Bound b) {
    return a.tag_ == b.tag_ && (a.tag_ != 0 || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(Bound a, Bound b) { return !(a == b); }
  friend constexpr bool operator<(Bound a, Bound b) {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
    return a.tag_ == 0 && a.v_ < b.v_;
  }
  friend constexpr bool operator<=(Bound a, Bound b) { return !(b < a); }
  friend constexpr bool operator>(Bound a, Bound b) { return b < a; }
  friend constexpr bool operator>=(Bound a, Bound b) { return !(a < b); }

  // Sum of two bounds. Opposite infinities never meet here: every caller
  // adds lower bounds to lower bounds (or upper to upper) of nonempty
  // intervals, so the combination is asserted, not handled.
  friend constexpr Bound operator+(Bound a, Bound b) {
    if (a.is_finite() && b.is_finite()) return of(a.v_ + b.v_);
    if (!a.is_finite()) {
      assert(b.is_finite() || b.tag_ == a.tag_);
      return a;
    }
    return b;
  }
  friend constexpr Bound operator-(Bound a) {
    if (a.is_neg_inf()) return pos_inf();
    if (a.is_pos_inf()) return neg_inf();
    return of(-a.v_);
  }
  friend constexpr Bound operator-(Bound a, Bound b) { return a + (-b); }
  friend constexpr Bound operator+(Bound a, Coord k) { return a + of(k); }
  friend constexpr Bound operator-(Bound a, Coord k) { return a + of(-k); }

  friend constexpr Bound min(Bound a, Bound b) { return a < b ? a : b; }
  friend constexpr Bound max(Bound a, Bound b) { return a < b ? b : a; }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(v_);
  }

 private:
  constexpr Bound(int tag, Coord v) : tag_(tag), v_(v) {}
  int tag_;
  Coord v_;
};

// Integer interval [lo, hi] with possibly infinite endpoints.
// Empty iff lo > hi. The complement of x <= b is exactly x >= b+1, so
// all set algebra built on these intervals stays exact.
struct IntervalZ {
  Bound lo = Bound::pos_inf();
  Bound hi = Bound::neg_inf();

  static constexpr IntervalZ all() {
    return {Bound::neg_inf(), Bound::pos_inf()};
  }
  static constexpr IntervalZ none() {
    return {Bound::pos_inf(), Bound::neg_inf()};
  }
  static constexpr IntervalZ of(Coord a, Coord b) {
    return {Bound::of(a), Bound::of(b)};
  }
  static constexpr IntervalZ at_least(Coord a) {
    return {Bound::of(a), Bound::pos_inf()};
  }
  static constexpr IntervalZ at_most(Coord b) {
    return {Bound::neg_inf(), Bound::of(b)};
  }
  static constexpr IntervalZ single(Coord v) {
    return {Bound::of(v), Bound::of(v)};
  }

  constexpr bool empty() const { return hi < lo; }
  constexpr bool is_all() const {
    return lo.is_neg_inf() && hi.is_pos_inf();
  }
  constexpr bool contains(Coord v) const {
    Bound b = Bound::of(v);
    return lo <= b && b <= hi;
  }
  constexpr bool contains(const IntervalZ& o) const {
    return o.empty() || (lo <= o.lo && o.hi <= hi);
  }

  friend constexpr IntervalZ intersect(IntervalZ a, IntervalZ b) {
    return {max(a.lo, b.lo), min(a.hi, b.hi)};
  }
  // Minkowski sum/difference; empty operands give empty results.
  friend constexpr IntervalZ operator+(IntervalZ a, IntervalZ b) {
    if (a.empty() || b.empty()) return none();
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend constexpr IntervalZ operator-(IntervalZ a, IntervalZ b) {
    if (a.empty() || b.empty()) return none();
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend constexpr IntervalZ operator-(IntervalZ a) {
    if (a.empty()) return none();
    return {-a.hi, -a.lo};
  }
  constexpr IntervalZ shifted(Coord k) const {
    if (empty()) return none();
    return {lo + k, hi + k};
  }

  // Nearest point of a nonempty interval to v; always finite for finite v.
  constexpr Coord clamp(Coord v) const {
    assert(!empty());
    Bound b = Bound::of(v);
    if (b < lo) return lo.value();
    if (hi < b) return hi.value();
    return v;
  }

  friend constexpr bool operator==(IntervalZ a, IntervalZ b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend constexpr bool operator!=(IntervalZ a, IntervalZ b) {
    return !(a == b);
  }

  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

}  // namespace czlab
