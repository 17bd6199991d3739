#pragma once

#include <string>

#include "czlab/interval.hpp"

namespace czlab {

// A point of the semigroup Z x Z under
//   (i1,j1)*(i2,j2) = (i1-j1+i2, j2)   if j1 <= i2
//                     (i1, j1-i2+j2)   if j1 >= i2.
// The two branch formulas agree when j1 = i2, so dispatching on j1 <= i2
// evaluates the shared tie value exactly once.
struct Element {
  Coord i = 0;
  Coord j = 0;

  friend constexpr bool operator==(Element a, Element b) {
    return a.i == b.i && a.j == b.j;
  }
  friend constexpr bool operator!=(Element a, Element b) { return !(a == b); }
  // Lexicographic order, used for sorted point listings.
  friend constexpr bool operator<(Element a, Element b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }

  std::string str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
};

constexpr Element multiply(Element a, Element b) {
  if (a.j <= b.i) return {a.i - a.j + b.i, b.j};
  return {a.i, a.j - b.i + b.j};
}

constexpr Element operator*(Element a, Element b) { return multiply(a, b); }

constexpr Element invert(Element a) { return {a.j, a.i}; }

constexpr bool is_idempotent(Element a) { return a.i == a.j; }

// diff is additive across products: diff(a*b) = diff(a) + diff(b).
constexpr Coord diff(Element a) { return a.i - a.j; }

// a*invert(a); always the idempotent (i,i).
constexpr Element phi(Element a) { return {a.i, a.i}; }

// invert(a)*a; always the idempotent (j,j).
constexpr Element psi(Element a) { return {a.j, a.j}; }

// Natural partial order: a <= b iff a = b*e for some idempotent e,
// equivalently a.i >= b.i and diff(a) = diff(b).
constexpr bool leq(Element a, Element b) {
  return a.i >= b.i && diff(a) == diff(b);
}

// Comparability: a and b sit on the same diagonal.
constexpr bool comparable(Element a, Element b) { return diff(a) == diff(b); }

// (i,m)*a*(n,j). Restricted to the principal down-set of (m,n) this is a
// bijection onto the down-set of (i,j), sending (m+k,n+k) to (i+k,j+k).
constexpr Element conjugate_map(Coord i, Coord j, Coord m, Coord n,
                                Element a) {
  return multiply(multiply(Element{i, m}, a), Element{n, j});
}

}  // namespace czlab
