#pragma once

#include <cstdint>

namespace dbmend {

// The three truth values. The enumerator order is the truth order
// f < both < t, so conjunction and disjunction are min and max. `both`
// is the contradictory value (an atom believed true and false at once);
// in the knowledge order it sits above t and f, which are incomparable.
enum class Three : std::uint8_t { f = 0, both = 1, t = 2 };

constexpr Three three_of(bool b) { return b ? Three::t : Three::f; }

// Order reversal in the truth order: swaps t and f, fixes both.
constexpr Three neg3(Three x) {
  return static_cast<Three>(2 - static_cast<std::uint8_t>(x));
}

// Meet in the truth order.
constexpr Three and3(Three x, Three y) { return x < y ? x : y; }

// Join in the truth order.
constexpr Three or3(Three x, Three y) { return x < y ? y : x; }

// Least upper bound in the knowledge order: agreement is kept,
// disagreement becomes `both`, and `both` absorbs.
constexpr Three oplus(Three x, Three y) { return x == y ? x : Three::both; }

// Material implication.
constexpr Three implies3(Three x, Three y) { return or3(neg3(x), y); }

// The designated values, those counting as satisfaction: t and both.
constexpr bool designated(Three x) { return x != Three::f; }

// x <= y in the truth order f < both < t.
constexpr bool leq_truth(Three x, Three y) { return x <= y; }

// x <= y in the knowledge order (both on top, t and f incomparable).
constexpr bool leq_know(Three x, Three y) { return x == y || y == Three::both; }

constexpr char three_to_char(Three x) {
  switch (x) {
    case Three::f:
      return 'f';
    case Three::t:
      return 't';
    case Three::both:
      return '#';
  }
  return '?';
}

}  // namespace dbmend
