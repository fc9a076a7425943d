#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idealarith::core {

// Additive monoid N^2 union {(0,0)}: both coordinates positive, or the
// identity. Atoms are exactly the elements with a coordinate equal to 1.
struct PlaneElement {
  long long x = 0, y = 0;
  friend bool operator==(const PlaneElement&, const PlaneElement&) = default;
};

struct PlaneMonoid {
  using Element = PlaneElement;

  static Element make(long long x, long long y) {
    if (x < 0 || y < 0 || (x == 0) != (y == 0))
      throw std::invalid_argument("plane element wants both coordinates positive, or (0,0)");
    return Element{x, y};
  }

  std::string key(const Element& a) const { return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")"; }
  bool is_identity(const Element& a) const { return a.x == 0 && a.y == 0; }

  static Element add(const Element& a, const Element& b) { return Element{a.x + b.x, a.y + b.y}; }

  std::vector<std::pair<Element, Element>> proper_divisor_pairs(const Element& a) const {
    std::vector<std::pair<Element, Element>> out;
    for (long long u = 1; u + 1 <= a.x; ++u)
      for (long long v = 1; v + 1 <= a.y; ++v) out.push_back({Element{u, v}, Element{a.x - u, a.y - v}});
    return out;
  }
};

// Free abelian monoid N^2 under componentwise addition; factorial, so
// every length set is a singleton. Control monoid for half-factoriality.
struct FreePlaneMonoid {
  using Element = PlaneElement;

  static Element make(long long x, long long y) {
    if (x < 0 || y < 0) throw std::invalid_argument("negative coordinate");
    return Element{x, y};
  }

  std::string key(const Element& a) const { return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")"; }
  bool is_identity(const Element& a) const { return a.x == 0 && a.y == 0; }

  std::vector<std::pair<Element, Element>> proper_divisor_pairs(const Element& a) const {
    std::vector<std::pair<Element, Element>> out;
    for (long long u = 0; u <= a.x; ++u)
      for (long long v = 0; v <= a.y; ++v) {
        if (u == 0 && v == 0) continue;
        if (u == a.x && v == a.y) continue;
        out.push_back({Element{u, v}, Element{a.x - u, a.y - v}});
      }
    return out;
  }
};

}  // namespace idealarith::core
