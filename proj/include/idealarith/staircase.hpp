#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealarith/engine.hpp"
#include "idealarith/groebner.hpp"

namespace idealarith::ideals {

// Nonzero monomial ideal in two variables, held as its unique minimal
// generating set: an antichain of exponent pairs (r,s) for X1^r X2^s,
// sorted by decreasing r (hence strictly increasing s). The whole ring is
// the identity, generated by (0,0).
class Staircase {
 public:
  using Gen = std::pair<int, int>;

  static Staircase identity() { return from_generators({{0, 0}}); }
  // Minimalizes: generators divisible by another are dropped.
  static Staircase from_generators(std::vector<Gen> gens);

  const std::vector<Gen>& generators() const { return gens_; }
  bool is_identity() const { return gens_.size() == 1 && gens_[0] == Gen{0, 0}; }
  long long mdeg() const;            // least total degree of a member
  Gen box() const;                   // componentwise max over generators
  bool contains_monomial(int r, int s) const;
  bool contains(const Staircase& other) const;  // other as a subset of this

  Staircase pow(unsigned k) const;
  friend Staircase operator*(const Staircase& a, const Staircase& b);
  friend bool operator==(const Staircase& a, const Staircase& b) = default;
  friend auto operator<=>(const Staircase& a, const Staircase& b) = default;

  std::string key() const;  // "<X1^3; X1*X2^2; X2^3>", identity "<1>"

 private:
  std::vector<Gen> gens_;
};

Staircase parse_staircase(const std::string& text);

// Bridges to the polynomial side: the same ideal as a generator list for
// Groebner-backed checks, and the reverse direction for ideals whose
// listed generators are all single terms.
poly::Ideal to_ideal(const Staircase& s, const poly::GroebnerOptions& opt = {});
std::optional<Staircase> staircase_of(const poly::Ideal& I);

// All staircases with the exact given least generator degree whose
// generators fit the reference box and which contain the reference ideal.
// These are the only possible factors of the reference (any factor can be
// pruned to such a staircase without changing the product). Throws
// core::bound_exceeded past the enumeration budget.
std::vector<Staircase> staircases_containing(const Staircase& ref, long long mdeg_exact,
                                             std::size_t budget = 200000);

// The monoid of all nonzero monomial ideals in two variables under ideal
// multiplication, as a divisor oracle for the factorization engine.
struct StaircaseMonoid {
  using Element = Staircase;
  std::size_t candidate_budget = 200000;

  std::string key(const Element& a) const { return a.key(); }
  bool is_identity(const Element& a) const { return a.is_identity(); }
  std::vector<std::pair<Element, Element>> proper_divisor_pairs(const Element& a) const;
};

}  // namespace idealarith::ideals
