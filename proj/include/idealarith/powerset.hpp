#pragma once

#include <string>
#include <utility>
#include <vector>

#include "idealarith/engine.hpp"
#include "idealarith/staircase.hpp"

namespace idealarith::power {

// Finite nonempty set of non-negative integers under set addition
// A + B = { a + b }. The reduced elements are those containing 0; they
// form a submonoid with identity {0}.
class FiniteSet {
 public:
  explicit FiniteSet(std::vector<long long> v);

  const std::vector<long long>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool contains(long long x) const;
  long long min() const { return v_.front(); }
  long long max() const { return v_.back(); }
  bool is_reduced() const { return v_.front() == 0; }

  friend FiniteSet operator+(const FiniteSet& a, const FiniteSet& b);
  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.v_ == b.v_; }

  std::string key() const;  // "{0,2,3}"

 private:
  std::vector<long long> v_;
};

FiniteSet parse_finite_set(const std::string& text);

// A = shift * {1} + reduced, with shift = min A. The singleton {1} is a
// cancellative prime, so lengths in the full monoid are the reduced
// lengths moved up by the shift.
struct PrimeDecomposition {
  long long shift;
  FiniteSet reduced;
};
PrimeDecomposition prime_decompose(const FiniteSet& A);

// Divisor oracle for the reduced power monoid. Summands of A are subsets
// of A containing 0 (b = b + 0 forces them inside A), paired so the two
// maxima add to max A; the oracle lists every such pair that sums back
// to A, each unordered pair once.
struct ReducedPowerMonoid {
  using Element = FiniteSet;
  long long max_element = 64;

  std::string key(const Element& a) const { return a.key(); }
  bool is_identity(const Element& a) const { return a.values() == std::vector<long long>{0}; }
  std::vector<std::pair<Element, Element>> proper_divisor_pairs(const Element& a) const;
};

// Length set of an arbitrary finite set in the full power monoid: the
// prime {1} splits off min A times and the reduced part is handed to the
// engine.
core::LengthSet power_lengths(core::FactorEngine<ReducedPowerMonoid>& eng, const FiniteSet& A);

// A = {m_1 < ... < m_l} maps to the monomial ideal generated by
// X1^{m_l - m_i} X2^{m_i}; a multiplicative, injective embedding of the
// power monoid into the staircase monoid. {0} lands on the identity.
ideals::Staircase to_monomial_ideal(const FiniteSet& A);

}  // namespace idealarith::power
