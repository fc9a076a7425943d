#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idealarith/engine.hpp"

namespace idealarith::zs {

// Finitely generated abelian group as a list of cyclic orders; order 0
// encodes an unbounded integer component. Elements are residue vectors,
// componentwise arithmetic.
struct GroupSpec {
  std::vector<long long> orders;  // each >= 2, or 0

  std::size_t rank() const { return orders.size(); }
  std::vector<long long> normalize(std::vector<long long> e) const;
  std::vector<long long> add(const std::vector<long long>& a, const std::vector<long long>& b) const;
  bool is_zero(const std::vector<long long>& e) const;
  std::string element_text(const std::vector<long long>& e) const;  // "(1,0,-2)"
};

GroupSpec parse_group(const std::string& text);  // "C2xC3xZ"

// Multiset of group elements with its sum tracked; the monoid operation
// is multiset union. The empty sequence is the identity.
class ZeroSumSequence {
 public:
  explicit ZeroSumSequence(const GroupSpec& g) : g_(g), sum_(g.rank(), 0) {}
  ZeroSumSequence(const GroupSpec& g, const std::vector<std::pair<std::vector<long long>, long long>>& items);

  const GroupSpec& group() const { return g_; }
  const std::map<std::vector<long long>, long long>& multiplicities() const { return mult_; }
  long long length() const;                       // |S|, multiplicities counted
  const std::vector<long long>& sum() const { return sum_; }
  bool is_zero_sum() const { return g_.is_zero(sum_); }
  bool empty() const { return mult_.empty(); }

  void add(const std::vector<long long>& e, long long times = 1);
  friend ZeroSumSequence operator+(const ZeroSumSequence& a, const ZeroSumSequence& b);
  friend bool operator==(const ZeroSumSequence& a, const ZeroSumSequence& b) { return a.mult_ == b.mult_; }

  std::string key() const;  // "[(1)^3, (2)]", elements ascending

 private:
  GroupSpec g_;
  std::map<std::vector<long long>, long long> mult_;
  std::vector<long long> sum_;
};

// Literal "[(1,0,2)^3, (0,1,-1)^2]"; bare integers stand for rank-one
// elements; "[]" is the empty sequence.
ZeroSumSequence parse_sequence(const GroupSpec& g, const std::string& text);

// True iff no proper nonempty sub-multiset sums to zero. Throws on a
// nonzero total sum or an empty sequence.
bool minimal_zero_sum(const ZeroSumSequence& s, std::size_t budget = 1u << 22);

/// Divisor oracle for the monoid of zero-sum sequences over the group:
// divisor pairs are the zero-sum sub-multisets paired with their
// complements (the complement of a zero-sum part is zero-sum again, so
// the monoid is divisor-closed).
struct BZeroSum {
  using Element = ZeroSumSequence;
  long long max_length = 16;
  std::size_t subset_budget = 1u << 22;

  std::string key(const Element& a) const { return a.key(); }
  bool is_identity(const Element& a) const { return a.empty(); }
  std::vector<std::pair<Element, Element>> proper_divisor_pairs(const Element& a) const;
};

core::LengthSet lengths_over_group(core::FactorEngine<BZeroSum>& eng, const ZeroSumSequence& s);

// Bounded search for an integer sequence whose length set is exactly L.
// Candidates run over multiplicity vectors on [-support_radius,
// support_radius] minus zero, in (total length, lexicographic) order;
// the first hit is returned, so reruns reproduce the same witness.
struct RealizeWindow {
  long long support_radius = 3;
  long long max_mult = 4;
  long long max_total = 12;
};

struct RealizeResult {
  bool found = false;
  ZeroSumSequence seq;
  std::string note;  // rejection or exhaustion message
};

RealizeResult realize_length_set_over_Z(const core::LengthSet& L, const RealizeWindow& w = {});

}  // namespace idealarith::zs
