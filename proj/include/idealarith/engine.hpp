#pragma once

#include <concepts>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idealarith/lengthset.hpp"

namespace idealarith::core {

struct bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A divisor oracle presents a reduced commutative monoid: a canonical key
// per element, an identity test, and the complete list of proper
// factorizations into two non-identity parts. Divisibility must be
// well-founded (bounded factorization); the engine detects violations and
// throws instead of looping.
template <typename O>
concept DivisorOracle = requires(const O& o, const typename O::Element& a) {
  typename O::Element;
  { o.key(a) } -> std::convertible_to<std::string>;
  { o.is_identity(a) } -> std::convertible_to<bool>;
  { o.proper_divisor_pairs(a) } -> std::convertible_to<std::vector<std::pair<typename O::Element, typename O::Element>>>;
};

struct EngineLimits {
  std::size_t max_states = 1000000;  // distinct elements visited
};

// Memoized length-set computation over a divisor oracle. Results are
// independent of the order in which the oracle lists divisor pairs.
template <DivisorOracle O>
class FactorEngine {
 public:
  explicit FactorEngine(const O& oracle, EngineLimits lim = {}) : o_(oracle), lim_(lim) {}

  const O& oracle() const { return o_; }

  LengthSet length_set(const typename O::Element& a) {
    std::set<std::string> stack;
    return lengths_rec(a, stack);
  }

  bool is_atom(const typename O::Element& a) const {
    return !o_.is_identity(a) && o_.proper_divisor_pairs(a).empty();
  }

  std::vector<typename O::Element> atoms_among(const std::vector<typename O::Element>& universe) const {
    std::vector<typename O::Element> out;
    for (const auto& a : universe)
      if (is_atom(a)) out.push_back(a);
    return out;
  }

 private:
  LengthSet lengths_rec(const typename O::Element& a, std::set<std::string>& stack) {
    if (o_.is_identity(a)) return LengthSet({0});
    std::string k = o_.key(a);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    if (!stack.insert(k).second)
      throw bound_exceeded("divisibility is not well-founded at element " + k);
    if (memo_.size() > lim_.max_states) throw bound_exceeded("state budget exceeded");

    auto pairs = o_.proper_divisor_pairs(a);
    LengthSet L;
    if (pairs.empty()) {
      L = LengthSet({1});
    } else {
      for (const auto& [b, c] : pairs) L = unite(L, sum(lengths_rec(b, stack), lengths_rec(c, stack)));
    }
    stack.erase(k);
    memo_.emplace(k, L);
    return L;
  }

  const O& o_;
  EngineLimits lim_;
  std::map<std::string, LengthSet> memo_;
};

// Union of all length sets over the window that contain k. A window in
// which no element realizes k yields the empty set with the flag raised.
template <DivisorOracle O>
struct UnionReport {
  LengthSet values;
  bool nothing_realizes_k = true;
  std::vector<std::string> contributing;  // element keys, in window order
};

template <DivisorOracle O>
UnionReport<O> union_of_lengths(FactorEngine<O>& eng, long long k,
                                const std::vector<typename O::Element>& window) {
  UnionReport<O> rep;
  for (const auto& a : window) {
    LengthSet L = eng.length_set(a);
    if (!L.contains(k)) continue;
    rep.nothing_realizes_k = false;
    rep.contributing.push_back(eng.oracle().key(a));
    rep.values = unite(rep.values, L);
  }
  return rep;
}

// Smallest elasticity strictly above 1 over the window.
struct GapScanResult {
  bool all_half_factorial = true;  // within the window
  Rational gap = Rational(1);
  std::string witness_key;
  LengthSet witness_lengths;
};

template <DivisorOracle O>
GapScanResult elasticity_gap_scan(FactorEngine<O>& eng, const std::vector<typename O::Element>& window) {
  GapScanResult res;
  for (const auto& a : window) {
    if (eng.oracle().is_identity(a)) continue;
    LengthSet L = eng.length_set(a);
    Rational r = rho_of(L);
    if (r <= 1) continue;
    if (res.all_half_factorial || r < res.gap) {
      res.all_half_factorial = false;
      res.gap = r;
      res.witness_key = eng.oracle().key(a);
      res.witness_lengths = L;
    }
  }
  return res;
}

}  // namespace idealarith::core
