#include "idealarith/powerset.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace idealarith::power {

FiniteSet::FiniteSet(std::vector<long long> v) : v_(std::move(v)) {
  if (v_.empty()) throw std::invalid_argument("finite set wants at least one element");
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  if (v_.front() < 0) throw std::invalid_argument("finite set wants non-negative elements");
}

bool FiniteSet::contains(long long x) const { return std::binary_search(v_.begin(), v_.end(), x); }

FiniteSet operator+(const FiniteSet& a, const FiniteSet& b) {
  std::set<long long> acc;
  for (long long x : a.v_)
    for (long long y : b.v_) acc.insert(x + y);
  return FiniteSet(std::vector<long long>(acc.begin(), acc.end()));
}

std::string FiniteSet::key() const {
  std::string s = "{";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "}";
}

FiniteSet parse_finite_set(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("bad finite set literal: " + text);
  std::string body = t.substr(1, t.size() - 2);
  std::vector<long long> vals;
  std::size_t p = 0;
  while (p < body.size()) {
    std::size_t q = body.find(',', p);
    std::string piece = body.substr(p, q == std::string::npos ? std::string::npos : q - p);
    if (piece.empty()) throw std::invalid_argument("bad finite set literal: " + text);
    vals.push_back(std::stoll(piece));
    if (q == std::string::npos) break;
    p = q + 1;
  }
  return FiniteSet(std::move(vals));
}

PrimeDecomposition prime_decompose(const FiniteSet& A) {
  long long k = A.min();
  std::vector<long long> shifted;
  for (long long x : A.values()) shifted.push_back(x - k);
  return PrimeDecomposition{k, FiniteSet(std::move(shifted))};
}

std::vector<std::pair<FiniteSet, FiniteSet>> ReducedPowerMonoid::proper_divisor_pairs(const Element& a) const {
  if (!a.is_reduced()) throw std::invalid_argument("reduced power monoid element wants 0: " + a.key());
  if (a.max() > max_element)
    throw core::bound_exceeded("power monoid element exceeds the configured bound: " + a.key());
  std::vector<std::pair<Element, Element>> out;
  const auto& v = a.values();
  std::size_t n = v.size();
  if (n == 1) return out;  // the identity {0}
  if (n > 24) throw core::bound_exceeded("power monoid divisor enumeration is exponential in |A|; |A| = " +
                                         std::to_string(n));
  long long maxA = v.back();

  // Subsets of A containing 0, indexed by a mask over v[1..n-1].
  for (unsigned long long mask = 1; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<long long> b{0};
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (mask & (1ULL << i)) b.push_back(v[i + 1]);
    long long maxB = b.back();
    if (maxB == maxA) continue;  // partner would be {0}
    long long mc = maxA - maxB;
    if (!a.contains(mc)) continue;

    // The partner lives inside the values compatible with B.
    std::vector<long long> viable;
    for (long long c : v) {
      if (c > mc) break;
      bool ok = true;
      for (long long x : b)
        if (!a.contains(x + c)) {
          ok = false;
          break;
        }
      if (ok) viable.push_back(c);
    }
    if (viable.front() != 0 || viable.back() != mc) continue;

    // Free choices strictly between the forced endpoints 0 and mc.
    std::vector<long long> middle(viable.begin() + 1, viable.end() - 1);
    std::size_t m = middle.size();
    for (unsigned long long cmask = 0; cmask < (1ULL << m); ++cmask) {
      std::vector<long long> c{0};
      for (std::size_t i = 0; i < m; ++i)
        if (cmask & (1ULL << i)) c.push_back(middle[i]);
      c.push_back(mc);
      if (b > c) continue;  // each unordered pair once
      // Containment holds by construction; equality needs covering.
      std::set<long long> sums;
      for (long long x : b)
        for (long long y : c) sums.insert(x + y);
      if (std::vector<long long>(sums.begin(), sums.end()) == v)
        out.push_back({FiniteSet(b), FiniteSet(c)});
    }
  }
  return out;
}

core::LengthSet power_lengths(core::FactorEngine<ReducedPowerMonoid>& eng, const FiniteSet& A) {
  auto dec = prime_decompose(A);
  return eng.length_set(dec.reduced).shifted(dec.shift);
}

ideals::Staircase to_monomial_ideal(const FiniteSet& A) {
  std::vector<ideals::Staircase::Gen> gens;
  long long top = A.max();
  for (long long m : A.values()) gens.push_back({static_cast<int>(top - m), static_cast<int>(m)});
  return ideals::Staircase::from_generators(std::move(gens));
}

}  // namespace idealarith::power
