#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "idealarith/powerset.hpp"

using namespace idealarith::power;
using idealarith::core::bound_exceeded;
using idealarith::core::FactorEngine;
using idealarith::core::LengthSet;
using idealarith::ideals::parse_staircase;
using idealarith::ideals::Staircase;
using idealarith::ideals::to_ideal;

namespace {

// ---------------------------------------------------------------------
// Independent oracle: factorization lengths in the reduced power monoid
// by direct multiset-of-atoms search, no engine and no memoization.
// ---------------------------------------------------------------------

using Set = std::vector<long long>;  // sorted, 0 first

Set add_sets(const Set& a, const Set& b) {
  std::set<long long> acc;
  for (long long x : a)
    for (long long y : b) acc.insert(x + y);
  return Set(acc.begin(), acc.end());
}

bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// All reduced sets inside [0, top], as sorted vectors starting with 0.
std::vector<Set> reduced_universe(long long top) {
  std::vector<Set> out;
  for (unsigned long long mask = 0; mask < (1ULL << top); ++mask) {
    Set s{0};
    for (long long i = 0; i < top; ++i)
      if (mask & (1ULL << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

// Atom test by exhaustive splitting: both summands are subsets of A
// containing 0 (b = b + 0 lands in A), with maxima adding to max A.
bool oracle_is_atom(const Set& a) {
  if (a.size() == 1) return false;  // identity
  std::size_t n = a.size();
  for (unsigned long long mb = 1; mb < (1ULL << (n - 1)); ++mb) {
    Set b{0};
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (mb & (1ULL << i)) b.push_back(a[i + 1]);
    if (b.back() == a.back()) continue;
    for (unsigned long long mc = 1; mc < (1ULL << (n - 1)); ++mc) {
      Set c{0};
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (mc & (1ULL << i)) c.push_back(a[i + 1]);
      if (b.back() + c.back() != a.back()) continue;
      if (add_sets(b, c) == a) return false;
    }
  }
  return true;
}

void lengths_dfs(const Set& target, const std::vector<Set>& atoms, std::size_t from, const Set& partial,
                 long long parts, std::set<long long>& found) {
  if (partial == target) {
    found.insert(parts);
    return;
  }
  for (std::size_t i = from; i < atoms.size(); ++i) {
    Set next = add_sets(partial, atoms[i]);
    if (next.back() > target.back() || !subset_of(next, target)) continue;
    lengths_dfs(target, atoms, i, next, parts + 1, found);
  }
}

// Lengths by enumerating multisets of atoms whose sum is the target.
LengthSet oracle_lengths(const Set& a, const std::vector<Set>& atoms) {
  if (a.size() == 1) return LengthSet({0});
  std::set<long long> found;
  lengths_dfs(a, atoms, 0, Set{0}, 0, found);
  return LengthSet(Set(found.begin(), found.end()));
}

FiniteSet fs(std::vector<long long> v) { return FiniteSet(std::move(v)); }

}  // namespace

TEST_CASE("finite sets: construction, sumsets, parsing") {
  CHECK(fs({3, 1, 3}).values() == std::vector<long long>{1, 3});
  CHECK_THROWS_AS(fs({}), std::invalid_argument);
  CHECK_THROWS_AS(fs({-1, 2}), std::invalid_argument);
  CHECK(fs({0, 1}) + fs({0, 1}) == fs({0, 1, 2}));
  CHECK(fs({0}) + fs({2, 5, 9}) == fs({2, 5, 9}));
  CHECK(fs({0, 2}) + fs({0, 3}) == fs({0, 2, 3, 5}));
  CHECK(parse_finite_set("{0, 2, 3}") == fs({0, 2, 3}));
  CHECK(parse_finite_set("{7}").key() == "{7}");
  CHECK_THROWS_AS(parse_finite_set("{}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finite_set("0,1"), std::invalid_argument);
  CHECK(fs({0, 2, 3}).key() == "{0,2,3}");

  std::mt19937_64 rng(991);
  for (int iter = 0; iter < 200; ++iter) {
    auto rand_set = [&]() {
      std::vector<long long> v;
      std::size_t sz = 1 + rng() % 4;
      for (std::size_t i = 0; i < sz; ++i) v.push_back(static_cast<long long>(rng() % 12));
      return FiniteSet(v);
    };
    FiniteSet A = rand_set(), B = rand_set(), C = rand_set();
    CHECK((A + B).min() == A.min() + B.min());
    CHECK((A + B).max() == A.max() + B.max());
    CHECK((A + B).size() <= A.size() * B.size());
    CHECK(A + B == B + A);
    CHECK((A + B) + C == A + (B + C));
  }
}

TEST_CASE("prime decomposition splits off the minimum") {
  auto d = prime_decompose(fs({3, 5}));
  CHECK(d.shift == 3);
  CHECK(d.reduced == fs({0, 2}));
  d = prime_decompose(fs({0, 4}));
  CHECK(d.shift == 0);
  CHECK(d.reduced == fs({0, 4}));

  std::mt19937_64 rng(992);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<long long> v;
    std::size_t sz = 1 + rng() % 5;
    for (std::size_t i = 0; i < sz; ++i) v.push_back(static_cast<long long>(rng() % 30));
    FiniteSet A(v);
    auto dc = prime_decompose(A);
    CHECK(dc.reduced.is_reduced());
    // recomposition: shift * {1} + reduced
    FiniteSet back = dc.reduced;
    for (long long i = 0; i < dc.shift; ++i) back = back + fs({1});
    CHECK(back == A);
    CHECK((dc.shift >= 1) == (A.min() >= 1));  // {1} divides A
  }
}

TEST_CASE("reduced power monoid lengths match the atom multiset oracle") {
  ReducedPowerMonoid mon;
  FactorEngine<ReducedPowerMonoid> eng(mon);

  auto universe = reduced_universe(6);
  std::vector<Set> atoms;
  for (const auto& s : universe)
    if (oracle_is_atom(s)) atoms.push_back(s);

  for (const auto& s : universe) {
    LengthSet expect = oracle_lengths(s, atoms);
    CHECK(eng.length_set(FiniteSet(s)) == expect);
    CHECK(eng.is_atom(FiniteSet(s)) == oracle_is_atom(s));
  }

  CHECK(eng.is_atom(fs({0, 1})));
  CHECK(eng.is_atom(fs({0, 5})));
  CHECK(eng.is_atom(fs({0, 1, 3})));
  CHECK(eng.is_atom(fs({0, 2, 3})));
  CHECK(!eng.is_atom(fs({0, 1, 2})));
  CHECK_THROWS_AS(mon.proper_divisor_pairs(fs({1, 2})), std::invalid_argument);

  ReducedPowerMonoid small{.max_element = 4};
  CHECK_THROWS_AS(small.proper_divisor_pairs(fs({0, 5})), bound_exceeded);
}

TEST_CASE("intervals have every length from 2 to their top") {
  ReducedPowerMonoid mon;
  FactorEngine<ReducedPowerMonoid> eng(mon);
  for (long long n = 2; n <= 8; ++n) {
    std::vector<long long> v;
    for (long long i = 0; i <= n; ++i) v.push_back(i);
    CHECK(eng.length_set(FiniteSet(v)) == LengthSet::interval(2, n));
  }
}

TEST_CASE("no absorbing summand: A + B = A forces B = {0}") {
  auto universe = reduced_universe(8);
  for (const auto& a : universe)
    for (const auto& b : universe) {
      if (b.size() == 1) continue;
      CHECK(add_sets(a, b) != a);
    }
}

TEST_CASE("full power monoid lengths shift by the prime multiplicity") {
  ReducedPowerMonoid mon;
  FactorEngine<ReducedPowerMonoid> eng(mon);
  CHECK(power_lengths(eng, fs({3, 5})) == LengthSet({4}));
  CHECK(power_lengths(eng, fs({2, 3})) == LengthSet({3}));
  CHECK(power_lengths(eng, fs({0, 4})) == LengthSet({1}));
  CHECK(power_lengths(eng, fs({7})) == LengthSet({7}));
  CHECK(power_lengths(eng, fs({0})) == LengthSet({0}));
  CHECK(power_lengths(eng, fs({1, 2, 3})) == LengthSet({3}));  // {1} + {0,1,2}
}

TEST_CASE("staircase basics: normalization, product, identity") {
  auto S = Staircase::from_generators({{1, 2}, {3, 0}, {2, 2}, {0, 3}});
  CHECK(S.generators() == std::vector<Staircase::Gen>{{3, 0}, {1, 2}, {0, 3}});  // (2,2) dominated
  CHECK(S.mdeg() == 3);
  CHECK(S.box() == Staircase::Gen{3, 3});
  CHECK(S.contains_monomial(5, 1));
  CHECK(!S.contains_monomial(2, 1));
  CHECK(Staircase::identity().is_identity());
  CHECK(S * Staircase::identity() == S);
  auto m = Staircase::from_generators({{1, 0}, {0, 1}});
  CHECK(m.pow(3) == Staircase::from_generators({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  CHECK(m.pow(0).is_identity());
  CHECK(parse_staircase("<X1^3; X1*X2^2; X2^3>").generators() ==
        std::vector<Staircase::Gen>{{3, 0}, {1, 2}, {0, 3}});
  CHECK(parse_staircase(S.key()) == S);
  CHECK(Staircase::identity().key() == "<1>");
  CHECK_THROWS_AS(parse_staircase("<X1 + X2>"), std::invalid_argument);
  CHECK_THROWS_AS(Staircase::from_generators({}), std::invalid_argument);
}

TEST_CASE("monomial ideal embedding: pins, multiplicativity, injectivity") {
  CHECK(to_monomial_ideal(fs({0, 2, 3})) == parse_staircase("<X1^3; X1*X2^2; X2^3>"));
  CHECK(to_monomial_ideal(fs({0})).is_identity());
  CHECK(to_monomial_ideal(fs({0, 1})) == parse_staircase("<X1; X2>"));

  auto universe = reduced_universe(5);
  for (const auto& a : universe)
    for (const auto& b : universe) {
      FiniteSet A(a), B(b);
      CHECK(to_monomial_ideal(A + B) == to_monomial_ideal(A) * to_monomial_ideal(B));
    }

  std::set<std::string> keys;
  for (const auto& a : reduced_universe(8)) keys.insert(to_monomial_ideal(FiniteSet(a)).key());
  CHECK(keys.size() == reduced_universe(8).size());
}

TEST_CASE("staircase product agrees with basis-level ideal product") {
  // The combinatorial product is cross-checked against the polynomial
  // ideal product through reduced bases, on a sample of embeddings.
  std::mt19937_64 rng(993);
  auto universe = reduced_universe(5);
  for (int iter = 0; iter < 20; ++iter) {
    const auto& a = universe[rng() % universe.size()];
    const auto& b = universe[rng() % universe.size()];
    Staircase sa = to_monomial_ideal(FiniteSet(a));
    Staircase sb = to_monomial_ideal(FiniteSet(b));
    Staircase sc = sa * sb;
    if (sa.is_identity() || sb.is_identity()) continue;
    auto prod = product(to_ideal(sa), to_ideal(sb));
    auto back = idealarith::ideals::staircase_of(prod);
    REQUIRE(back.has_value());
    CHECK(*back == sc);
  }
}
