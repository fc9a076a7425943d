#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idealarith/rational.hpp"

namespace idealarith::core {

// Finite set of factorization lengths: sorted, duplicate-free.
class LengthSet {
 public:
  LengthSet() = default;
  explicit LengthSet(std::vector<long long> v);
  static LengthSet interval(long long lo, long long hi);

  const std::vector<long long>& values() const { return v_; }
  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }
  bool contains(long long x) const;
  long long min() const;
  long long max() const;
  bool is_interval() const;

  LengthSet shifted(long long k) const;
  friend LengthSet sum(const LengthSet& a, const LengthSet& b);  // Minkowski sum
  friend LengthSet unite(const LengthSet& a, const LengthSet& b);

  friend bool operator==(const LengthSet& a, const LengthSet& b) { return a.v_ == b.v_; }

 private:
  std::vector<long long> v_;
};

std::string to_string(const LengthSet& L);
LengthSet parse_length_set(const std::string& text);  // "{2,3,7}" or "[2,9]"

// Successive gaps of a nonempty set.
std::vector<long long> delta_of(const LengthSet& L);

// Elasticity max/min as an exact rational; {0} maps to 1 by convention.
// Any other set containing 0 or nonpositive entries is rejected.
Rational rho_of(const LengthSet& L);

struct DeltaRho {
  std::vector<long long> delta;
  Rational rho;
};
DeltaRho delta_and_rho(const LengthSet& L);

// One decomposition L = y + (head | core | tail) with
//   core = (period + d Z) cap [0, max core], starting at 0,
//   head inside [-M,-1], tail inside max core + [1,M],
//   and every element of L - y inside period + d Z.
// period always contains 0 and d; {0,d} alone is the plain
// almost-arithmetic-progression case.
struct ProgressionDecomposition {
  long long y = 0;
  long long d = 1;
  long long M = 0;
  std::vector<long long> period;        // subset of [0,d], with 0 and d
  std::vector<long long> head;          // offsets < 0
  std::vector<long long> core;          // offsets from 0 to max core
  std::vector<long long> tail;          // offsets > max core
  LengthSet reconstruct() const;        // y + (head | core | tail)
};

struct ProgressionReport {
  std::optional<ProgressionDecomposition> ap;    // period restricted to {0,d}
  std::optional<ProgressionDecomposition> aamp;  // arbitrary period allowed
  long long bound_M = 0;       // the M cap the search ran with
  long long aamp_period_d_cap = 0;  // period subsets were enumerated for d up to this
};

// Search order fixed for determinism and minimality: M ascending, then d,
// then period size, then period lexicographic, then base point y.
// Period subsets are only enumerated for d <= aamp_d_cap (the AP search is
// unbounded in d up to the span of L). Every returned decomposition is
// re-assembled and compared against L before being reported.
ProgressionReport recognize_progressions(const LengthSet& L, long long M_cap = 8, long long aamp_d_cap = 12);

// Elasticity-target planner: q > 1 written as r/s with r > s >= 2
// (integers use (2q, 2)); a witness length set with minimum 2 and maximum
// r - s + 2 is shifted by s - 2, which pins the elasticity to exactly q.
struct ElasticityPlan {
  bool ok = false;
  std::string rejection;
  long long r = 0, s = 0;
  long long shift = 0;                // s - 2 copies of the prime are multiplied on
  long long expected_witness_max = 0; // r - s + 2
  LengthSet predicted;                // shift + witness lengths
  Rational rho;                       // rho(predicted), equals q on success
};
ElasticityPlan full_elasticity_plan(const Rational& q, const LengthSet& witness_lengths);

}  // namespace idealarith::core
