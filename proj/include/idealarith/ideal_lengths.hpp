#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "idealarith/certify.hpp"
#include "idealarith/engine.hpp"
#include "idealarith/families.hpp"
#include "idealarith/lengthset.hpp"
#include "idealarith/staircase.hpp"

namespace idealarith::ideals {

// Length sets over the monoid of nonzero ideals are certified, never
// enumerated: a[3] alone has infinitely many divisors, so there is no
// window to sweep. Lower bounds are explicit factorizations into
// certified atoms, re-multiplied; upper bounds come from the least-degree
// argument (the input's radical is <X1,X2>, every factor therefore has
// least degree >= 1, and least degree is additive on products).

struct AtomUse {
  std::string family;  // "a[1]", "b[2]", "c[5]", "cprime"
  Verdict verdict = Verdict::Inconclusive;
  std::string hash;  // basis hash of the expanded ideal
};

struct LengthWitness {
  long long length = 0;
  std::vector<std::string> factors;  // family literals
  bool reverified = false;           // product of expansions equals the target
};

struct IntervalLengthsReport {
  int k = 0;
  core::LengthSet lengths;  // [2, k] when everything certifies
  std::vector<LengthWitness> witnesses;
  std::vector<AtomUse> atoms;  // distinct atoms used, each must certify
  bool upper_bound_certified = false;
  std::string upper_bound_note;
  bool all_pass = false;
  std::string failure;  // names the missing certificate when !all_pass
};

// The length set of a[k] = <X1,X2>^k: every length in [2,k] gets an
// explicit atom factorization (including the special route
// a[5] = b[2]*cprime), and the least-degree bound caps lengths at k.
IntervalLengthsReport theorem51_lengths(int k, const CertifyOptions& opt = {});

// Best-effort construction of an ideal with a prescribed length set.
// Interval targets [a,b] are realized as <X1>^(a-2) * a[b-a+2]: the
// principal prime <X1> shifts lengths exactly (it is a prime element,
// multiplication by it is cancellative, and the base is not inside it),
// so the base interval [2, b-a+2] moves to [a, b]. Other shapes are
// reported "not found" with the reason in the log.
struct LengthSearchResult {
  bool found = false;
  std::string construction;  // "<X1>^t * a[k]" or "a[k]"
  int prime_shift = 0;
  std::string base_family;
  core::LengthSet lengths;  // certified lengths of the construction
  IntervalLengthsReport base;
  std::string ideal_basis;
  std::string ideal_hash;
  bool shift_base_checked = false;       // base has an element outside <X1>
  bool lower_bounds_reverified = false;  // shifted factorizations re-multiplied
  std::string log;
};

LengthSearchResult search_length_set(const core::LengthSet& L, int k_cap = 8,
                                     const CertifyOptions& opt = {});

// Elasticity-target constructor over the ideal monoid: q = r/s lands on
// the ideal <X1>^(s-2) * a[r-s+2], whose certified length set has
// elasticity exactly q.
struct IdealElasticityWitness {
  bool ok = false;
  std::string rejection;
  core::ElasticityPlan plan;
  std::string construction;
  IntervalLengthsReport base;
  core::LengthSet lengths;
  Rational rho;
};

IdealElasticityWitness elastic_witness(const Rational& q, const CertifyOptions& opt = {});

// Lengths relative to the monoid of monomial ideals only. This is a
// different quantity from ideal-monoid lengths (the monomial monoid is
// not divisor-closed in the ideal monoid: a[5] = b[2]*cprime uses a
// non-monomial route), and the two are never conflated.
core::LengthSet staircase_lengths(const Staircase& s, int degree_cap = 24,
                                  std::size_t budget = 200000);

}  // namespace idealarith::ideals
