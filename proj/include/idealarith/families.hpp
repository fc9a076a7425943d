#pragma once

#include <string>
#include <vector>

#include "idealarith/graded.hpp"
#include "idealarith/groebner.hpp"

namespace idealarith::ideals {

// The named two-variable ideal families of the experiment suite, written
// with the same literals the CLI accepts:
//   a[k]    = <X1, X2>^k, expanded as all monomials of degree k
//   b[i]    = <X1^i, X2^i>
//   c[m]    = <X1^m, X1^(m-1)*X2> plus every X1^(m-1-j)*X2^(j+1) (m odd)
//             resp. X1^(m-j)*X2^j (m even) for even j in [2, m-1] resp.
//             [2, m]; the staircase that skips every other step
//   cprime  = <X1^3+X2^3, X1^2*X2, X1*X2^2>
struct IdealFamily {
  enum class Kind { A, B, C, CPrime };
  Kind kind = Kind::A;
  int sub = 1;  // subscript; ignored for cprime

  friend bool operator==(const IdealFamily&, const IdealFamily&) = default;
};

IdealFamily parse_family(const std::string& text);  // "a[3]", "b[2]", "c[4]", "cprime"
std::string family_text(const IdealFamily& f);

// Exact generator lists; validates the subscript (a, b: >= 1; c: >= 2).
std::vector<poly::Polynomial> family_generators(const IdealFamily& f);
poly::Ideal family_expand(const IdealFamily& f, poly::GroebnerOptions opt = {});
poly::Ideal family_expand(const std::string& text, poly::GroebnerOptions opt = {});

// One verified equation between ideal expressions: machine-checkable
// transcript with both reduced bases and their hashes. `expected` lets a
// suite carry negative controls; ok() folds the comparison.
struct IdentityCheck {
  std::string name;
  bool holds = false;
  bool expected = true;
  std::string lhs_basis, rhs_basis;
  std::string lhs_hash, rhs_hash;

  bool ok() const { return holds == expected; }
};

IdentityCheck verify_identity(std::string name, const poly::Ideal& lhs, const poly::Ideal& rhs,
                              bool expected = true);

// The product-identity suite on a parameter grid:
//   a[1]^k == a[k]                      for k in [1, grid]
//   a[k] * b[l] == a[k+l]               for k, l in [1, grid], k >= l-1
//   a[1] * c[m] == a[m+1]               for m in [2, grid]
//   b[2] * cprime == a[5]
//   <X1^2; X1*X2+X2^2> * <X1^2; X1*X2-X2^2> == c[4]
// plus two negative controls that must fail: a[1]*b[2] == a[2], and the
// side-condition breaker a[1]*b[3] == a[4].
std::vector<IdentityCheck> identity_suite(int grid = 8);

// Non-cancellation certificate: a[1]*b[2] and a[1]*a[2] both equal a[3]
// while b[2] != a[2], so equal products do not force equal factors.
struct NonCancellationWitness {
  IdentityCheck left_product;   // a[1]*b[2] == a[3]
  IdentityCheck right_product;  // a[1]*a[2] == a[3]
  bool factors_distinct = false;
  std::string left_factor_hash, right_factor_hash;
  bool pass = false;
};
NonCancellationWitness not_transfer_krull_witness();

// One element with arbitrarily many distinct divisors: for each alpha,
// a[1] * <X1^2 + alpha*X2^2; X1*X2> == a[3], and the middle factors are
// pairwise distinct. Rejects zero or repeated alphas.
struct InfiniteDivisorFamily {
  std::vector<Rational> alphas;
  std::vector<IdentityCheck> products;
  std::vector<std::string> factor_hashes;
  bool pairwise_distinct = false;
  bool pass = false;
};
InfiniteDivisorFamily non_ff_witness(const std::vector<Rational>& alphas);

// Two factorizations of a[2i+2] with lengths 2 and 2i+1, tied together by
// the chain a[2i]*b[2] == a[2i-1]*a[3] == a[2i+2] == a[1]*c[2i+1]. With
// a[1], b[2], c[2i+1] certified atoms this puts both 2i+1 and 2i+2 in the
// union of all length sets containing 2.
struct PairedFactorizations {
  int i = 0;
  IdentityCheck short_form;   // a[1] * c[2i+1] == a[2i+2], length 2
  IdentityCheck long_form;    // a[1]^(2i) * b[2] == a[2i+2], length 2i+1
  IdentityCheck full_power;   // a[1]^(2i+2) == a[2i+2], length 2i+2
  IdentityCheck chain_left;   // a[2i] * b[2] == a[2i+2]
  IdentityCheck chain_mid;    // a[2i-1] * a[3] == a[2i+2]
  std::vector<long long> shared_lengths;  // {2, 2i+1, 2i+2}
  bool pass = false;
};
PairedFactorizations u2_witnesses(int i);

}  // namespace idealarith::ideals
