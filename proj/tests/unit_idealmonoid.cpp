#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "idealarith/certify.hpp"
#include "idealarith/families.hpp"
#include "idealarith/ideal_lengths.hpp"
#include "idealarith/staircase.hpp"

using namespace idealarith::ideals;
using idealarith::Rational;
using idealarith::rat;
using idealarith::core::LengthSet;
using idealarith::poly::Ideal;
using idealarith::poly::parse_ideal_literal;
using idealarith::poly::Polynomial;

namespace {

// ---------------------------------------------------------------------
// Independent multiplication oracle: staircase arithmetic multiplies
// monomial ideals by exponent-pair sums plus antichain minimalization,
// with no Groebner machinery involved. Family products verified through
// it cannot share a bug with the basis-driven product.
// ---------------------------------------------------------------------

Staircase st_of(const std::string& family) {
  auto s = staircase_of(family_expand(family));
  REQUIRE(s.has_value());
  return *s;
}

bool products_agree(const std::string& fa, const std::string& fb) {
  Staircase viaSt = st_of(fa) * st_of(fb);
  Ideal viaGb = product(family_expand(fa), family_expand(fb));
  return equal(to_ideal(viaSt), viaGb);
}

Ideal lit(const std::string& text) { return Ideal(parse_ideal_literal(text)); }

long long fact_count(const IntervalLengthsReport& rep, long long len) {
  for (const LengthWitness& w : rep.witnesses)
    if (w.length == len) return static_cast<long long>(w.factors.size());
  return -1;
}

const LengthWitness* witness_for(const IntervalLengthsReport& rep, long long len) {
  for (const LengthWitness& w : rep.witnesses)
    if (w.length == len) return &w;
  return nullptr;
}

}  // namespace

TEST_CASE("family literals expand to the pinned generator sets") {
  CHECK(family_text(parse_family(" a[3] ")) == "a[3]");
  CHECK(family_text(parse_family("cprime")) == "cprime");
  CHECK(parse_family("b[2]").kind == IdealFamily::Kind::B);
  CHECK(parse_family("c[11]").sub == 11);
  CHECK_THROWS_AS((void)parse_family("d[3]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_family("a[x]"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_family("a3"), std::invalid_argument);
  CHECK_THROWS_AS((void)family_generators({IdealFamily::Kind::A, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)family_generators({IdealFamily::Kind::B, -1}), std::invalid_argument);
  CHECK_THROWS_AS((void)family_generators({IdealFamily::Kind::C, 1}), std::invalid_argument);

  CHECK(equal(family_expand("a[1]"), lit("<X1; X2>")));
  CHECK(equal(family_expand("a[3]"), lit("<X1^3; X1^2*X2; X1*X2^2; X2^3>")));
  CHECK(equal(family_expand("b[4]"), lit("<X1^4; X2^4>")));
  // the even-j selections: odd subscripts take (m-1-j, j+1), even take (m-j, j)
  CHECK(equal(family_expand("c[3]"), lit("<X1^3; X1^2*X2; X2^3>")));
  CHECK(equal(family_expand("c[4]"), lit("<X1^4; X1^3*X2; X1^2*X2^2; X2^4>")));
  CHECK(equal(family_expand("c[5]"), lit("<X1^5; X1^4*X2; X1^2*X2^3; X2^5>")));
  CHECK(equal(family_expand("c[6]"), lit("<X1^6; X1^5*X2; X1^4*X2^2; X1^2*X2^4; X2^6>")));
  CHECK(equal(family_expand("c[7]"), lit("<X1^7; X1^6*X2; X1^4*X2^3; X1^2*X2^5; X2^7>")));
  CHECK(equal(family_expand("c[2]"), family_expand("a[2]")));
  CHECK(equal(family_expand("cprime"), lit("<X1^3 + X2^3; X1^2*X2; X1*X2^2>")));

  // generator lists are exactly the set-builder output, not just the same ideal
  CHECK(family_generators(parse_family("c[5]")).size() == 4);
  CHECK(family_generators(parse_family("c[6]")).size() == 5);
  CHECK(family_generators(parse_family("a[8]")).size() == 9);
}

TEST_CASE("identity suite holds on the full grid with failing negative controls") {
  std::vector<IdentityCheck> suite = identity_suite(8);
  // 8 power identities + 43 (k,l) pairs with k >= l-1 + 7 mixed-family
  // products + the two-generator square pair + the quadratic-factor
  // product + 2 negative controls
  CHECK(suite.size() == 62);
  std::size_t negatives = 0;
  for (const IdentityCheck& chk : suite) {
    CAPTURE(chk.name);
    CHECK(chk.ok());
    if (!chk.expected) {
      ++negatives;
      CHECK_FALSE(chk.holds);
      CHECK(chk.lhs_hash != chk.rhs_hash);
    } else {
      CHECK(chk.lhs_basis == chk.rhs_basis);
      CHECK(chk.lhs_hash == chk.rhs_hash);
    }
  }
  CHECK(negatives == 2);
  CHECK_THROWS_AS((void)identity_suite(1), std::invalid_argument);

  // cross-check a sample of the monomial identities against staircase
  // arithmetic, which multiplies without any basis computation
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      if (k < l - 1) continue;
      CAPTURE(k);
      CAPTURE(l);
      CHECK(products_agree("a[" + std::to_string(k) + "]", "b[" + std::to_string(l) + "]"));
    }
  CHECK(products_agree("a[1]", "c[4]"));
  CHECK(products_agree("a[1]", "c[7]"));
}

TEST_CASE("atom certification: pinned verdicts, no inconclusive outcomes") {
  const std::vector<std::string> certified = {"b[1]", "b[2]", "b[3]", "b[4]", "b[5]",
                                              "c[3]", "c[5]", "c[7]", "c[6]", "cprime"};
  for (const std::string& name : certified) {
    CAPTURE(name);
    AtomCertificate cert = certify_atom(parse_family(name));
    CHECK(cert.verdict == Verdict::Certified);
    CHECK(cert.unresolved.empty());
    CHECK(cert.primary != idealarith::poly::PrimaryEvidence::NotShown);
    // every split of the least degree is on record
    CHECK(cert.splits.size() == static_cast<std::size_t>(cert.mdeg / 2));
    for (const SplitRecord& sr : cert.splits) {
      CHECK(sr.open == 0);
      CHECK(sr.patterns == sr.refuted_by_filters + sr.refuted_by_system);
    }
  }

  // the filters alone finish the monomial atoms; cprime needs the
  // containment system for exactly two surviving patterns
  AtomCertificate cp = certify_atom(parse_family("cprime"));
  REQUIRE(cp.splits.size() == 1);
  CHECK(cp.splits[0].patterns == 21);  // (2^2-1)*(2^3-1)
  CHECK(cp.splits[0].refuted_by_system == 2);
  AtomCertificate c6 = certify_atom(parse_family("c[6]"));
  for (const SplitRecord& sr : c6.splits) CHECK(sr.refuted_by_system == 0);

  const std::vector<std::string> witnessed = {"a[2]", "a[3]", "a[4]", "a[5]", "c[4]"};
  for (const std::string& name : witnessed) {
    CAPTURE(name);
    AtomCertificate cert = certify_atom(parse_family(name));
    CHECK(cert.verdict == Verdict::Witness);  // in particular never Certified
    REQUIRE(cert.witness_reverified);
    Ideal left(cert.factor_left), right(cert.factor_right);
    CHECK_FALSE(left.is_whole_ring());
    CHECK_FALSE(right.is_whole_ring());
    CHECK(equal(product(left, right), family_expand(name)));
    CHECK(cert.factor_left_hash == idealarith::poly::basis_hash_hex(left));
  }

  // the c[4] factors are the quadratic pair with the sign split
  AtomCertificate c4 = certify_atom(parse_family("c[4]"));
  Ideal plus = lit("<X1^2; X1*X2 + X2^2>");
  Ideal minus = lit("<X1^2; X1*X2 - X2^2>");
  Ideal left(c4.factor_left), right(c4.factor_right);
  bool straight = equal(left, plus) && equal(right, minus);
  bool flipped = equal(left, minus) && equal(right, plus);
  CHECK((straight || flipped));

  // determinism of the full certificate payload
  AtomCertificate again = certify_atom(parse_family("c[4]"));
  CHECK(again.note == c4.note);
  CHECK(again.factor_left_hash == c4.factor_left_hash);
  CHECK(again.factor_right_hash == c4.factor_right_hash);

  // least degree 1 certifies vacuously
  AtomCertificate a1 = certify_atom(parse_family("a[1]"));
  CHECK(a1.verdict == Verdict::Certified);
  CHECK(a1.splits.empty());

  // preconditions
  CHECK_THROWS_AS((void)certify_atom(lit("<X1 + 1>")), std::invalid_argument);   // unit
  CHECK_THROWS_AS((void)certify_atom(lit("<X1>")), std::invalid_argument);       // radical too small
  CHECK_THROWS_AS((void)certify_atom(lit("<X1^2 + X1; X2>")), std::invalid_argument);
  Ideal three_vars(std::vector<Polynomial>{idealarith::poly::var(0), idealarith::poly::var(1),
                                           idealarith::poly::var(2)});
  CHECK_THROWS_AS((void)certify_atom(three_vars), std::invalid_argument);
}

TEST_CASE("interval length reports certify [2,k] with live factorizations") {
  for (int k = 2; k <= 8; ++k) {
    CAPTURE(k);
    IntervalLengthsReport rep = theorem51_lengths(k);
    CHECK(rep.all_pass);
    CHECK(rep.failure.empty());
    CHECK(rep.lengths == LengthSet::interval(2, k));
    CHECK(rep.witnesses.size() == static_cast<std::size_t>(k - 1));
    for (const LengthWitness& w : rep.witnesses) {
      CHECK(w.reverified);
      CHECK(static_cast<long long>(w.factors.size()) == w.length);
    }
    CHECK(rep.upper_bound_certified);
    for (const AtomUse& atom : rep.atoms) {
      CAPTURE(atom.family);
      CHECK(atom.verdict == Verdict::Certified);
    }
  }

  IntervalLengthsReport r3 = theorem51_lengths(3);
  REQUIRE(witness_for(r3, 2) != nullptr);
  CHECK(witness_for(r3, 2)->factors == std::vector<std::string>{"a[1]", "b[2]"});
  CHECK(witness_for(r3, 3)->factors == std::vector<std::string>{"a[1]", "a[1]", "a[1]"});

  // the length-2 route for k=5 is the mixed-generator product
  IntervalLengthsReport r5 = theorem51_lengths(5);
  CHECK(witness_for(r5, 2)->factors == std::vector<std::string>{"b[2]", "cprime"});
  CHECK(fact_count(r5, 4) == 4);

  // monomial witnesses re-multiply identically through staircase arithmetic
  IntervalLengthsReport r4 = theorem51_lengths(4);
  Staircase target = st_of("a[4]");
  for (const LengthWitness& w : r4.witnesses) {
    Staircase acc = Staircase::identity();
    for (const std::string& f : w.factors) acc = acc * st_of(f);
    CHECK(acc == target);
  }

  CHECK_THROWS_AS((void)theorem51_lengths(1), std::invalid_argument);
}

TEST_CASE("monomial-monoid relative lengths") {
  CHECK(staircase_lengths(st_of("a[1]")) == LengthSet({1}));
  CHECK(staircase_lengths(st_of("a[2]")) == LengthSet({2}));
  CHECK(staircase_lengths(st_of("a[3]")) == LengthSet({2, 3}));
  CHECK(staircase_lengths(st_of("b[2]")) == LengthSet({1}));
  CHECK_THROWS_AS((void)staircase_lengths(parse_staircase("<X1^30>"), 24),
                  idealarith::core::bound_exceeded);
}

TEST_CASE("non-cancellation witness and the infinite divisor family") {
  NonCancellationWitness w = not_transfer_krull_witness();
  CHECK(w.pass);
  CHECK(w.left_product.ok());
  CHECK(w.right_product.ok());
  CHECK(w.factors_distinct);
  CHECK(w.left_factor_hash != w.right_factor_hash);
  // negative control: an equal pair must fail the distinctness requirement
  CHECK(equal(family_expand("b[2]"), family_expand("b[2]")));

  InfiniteDivisorFamily fam = non_ff_witness({rat(1), rat(2), rat(3), rat(4), rat(5)});
  CHECK(fam.pass);
  CHECK(fam.pairwise_distinct);
  CHECK(fam.products.size() == 5);
  for (const IdentityCheck& chk : fam.products) {
    CAPTURE(chk.name);
    CHECK(chk.ok());
  }
  std::set<std::string> hashes(fam.factor_hashes.begin(), fam.factor_hashes.end());
  CHECK(hashes.size() == 5);

  // rational parameters work too
  CHECK(non_ff_witness({rat(1, 2), rat(-3)}).pass);
  CHECK_THROWS_AS((void)non_ff_witness({rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS((void)non_ff_witness({rat(1), rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS((void)non_ff_witness({}), std::invalid_argument);
}

TEST_CASE("paired factorizations put consecutive lengths in one set") {
  for (int i = 1; i <= 3; ++i) {
    CAPTURE(i);
    PairedFactorizations pf = u2_witnesses(i);
    CHECK(pf.pass);
    CHECK(pf.short_form.ok());
    CHECK(pf.long_form.ok());
    CHECK(pf.full_power.ok());
    CHECK(pf.chain_left.ok());
    CHECK(pf.chain_mid.ok());
    CHECK(pf.shared_lengths == std::vector<long long>{2, 2 * i + 1, 2 * i + 2});
  }
  CHECK_THROWS_AS((void)u2_witnesses(0), std::invalid_argument);

  // the atoms carrying those factorizations all certify
  for (const char* name : {"a[1]", "b[2]", "c[3]", "c[5]", "c[7]"})
    CHECK(certify_atom(parse_family(name)).verdict == Verdict::Certified);
}

TEST_CASE("length-set search builds shifted intervals and declines the rest") {
  LengthSearchResult hit = search_length_set(LengthSet({3}));
  CHECK(hit.found);
  CHECK(hit.construction == "<X1>^1 * a[2]");
  CHECK(hit.prime_shift == 1);
  CHECK(hit.lengths == LengthSet({3}));
  CHECK(hit.shift_base_checked);
  CHECK(hit.lower_bounds_reverified);
  CHECK_FALSE(hit.ideal_hash.empty());

  LengthSearchResult plain = search_length_set(LengthSet::interval(2, 6));
  CHECK(plain.found);
  CHECK(plain.construction == "a[6]");
  CHECK(plain.prime_shift == 0);
  CHECK(plain.lengths == LengthSet::interval(2, 6));

  LengthSearchResult two = search_length_set(LengthSet({2}));
  CHECK(two.found);
  CHECK(two.construction == "a[2]");

  LengthSearchResult mid = search_length_set(LengthSet::interval(4, 5));
  CHECK(mid.found);
  CHECK(mid.construction == "<X1>^2 * a[3]");
  CHECK(mid.lengths == LengthSet::interval(4, 5));

  LengthSearchResult gaps = search_length_set(LengthSet({2, 4}));
  CHECK_FALSE(gaps.found);
  CHECK(gaps.log.find("gaps") != std::string::npos);

  LengthSearchResult wide = search_length_set(LengthSet::interval(2, 9));
  CHECK_FALSE(wide.found);
  CHECK(wide.log.find("beyond the cap") != std::string::npos);

  CHECK_THROWS_AS((void)search_length_set(LengthSet({1, 3})), std::invalid_argument);
  CHECK_THROWS_AS((void)search_length_set(LengthSet{}), std::invalid_argument);
}

TEST_CASE("elasticity targets land exactly") {
  struct Pin {
    Rational q;
    std::string construction;
    long long lo, hi;
  };
  const std::vector<Pin> pins = {
      {rat(3, 2), "a[3]", 2, 3},
      {rat(5, 3), "<X1>^1 * a[4]", 3, 5},
      {rat(7, 4), "<X1>^2 * a[5]", 4, 7},
      {rat(9, 5), "<X1>^3 * a[6]", 5, 9},
      {rat(2), "a[4]", 2, 4},
  };
  for (const Pin& pin : pins) {
    CAPTURE(pin.construction);
    IdealElasticityWitness w = elastic_witness(pin.q);
    CHECK(w.ok);
    CHECK(w.construction == pin.construction);
    CHECK(w.lengths == LengthSet::interval(pin.lo, pin.hi));
    CHECK(w.rho == pin.q);
    CHECK(w.base.all_pass);
  }
  CHECK_FALSE(elastic_witness(rat(1)).ok);
  CHECK_FALSE(elastic_witness(rat(2, 3)).ok);
  CHECK_FALSE(elastic_witness(rat(1)).rejection.empty());
}
