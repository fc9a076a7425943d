// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit code 0 only when every criterion holds. Criterion 10 drives the
// command-line binary (path in argv[1], default ./idealarith) and
// byte-compares its reports, so run this from the build directory.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "idealarith/certify.hpp"
#include "idealarith/engine.hpp"
#include "idealarith/families.hpp"
#include "idealarith/graded.hpp"
#include "idealarith/groebner.hpp"
#include "idealarith/ideal_lengths.hpp"
#include "idealarith/lengthset.hpp"
#include "idealarith/plane.hpp"
#include "idealarith/polynomial.hpp"
#include "idealarith/powerset.hpp"
#include "idealarith/rational.hpp"
#include "idealarith/staircase.hpp"
#include "idealarith/zerosum.hpp"

using namespace idealarith;
using core::FactorEngine;
using core::LengthSet;
using poly::Ideal;
using poly::Polynomial;

namespace {

constexpr unsigned long long kSeed = 20260814ull;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Least degree of a member, read off the reduced basis rather than the
// construction-time generators, so additivity checks exercise Buchberger.
long long mdeg_basis(const Ideal& I) {
  long long m = -1;
  const auto& rows = I.basis();
  for (const auto& r : rows) {
    long long d = *r.min_degree();
    if (m < 0 || d < m) m = d;
  }
  return m;
}

Polynomial random_poly(std::mt19937_64& rng, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, max_exp), terms(1, max_terms);
  Polynomial f;
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    int c = coef(rng);
    if (c == 0) continue;
    f += Polynomial(poly::Monomial::var(0, expo(rng)) * poly::Monomial::var(1, expo(rng)), Rational(c));
  }
  return f;
}

Polynomial random_homogeneous(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial f;
  for (int a = 0; a <= degree; ++a) {
    int c = coef(rng);
    if (c == 0) continue;
    f += Polynomial(poly::Monomial::var(0, a) * poly::Monomial::var(1, degree - a), Rational(c));
  }
  return f;
}

// Affine (non-homogeneous) draws stay small: lex bases of products of random
// affine ideals blow up in coefficient size well before the degree caps bite.
std::vector<Polynomial> random_ideal_gens(std::mt19937_64& rng, bool homogeneous) {
  std::uniform_int_distribution<int> count(1, homogeneous ? 3 : 2), deg(1, 4);
  while (true) {
    std::vector<Polynomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Polynomial f = homogeneous ? random_homogeneous(rng, deg(rng)) : random_poly(rng, 3, 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (!gens.empty()) return gens;
  }
}

std::vector<core::PlaneElement> plane_window(long long n) {
  std::vector<core::PlaneElement> w;
  for (long long x = 1; x <= n; ++x)
    for (long long y = 1; y <= n; ++y) w.push_back(core::PlaneElement{x, y});
  return w;
}

std::vector<power::FiniteSet> reduced_sets_up_to(long long n) {
  std::vector<power::FiniteSet> out;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<long long> v{0};
    for (long long b = 1; b <= n; ++b)
      if (mask & (1ull << (b - 1))) v.push_back(b);
    out.emplace_back(std::move(v));
  }
  return out;
}

// --------------------------------------------------------------------------

Outcome criterion_identity_suite() {
  auto checks = ideals::identity_suite(8);
  int negatives = 0;
  bool saw_corner_product = false, saw_c4_split = false;
  for (const auto& c : checks) {
    if (!c.ok()) return {false, "check failed: " + c.name};
    if (!c.expected) ++negatives;
    if (c.name == "b[2]*cprime == a[5]") saw_corner_product = c.holds;
    if (c.name == "<X1^2; X1*X2+X2^2>*<X1^2; X1*X2-X2^2> == c[4]") saw_c4_split = c.holds;
  }
  if (negatives != 2) return {false, "expected 2 negative controls, saw " + std::to_string(negatives)};
  if (!saw_corner_product) return {false, "degree-5 corner product missing from the suite"};
  if (!saw_c4_split) return {false, "split-quadratic factorization of c[4] missing from the suite"};
  return {true, std::to_string(checks.size()) + " grid identities verified, 2 negative controls fail as required"};
}

Outcome criterion_certify_pins() {
  const std::vector<std::string> certified = {"b[1]", "b[2]", "b[3]", "b[4]", "b[5]",
                                              "c[3]", "c[5]", "c[7]", "c[6]", "cprime"};
  const std::vector<std::string> witnesses = {"a[2]", "a[3]", "a[4]", "a[5]", "c[4]"};
  for (const auto& name : certified) {
    auto cert = ideals::certify_atom(ideals::parse_family(name));
    if (cert.verdict != ideals::Verdict::Certified)
      return {false, name + " expected Certified, got " + ideals::to_string(cert.verdict)};
  }
  for (const auto& name : witnesses) {
    auto cert = ideals::certify_atom(ideals::parse_family(name));
    if (cert.verdict != ideals::Verdict::Witness)
      return {false, name + " expected Witness, got " + ideals::to_string(cert.verdict)};
    if (!cert.witness_reverified) return {false, name + " witness product failed re-verification"};
  }
  return {true, "10 Certified + 5 Witness verdicts, zero Inconclusive"};
}

Outcome criterion_interval_lengths() {
  for (int k = 2; k <= 8; ++k) {
    auto r = ideals::theorem51_lengths(k);
    if (!r.all_pass) return {false, "k=" + std::to_string(k) + ": " + r.failure};
    if (!(r.lengths == LengthSet::interval(2, k)))
      return {false, "k=" + std::to_string(k) + ": lengths " + core::to_string(r.lengths)};
    if (r.witnesses.size() != static_cast<std::size_t>(k - 1))
      return {false, "k=" + std::to_string(k) + ": expected " + std::to_string(k - 1) + " witnesses"};
    for (const auto& w : r.witnesses)
      if (!w.reverified || w.length != static_cast<long long>(w.factors.size()))
        return {false, "k=" + std::to_string(k) + ": bad witness at length " + std::to_string(w.length)};
    for (const auto& a : r.atoms)
      if (a.verdict != ideals::Verdict::Certified)
        return {false, "k=" + std::to_string(k) + ": atom " + a.family + " not certified"};
    if (!r.upper_bound_certified) return {false, "k=" + std::to_string(k) + ": upper bound not certified"};
  }
  return {true, "L(a[k]) = [2,k] for k in [2,8], factorizations re-multiplied, atoms certified, "
                "least-degree upper bound attached"};
}

Outcome criterion_structural_witnesses() {
  auto w = ideals::not_transfer_krull_witness();
  if (!w.pass) return {false, "cancellation-failure witness did not verify"};
  std::vector<Rational> alphas;
  for (long i = 1; i <= 5; ++i) alphas.push_back(rat(i));
  auto f = ideals::non_ff_witness(alphas);
  if (!f.pass) return {false, "unbounded-divisor family did not verify"};
  if (f.alphas.size() < 5) return {false, "fewer than 5 parameters"};
  return {true, "equal products with distinct factors, plus 5 pairwise distinct verified divisors of a[3]"};
}

Outcome criterion_u2_window() {
  std::set<long long> covered;
  for (int i = 1; i <= 3; ++i) {
    auto p = ideals::u2_witnesses(i);
    if (!p.pass) return {false, "paired factorizations failed at i=" + std::to_string(i)};
    std::vector<long long> expect = {2, 2 * i + 1, 2 * i + 2};
    if (p.shared_lengths != expect) return {false, "unexpected shared lengths at i=" + std::to_string(i)};
    covered.insert(2 * i + 1);
    covered.insert(2 * i + 2);
  }
  for (long long v = 3; v <= 8; ++v)
    if (!covered.count(v)) return {false, "length " + std::to_string(v) + " not covered"};
  for (const char* name : {"a[1]", "b[2]", "c[3]", "c[5]", "c[7]"}) {
    auto cert = ideals::certify_atom(ideals::parse_family(name));
    if (cert.verdict != ideals::Verdict::Certified)
      return {false, std::string(name) + " is not a certified atom"};
  }
  return {true, "every length in {3,...,8} shares a length set with 2, all factors certified atoms"};
}

Outcome criterion_elasticity_targets() {
  for (const char* qt : {"3/2", "5/3", "7/4", "9/5"}) {
    Rational q = parse_rational(qt);
    auto w = ideals::elastic_witness(q);
    if (!w.ok) return {false, std::string(qt) + ": " + w.rejection};
    if (w.rho != q || core::rho_of(w.lengths) != q)
      return {false, std::string(qt) + ": elasticity came out " + to_string(w.rho)};
  }
  return {true, "q in {3/2, 5/3, 7/4, 9/5} each attained exactly by a certified construction"};
}

Outcome criterion_power_monoid() {
  power::ReducedPowerMonoid mon;
  FactorEngine<power::ReducedPowerMonoid> eng(mon);
  for (long long n = 2; n <= 8; ++n) {
    std::vector<long long> v;
    for (long long i = 0; i <= n; ++i) v.push_back(i);
    LengthSet L = power::power_lengths(eng, power::FiniteSet(v));
    if (!(L == LengthSet::interval(2, n)))
      return {false, "L([0," + std::to_string(n) + "]) = " + core::to_string(L)};
  }
  auto sets = reduced_sets_up_to(8);
  std::vector<ideals::Staircase> images;
  images.reserve(sets.size());
  for (const auto& A : sets) images.push_back(power::to_monomial_ideal(A));
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!seen.emplace(images[i].key(), i).second) return {false, "embedding is not injective"};
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      ++pairs;
      if (power::to_monomial_ideal(sets[i] + sets[j]) != images[i] * images[j])
        return {false, "embedding not multiplicative at " + sets[i].key() + " + " + sets[j].key()};
    }
  return {true, "L([0,n]) = [2,n] for n in [2,8]; embedding multiplicative on " + std::to_string(pairs) +
                " sumset pairs and injective on 256 sets"};
}

Outcome criterion_plane_exemplars() {
  core::PlaneMonoid mon;
  FactorEngine<core::PlaneMonoid> eng(mon);
  for (long long m = 2; m <= 10; ++m) {
    LengthSet L = eng.length_set(core::PlaneElement{m, m});
    if (L.min() != 2 || L.max() != m)
      return {false, "L((m,m)) at m=" + std::to_string(m) + " is " + core::to_string(L)};
  }
  auto res = core::elasticity_gap_scan(eng, plane_window(8));
  if (res.all_half_factorial) return {false, "window scan found no elasticity above 1"};
  if (!(res.gap > 1)) return {false, "recorded gap is not above 1"};
  return {true, "L((m,m)) runs from 2 to m for m in [2,10]; smallest window elasticity above 1 is " +
                to_string(res.gap) + " at " + res.witness_key};
}

Outcome property_mdeg_additivity(std::mt19937_64& rng) {
  int cases = 0;
  while (cases < 200) {
    Ideal I(random_ideal_gens(rng, false));
    Ideal J(random_ideal_gens(rng, false));
    ++cases;
    if (mdeg_basis(product(I, J)) != mdeg_basis(I) + mdeg_basis(J))
      return {false, "least-degree additivity failed on case " + std::to_string(cases)};
  }
  return {true, "200 cases"};
}

Outcome property_graded_product(std::mt19937_64& rng) {
  int cases = 0;
  while (cases < 200) {
    Ideal I(random_ideal_gens(rng, true));
    Ideal J(random_ideal_gens(rng, true));
    if (I.is_whole_ring() || J.is_whole_ring()) continue;
    ++cases;
    int dI = static_cast<int>(mdeg_basis(I)), dJ = static_cast<int>(mdeg_basis(J));
    poly::GradedPiece lhs = poly::graded_piece(product(I, J), dI + dJ);
    poly::GradedPiece rhs = poly::graded_product(poly::graded_piece(I, dI), poly::graded_piece(J, dJ));
    if (!(lhs == rhs)) return {false, "bottom graded piece mismatch on case " + std::to_string(cases)};
  }
  return {true, "200 cases"};
}

Outcome property_echelon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 5), count(1, 6), coef(-2, 2);
  int cases = 0;
  while (cases < 200) {
    int d = deg(rng);
    std::vector<Polynomial> vecs;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Polynomial f = random_homogeneous(rng, d);
      if (!f.is_zero()) vecs.push_back(f);
    }
    if (vecs.empty()) continue;
    ++cases;
    poly::GradedPiece piece = poly::echelon_span(d, vecs);
    if (piece.dim() > vecs.size()) return {false, "dimension exceeds the input count"};
    for (std::size_t i = 0; i < piece.rows.size(); ++i) {
      const Polynomial& r = piece.rows[i];
      if (r.leading_coeff() != 1 || !r.is_homogeneous()) return {false, "row not monic homogeneous"};
      if (i + 1 < piece.rows.size() && !(r.leading_monomial() > piece.rows[i + 1].leading_monomial()))
        return {false, "leads not strictly decreasing"};
      for (std::size_t j = 0; j < piece.rows.size(); ++j)
        if (i != j && piece.rows[j].coeff(r.leading_monomial()) != 0)
          return {false, "pivot column not cleared"};
    }
    for (const auto& f : vecs)
      if (!piece.contains(f)) return {false, "input escaped its own span"};
    std::vector<Polynomial> shuffled = vecs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (!(poly::echelon_span(d, shuffled) == piece)) return {false, "span depends on input order"};
    Polynomial comb;
    for (const auto& f : vecs) comb += f * Rational(coef(rng));
    std::vector<Polynomial> extended = vecs;
    extended.push_back(comb);
    if (!(poly::echelon_span(d, extended) == piece)) return {false, "span grew under a linear combination"};
  }
  return {true, "200 cases"};
}

Outcome property_union_laws(std::mt19937_64& rng) {
  core::PlaneMonoid mon;
  FactorEngine<core::PlaneMonoid> eng(mon);
  auto small = plane_window(4);
  auto big = plane_window(8);  // holds every pairwise product of the small window
  std::uniform_int_distribution<long long> pick(1, 5);
  int cases = 0;
  while (cases < 200) {
    std::vector<core::PlaneElement> sub;
    for (const auto& e : small)
      if (rng() & 1) sub.push_back(e);
    long long k = pick(rng), l = pick(rng);
    ++cases;
    auto Uk = core::union_of_lengths(eng, k, sub);
    auto Ul = core::union_of_lengths(eng, l, sub);
    if (Uk.values.contains(l) != Ul.values.contains(k))
      return {false, "union symmetry failed at k=" + std::to_string(k) + ", l=" + std::to_string(l)};
    if (Uk.nothing_realizes_k || Ul.nothing_realizes_k) continue;
    auto Ukl = core::union_of_lengths(eng, k + l, big);
    LengthSet S = sum(Uk.values, Ul.values);
    const auto& vals = S.values();
    for (long long v : vals)
      if (!Ukl.values.contains(v)) return {false, "union sumset escaped the target union"};
  }
  return {true, "200 cases"};
}

Outcome property_gb_uniqueness(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(1, 3), den(1, 3), expo(0, 2);
  int cases = 0;
  while (cases < 200) {
    std::vector<Polynomial> gens = random_ideal_gens(rng, false);
    ++cases;
    auto gb = poly::reduced_groebner(gens);
    std::vector<Polynomial> mutated = gens;
    std::shuffle(mutated.begin(), mutated.end(), rng);
    for (auto& g : mutated) {
      int sign = (rng() & 1) ? 1 : -1;
      g = g * rat(sign * coef(rng), den(rng));
    }
    if (mutated.size() > 1) {
      std::size_t i = rng() % mutated.size();
      std::size_t j = (i + 1 + rng() % (mutated.size() - 1)) % mutated.size();
      mutated[i] += mutated[j] * poly::Monomial::var(0, expo(rng)) * poly::Monomial::var(1, expo(rng));
    }
    if (!(poly::reduced_groebner(mutated) == gb))
      return {false, "reduced basis changed under a generator-set transformation"};
  }
  return {true, "200 cases"};
}

Outcome criterion_property_suites() {
  struct Suite {
    const char* name;
    Outcome (*run)(std::mt19937_64&);
  };
  const Suite suites[] = {
      {"least-degree additivity", property_mdeg_additivity},
      {"bottom graded product", property_graded_product},
      {"echelon invariants", property_echelon},
      {"union laws", property_union_laws},
      {"reduced-basis uniqueness", property_gb_uniqueness},
  };
  std::string detail;
  for (const auto& s : suites) {
    std::mt19937_64 rng(kSeed);
    Outcome o = s.run(rng);
    if (!o.pass) return {false, std::string(s.name) + ": " + o.detail};
    if (!detail.empty()) detail += ", ";
    detail += std::string(s.name) + " (" + o.detail + ")";
  }
  return {true, detail};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion_determinism(const std::string& cli) {
  const std::vector<std::string> invocations = {
      "theorem51 --k 2..5 --seed 20260814",
      "verify-identities --max 5 --seed 20260814",
  };
  for (std::size_t i = 0; i < invocations.size(); ++i) {
    std::string f1 = "acceptance_rep_" + std::to_string(i) + "_a.jsonl";
    std::string f2 = "acceptance_rep_" + std::to_string(i) + "_b.jsonl";
    for (const std::string& out : {f1, f2}) {
      std::string cmd = cli + " " + invocations[i] + " --out " + out + " > /dev/null";
      if (std::system(cmd.c_str()) != 0) return {false, "CLI run failed: " + cmd};
    }
    std::string a = slurp(f1), b = slurp(f2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    if (a != b) return {false, "reports differ for: " + invocations[i]};
    if (a.empty()) return {false, "empty report for: " + invocations[i]};
  }
  return {true, "two runs per configuration, reports byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "./idealarith";

  struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = no stated limit
    Outcome (*run)();
  };

  static std::string cli_path;
  cli_path = cli;

  const std::vector<Criterion> criteria = {
      {1, "product identity suite on the full grid", 120.0, criterion_identity_suite},
      {2, "atom certification pin list, zero Inconclusive", 600.0, criterion_certify_pins},
      {3, "certified interval length sets L(a[k]) = [2,k]", 0.0, criterion_interval_lengths},
      {4, "cancellation-failure and unbounded-divisor witnesses", 0.0, criterion_structural_witnesses},
      {5, "lengths {3,...,8} joined to 2 through paired factorizations", 0.0, criterion_u2_window},
      {6, "prescribed elasticities attained exactly", 0.0, criterion_elasticity_targets},
      {7, "power monoid intervals and monomial-ideal embedding", 0.0, criterion_power_monoid},
      {8, "plane exemplar lengths and elasticity gap", 0.0, criterion_plane_exemplars},
      {9, "randomized property suites, fixed seed", 0.0, criterion_property_suites},
      {10, "byte-identical reports under identical config and seed", 0.0,
       +[]() { return criterion_determinism(cli_path); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " [exceeded the " + std::to_string(static_cast<int>(c.limit_seconds)) + "s budget]";
    }
    if (!o.pass) ++failures;
    char line[2048];
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %s: %s (%.2fs)", o.pass ? "PASS" : "FAIL",
                  c.number, c.title.c_str(), o.detail.c_str(), secs);
    std::cout << line << std::endl;
  }
  std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
