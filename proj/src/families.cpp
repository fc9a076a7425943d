#include "idealarith/families.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace idealarith::ideals {

namespace {

poly::Polynomial mono(int r, int s) {
  return poly::Polynomial(poly::Monomial::var(0, r) * poly::Monomial::var(1, s), 1);
}

}  // namespace

IdealFamily parse_family(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "cprime") return {IdealFamily::Kind::CPrime, 0};
  if (t.size() >= 4 && t[1] == '[' && t.back() == ']') {
    int sub = 0;
    try {
      sub = std::stoi(t.substr(2, t.size() - 3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family subscript: " + text);
    }
    switch (t[0]) {
      case 'a':
        return {IdealFamily::Kind::A, sub};
      case 'b':
        return {IdealFamily::Kind::B, sub};
      case 'c':
        return {IdealFamily::Kind::C, sub};
      default:
        break;
    }
  }
  throw std::invalid_argument("bad family literal (want a[k], b[i], c[m], or cprime): " + text);
}

std::string family_text(const IdealFamily& f) {
  switch (f.kind) {
    case IdealFamily::Kind::A:
      return "a[" + std::to_string(f.sub) + "]";
    case IdealFamily::Kind::B:
      return "b[" + std::to_string(f.sub) + "]";
    case IdealFamily::Kind::C:
      return "c[" + std::to_string(f.sub) + "]";
    case IdealFamily::Kind::CPrime:
      return "cprime";
  }
  throw std::logic_error("unreachable family kind");
}

std::vector<poly::Polynomial> family_generators(const IdealFamily& f) {
  std::vector<poly::Polynomial> gens;
  switch (f.kind) {
    case IdealFamily::Kind::A: {
      if (f.sub < 1) throw std::invalid_argument("a[k] wants k >= 1");
      for (int j = 0; j <= f.sub; ++j) gens.push_back(mono(f.sub - j, j));
      break;
    }
    case IdealFamily::Kind::B: {
      if (f.sub < 1) throw std::invalid_argument("b[i] wants i >= 1");
      gens.push_back(mono(f.sub, 0));
      gens.push_back(mono(0, f.sub));
      break;
    }
    case IdealFamily::Kind::C: {
      int m = f.sub;
      if (m < 2) throw std::invalid_argument("c[m] wants m >= 2");
      gens.push_back(mono(m, 0));
      gens.push_back(mono(m - 1, 1));
      if (m % 2 == 1) {
        for (int j = 2; j <= m - 1; j += 2) gens.push_back(mono(m - 1 - j, j + 1));
      } else {
        for (int j = 2; j <= m; j += 2) gens.push_back(mono(m - j, j));
      }
      break;
    }
    case IdealFamily::Kind::CPrime: {
      gens.push_back(mono(3, 0) + mono(0, 3));
      gens.push_back(mono(2, 1));
      gens.push_back(mono(1, 2));
      break;
    }
  }
  return gens;
}

poly::Ideal family_expand(const IdealFamily& f, poly::GroebnerOptions opt) {
  return poly::Ideal(family_generators(f), opt);
}

poly::Ideal family_expand(const std::string& text, poly::GroebnerOptions opt) {
  return family_expand(parse_family(text), opt);
}

IdentityCheck verify_identity(std::string name, const poly::Ideal& lhs, const poly::Ideal& rhs, bool expected) {
  IdentityCheck chk;
  chk.name = std::move(name);
  chk.expected = expected;
  chk.holds = equal(lhs, rhs);
  chk.lhs_basis = lhs.basis_text();
  chk.rhs_basis = rhs.basis_text();
  chk.lhs_hash = poly::basis_hash_hex(lhs);
  chk.rhs_hash = poly::basis_hash_hex(rhs);
  return chk;
}

std::vector<IdentityCheck> identity_suite(int grid) {
  if (grid < 2) throw std::invalid_argument("identity grid wants at least 2");
  std::vector<IdentityCheck> out;
  auto fam = [](IdealFamily::Kind k, int sub) { return family_expand(IdealFamily{k, sub}); };
  using K = IdealFamily::Kind;

  for (int k = 1; k <= grid; ++k) {
    out.push_back(verify_identity("a[1]^" + std::to_string(k) + " == a[" + std::to_string(k) + "]",
                                  power(fam(K::A, 1), k), fam(K::A, k)));
  }
  for (int k = 1; k <= grid; ++k)
    for (int l = 1; l <= grid; ++l) {
      if (k < l - 1) continue;
      out.push_back(verify_identity(
          "a[" + std::to_string(k) + "]*b[" + std::to_string(l) + "] == a[" + std::to_string(k + l) + "]",
          product(fam(K::A, k), fam(K::B, l)), fam(K::A, k + l)));
    }
  for (int m = 2; m <= grid; ++m) {
    out.push_back(verify_identity("a[1]*c[" + std::to_string(m) + "] == a[" + std::to_string(m + 1) + "]",
                                  product(fam(K::A, 1), fam(K::C, m)), fam(K::A, m + 1)));
  }
  out.push_back(verify_identity("b[2]*cprime == a[5]", product(fam(K::B, 2), fam(K::CPrime, 0)), fam(K::A, 5)));

  poly::Ideal r1(poly::parse_ideal_literal("<X1^2; X1*X2+X2^2>"));
  poly::Ideal r2(poly::parse_ideal_literal("<X1^2; X1*X2-X2^2>"));
  out.push_back(
      verify_identity("<X1^2; X1*X2+X2^2>*<X1^2; X1*X2-X2^2> == c[4]", product(r1, r2), fam(K::C, 4)));

  // negative controls: the first is plainly false, the second breaks the
  // k >= l-1 side condition of the a*b family law
  out.push_back(verify_identity("a[1]*b[2] == a[2]", product(fam(K::A, 1), fam(K::B, 2)), fam(K::A, 2), false));
  out.push_back(verify_identity("a[1]*b[3] == a[4]", product(fam(K::A, 1), fam(K::B, 3)), fam(K::A, 4), false));
  return out;
}

NonCancellationWitness not_transfer_krull_witness() {
  NonCancellationWitness w;
  poly::Ideal a1 = family_expand("a[1]");
  poly::Ideal a2 = family_expand("a[2]");
  poly::Ideal a3 = family_expand("a[3]");
  poly::Ideal b2 = family_expand("b[2]");
  w.left_product = verify_identity("a[1]*b[2] == a[3]", product(a1, b2), a3);
  w.right_product = verify_identity("a[1]*a[2] == a[3]", product(a1, a2), a3);
  w.factors_distinct = !equal(b2, a2);
  w.left_factor_hash = poly::basis_hash_hex(b2);
  w.right_factor_hash = poly::basis_hash_hex(a2);
  w.pass = w.left_product.ok() && w.right_product.ok() && w.factors_distinct;
  return w;
}

InfiniteDivisorFamily non_ff_witness(const std::vector<Rational>& alphas) {
  InfiniteDivisorFamily fam;
  if (alphas.empty()) throw std::invalid_argument("need at least one alpha");
  std::set<Rational> seen;
  for (const Rational& a : alphas) {
    if (a == 0) throw std::invalid_argument("alpha must be nonzero");
    if (!seen.insert(a).second) throw std::invalid_argument("alphas must be pairwise distinct");
  }
  fam.alphas = alphas;
  poly::Ideal a1 = family_expand("a[1]");
  poly::Ideal a3 = family_expand("a[3]");
  fam.pairwise_distinct = true;
  std::set<std::string> factor_bases;
  for (const Rational& a : alphas) {
    poly::Polynomial g = poly::parse_polynomial("X1^2") + poly::parse_polynomial("X2^2") * a;
    poly::Ideal mid({g, poly::parse_polynomial("X1*X2")});
    std::string txt = to_string(a);
    fam.products.push_back(
        verify_identity("a[1]*<X1^2+" + txt + "*X2^2; X1*X2> == a[3]", product(a1, mid), a3));
    fam.factor_hashes.push_back(poly::basis_hash_hex(mid));
    if (!factor_bases.insert(mid.basis_text()).second) fam.pairwise_distinct = false;
  }
  fam.pass = fam.pairwise_distinct;
  for (const auto& chk : fam.products) fam.pass = fam.pass && chk.ok();
  return fam;
}

PairedFactorizations u2_witnesses(int i) {
  if (i < 1) throw std::invalid_argument("paired factorizations want i >= 1");
  PairedFactorizations pf;
  pf.i = i;
  auto a = [](int k) { return family_expand(IdealFamily{IdealFamily::Kind::A, k}); };
  poly::Ideal b2 = family_expand("b[2]");
  poly::Ideal c = family_expand(IdealFamily{IdealFamily::Kind::C, 2 * i + 1});
  poly::Ideal target = a(2 * i + 2);

  std::string tgt = "a[" + std::to_string(2 * i + 2) + "]";
  pf.short_form = verify_identity("a[1]*c[" + std::to_string(2 * i + 1) + "] == " + tgt,
                                  product(a(1), c), target);
  pf.long_form = verify_identity("a[1]^" + std::to_string(2 * i) + "*b[2] == " + tgt,
                                 product(power(a(1), 2 * i), b2), target);
  pf.full_power = verify_identity("a[1]^" + std::to_string(2 * i + 2) + " == " + tgt,
                                  power(a(1), 2 * i + 2), target);
  pf.chain_left = verify_identity("a[" + std::to_string(2 * i) + "]*b[2] == " + tgt,
                                  product(a(2 * i), b2), target);
  pf.chain_mid = verify_identity("a[" + std::to_string(2 * i - 1) + "]*a[3] == " + tgt,
                                 product(a(2 * i - 1), a(3)), target);
  pf.shared_lengths = {2, 2 * i + 1, 2 * i + 2};
  pf.pass = pf.short_form.ok() && pf.long_form.ok() && pf.full_power.ok() &&
            pf.chain_left.ok() && pf.chain_mid.ok();
  return pf;
}

}  // namespace idealarith::ideals
