#include "idealarith/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace idealarith::poly {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lt.m)) {
        Rational c = lt.c / g.leading_coeff();
        p -= (g * (lt.m / g.leading_monomial())) * c;
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      p -= Polynomial(lt.m, lt.c);
    }
  }
  return Polynomial::from_terms(std::move(remainder));
}

namespace {

struct PairKey {
  int deg;
  Monomial l;
  std::size_t i, j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    return std::tie(a.deg, a.l, a.i, a.j) < std::tie(b.deg, b.l, b.i, b.j);
  }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f * (l / f.leading_monomial()) * (Rational(1) / f.leading_coeff());
  Polynomial b = g * (l / g.leading_monomial()) * (Rational(1) / g.leading_coeff());
  return a - b;
}

}  // namespace

std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens, const GroebnerOptions& opt) {
  std::vector<Polynomial> B;
  for (auto& g : gens)
    if (!g.is_zero()) B.push_back(g.monic());
  if (B.empty()) throw std::invalid_argument("Groebner basis of the zero ideal requested");

  std::set<PairKey> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(B[i].leading_monomial(), B[j].leading_monomial())) continue;  // product criterion
      Monomial l = lcm(B[i].leading_monomial(), B[j].leading_monomial());
      queue.insert(PairKey{l.degree(), l, i, j});
    }
  };
  for (std::size_t j = 1; j < B.size(); ++j) push_pairs(j);

  std::size_t steps = 0;
  while (!queue.empty()) {
    if (++steps > opt.max_pairs) throw errors::cap_exceeded("Groebner pair budget exceeded");
    PairKey k = *queue.begin();
    queue.erase(queue.begin());
    Polynomial h = normal_form(s_polynomial(B[k.i], B[k.j]), B);
    if (h.is_zero()) continue;
    if (h.degree() > opt.max_degree) throw errors::cap_exceeded("Groebner degree guard exceeded");
    B.push_back(h.monic());
    if (B.size() > opt.max_basis) throw errors::cap_exceeded("Groebner basis size guard exceeded");
    push_pairs(B.size() - 1);
  }

  // Minimalize: drop rows whose lead is divisible by another surviving lead.
  std::vector<Polynomial> M;
  for (std::size_t i = 0; i < B.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < B.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!B[j].leading_monomial().divides(B[i].leading_monomial())) continue;
      if (B[j].leading_monomial() == B[i].leading_monomial()) {
        redundant = j < i;  // keep the earliest of equal leads
      } else {
        redundant = true;
      }
    }
    if (!redundant) M.push_back(B[i]);
  }

  // Interreduce until stable; terminates because leads are fixed and tails
  // strictly drop in the term order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < M.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(M.size() - 1);
      for (std::size_t j = 0; j < M.size(); ++j)
        if (j != i) others.push_back(M[j]);
      Polynomial r = normal_form(M[i], others).monic();
      if (!(r == M[i])) {
        M[i] = r;
        changed = true;
      }
    }
  }

  std::sort(M.begin(), M.end(),
            [](const Polynomial& a, const Polynomial& b) { return b.leading_monomial() < a.leading_monomial(); });
  return M;
}

Ideal::Ideal(std::vector<Polynomial> gens, GroebnerOptions opt)
    : gens_(std::move(gens)), opt_(opt), cache_(std::make_shared<Cache>()) {
  bool nonzero = false;
  for (const auto& g : gens_) {
    nonzero = nonzero || !g.is_zero();
    nvars_ = std::max(nvars_, g.max_var_index() + 1);
  }
  if (!nonzero) throw std::invalid_argument("the zero ideal is not an element of the ideal monoid");
  nvars_ = std::max(nvars_, 1);
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = reduced_groebner(gens_, opt_);
  return *cache_->gb;
}

bool Ideal::basis_ready() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->gb.has_value();
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, basis()).is_zero(); }

bool Ideal::is_whole_ring() const {
  const auto& gb = basis();
  return gb.size() == 1 && gb.front().leading_monomial().is_one();
}

std::optional<long long> Ideal::min_degree() const {
  std::optional<long long> d;
  for (const auto& g : gens_) {
    auto dg = g.min_degree();
    if (!dg) continue;
    d = d ? std::min(*d, *dg) : *dg;
  }
  return d;
}

bool equal(const Ideal& a, const Ideal& b) { return a.basis() == b.basis(); }

Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  gens.reserve(a.gens_.size() * b.gens_.size());
  for (const auto& f : a.gens_)
    for (const auto& g : b.gens_) gens.push_back(f * g);
  GroebnerOptions opt = a.opt_;
  opt.max_degree = std::max(a.opt_.max_degree, b.opt_.max_degree);
  return Ideal(std::move(gens), opt);
}

Ideal power(const Ideal& a, int k) {
  if (k < 1) throw std::invalid_argument("ideal power wants a positive exponent");
  Ideal r = a;
  for (int i = 1; i < k; ++i) r = product(r, a);
  return r;
}

std::string Ideal::basis_text() const {
  std::string s;
  for (const auto& g : basis()) {
    if (!s.empty()) s += "; ";
    s += to_string(g);
  }
  return s;
}

std::uint64_t basis_hash(const Ideal& I) {
  std::string t = I.basis_text();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : t) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string basis_hash_hex(const Ideal& I) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = basis_hash(I);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace idealarith::poly
