#include "idealarith/staircase.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealarith/polynomial.hpp"

namespace idealarith::ideals {

Staircase Staircase::from_generators(std::vector<Gen> gens) {
  if (gens.empty()) throw std::invalid_argument("staircase wants at least one generator");
  for (auto [r, s] : gens)
    if (r < 0 || s < 0) throw std::invalid_argument("negative exponent in staircase generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Gen> keep;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens)
      if (h != g && h.first <= g.first && h.second <= g.second) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(g);
  }
  std::sort(keep.begin(), keep.end(), [](const Gen& a, const Gen& b) { return a.first > b.first; });
  Staircase s;
  s.gens_ = std::move(keep);
  return s;
}

long long Staircase::mdeg() const {
  long long m = gens_[0].first + gens_[0].second;
  for (const auto& g : gens_) m = std::min<long long>(m, g.first + g.second);
  return m;
}

Staircase::Gen Staircase::box() const {
  Gen b{0, 0};
  for (const auto& g : gens_) {
    b.first = std::max(b.first, g.first);
    b.second = std::max(b.second, g.second);
  }
  return b;
}

bool Staircase::contains_monomial(int r, int s) const {
  for (const auto& g : gens_)
    if (g.first <= r && g.second <= s) return true;
  return false;
}

bool Staircase::contains(const Staircase& other) const {
  for (const auto& g : other.gens_)
    if (!contains_monomial(g.first, g.second)) return false;
  return true;
}

Staircase operator*(const Staircase& a, const Staircase& b) {
  std::vector<Staircase::Gen> prod;
  prod.reserve(a.gens_.size() * b.gens_.size());
  for (const auto& g : a.gens_)
    for (const auto& h : b.gens_) prod.push_back({g.first + h.first, g.second + h.second});
  return Staircase::from_generators(std::move(prod));
}

Staircase Staircase::pow(unsigned k) const {
  Staircase acc = identity();
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

namespace {

std::string gen_text(const Staircase::Gen& g) {
  if (g.first == 0 && g.second == 0) return "1";
  std::string s;
  auto piece = [&](const char* v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  piece("X1", g.first);
  piece("X2", g.second);
  return s;
}

}  // namespace

std::string Staircase::key() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += "; ";
    out += gen_text(gens_[i]);
  }
  return out + ">";
}

Staircase parse_staircase(const std::string& text) {
  auto polys = poly::parse_ideal_literal(text, 2);
  std::vector<Staircase::Gen> gens;
  for (const auto& p : polys) {
    if (p.terms().size() != 1)
      throw std::invalid_argument("staircase generator is not a single term: " + poly::to_string(p));
    const auto& m = p.terms()[0].m;
    gens.push_back({static_cast<int>(m.e[0]), static_cast<int>(m.e[1])});
  }
  return Staircase::from_generators(std::move(gens));
}

poly::Ideal to_ideal(const Staircase& s, const poly::GroebnerOptions& opt) {
  std::vector<poly::Polynomial> gens;
  for (const auto& g : s.generators()) {
    poly::Monomial m = poly::Monomial::one();
    m.e[0] = static_cast<std::uint16_t>(g.first);
    m.e[1] = static_cast<std::uint16_t>(g.second);
    gens.push_back(poly::Polynomial::from_terms({{m, Rational(1)}}));
  }
  return poly::Ideal(std::move(gens), opt);
}

std::optional<Staircase> staircase_of(const poly::Ideal& I) {
  std::vector<Staircase::Gen> gens;
  for (const auto& p : I.basis()) {
    if (p.terms().size() != 1) return std::nullopt;
    if (p.max_var_index() > 1) return std::nullopt;
    const auto& m = p.terms()[0].m;
    gens.push_back({static_cast<int>(m.e[0]), static_cast<int>(m.e[1])});
  }
  return Staircase::from_generators(std::move(gens));
}

namespace {

void antichain_dfs(const Staircase& ref, long long target, int r, int s_min, const Staircase::Gen& box,
                   std::vector<Staircase::Gen>& acc, long long acc_mdeg, std::size_t budget, std::size_t& work,
                   std::vector<Staircase>& out) {
  if (++work > budget) throw core::bound_exceeded("staircase candidate enumeration budget exceeded");
  if (r < 0) return;
  // Skip the column entirely, or pick one generator (r, s) with s above
  // the last chosen second coordinate; each antichain is assembled along
  // exactly one descending-r path, so collect right after a pick. The
  // least degree only drops as generators join; once below the target,
  // prune the subtree.
  antichain_dfs(ref, target, r - 1, s_min, box, acc, acc_mdeg, budget, work, out);
  for (int s = s_min; s <= box.second; ++s) {
    if (r + s < 1) continue;
    long long m = std::min<long long>(acc_mdeg, r + s);
    if (m < target) continue;
    acc.push_back({r, s});
    if (m == target) {
      Staircase cand = Staircase::from_generators(acc);
      if (cand.contains(ref)) out.push_back(std::move(cand));
    }
    antichain_dfs(ref, target, r - 1, s + 1, box, acc, m, budget, work, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Staircase> staircases_containing(const Staircase& ref, long long mdeg_exact, std::size_t budget) {
  std::vector<Staircase> out;
  if (mdeg_exact < 1) return out;
  auto box = ref.box();
  std::vector<Staircase::Gen> acc;
  std::size_t work = 0;
  long long huge = box.first + box.second + 1;
  antichain_dfs(ref, mdeg_exact, box.first, 0, box, acc, huge, budget, work, out);
  return out;
}

std::vector<std::pair<Staircase, Staircase>> StaircaseMonoid::proper_divisor_pairs(const Element& a) const {
  std::vector<std::pair<Element, Element>> out;
  if (a.is_identity()) return out;
  long long m = a.mdeg();
  for (long long d = 1; d + d <= m; ++d) {
    long long e = m - d;
    auto Ts = staircases_containing(a, d, candidate_budget);
    auto Us = (d == e) ? Ts : staircases_containing(a, e, candidate_budget);
    if (Ts.size() * Us.size() > candidate_budget)
      throw core::bound_exceeded("staircase divisor pair budget exceeded");
    for (std::size_t i = 0; i < Ts.size(); ++i)
      for (std::size_t j = (d == e ? i : 0); j < Us.size(); ++j)
        if (Ts[i] * Us[j] == a) out.push_back({Ts[i], Us[j]});
  }
  return out;
}

}  // namespace idealarith::ideals
