#include "idealarith/lengthset.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace idealarith::core {

LengthSet::LengthSet(std::vector<long long> v) : v_(std::move(v)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

LengthSet LengthSet::interval(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  std::vector<long long> v;
  for (long long x = lo; x <= hi; ++x) v.push_back(x);
  return LengthSet(std::move(v));
}

bool LengthSet::contains(long long x) const { return std::binary_search(v_.begin(), v_.end(), x); }

long long LengthSet::min() const {
  if (v_.empty()) throw std::domain_error("min of empty length set");
  return v_.front();
}

long long LengthSet::max() const {
  if (v_.empty()) throw std::domain_error("max of empty length set");
  return v_.back();
}

bool LengthSet::is_interval() const {
  return !v_.empty() && v_.back() - v_.front() + 1 == static_cast<long long>(v_.size());
}

LengthSet LengthSet::shifted(long long k) const {
  LengthSet r = *this;
  for (auto& x : r.v_) x += k;
  return r;
}

LengthSet sum(const LengthSet& a, const LengthSet& b) {
  std::set<long long> acc;
  for (long long x : a.v_)
    for (long long y : b.v_) acc.insert(x + y);
  LengthSet r;
  r.v_.assign(acc.begin(), acc.end());
  return r;
}

LengthSet unite(const LengthSet& a, const LengthSet& b) {
  std::vector<long long> v = a.v_;
  v.insert(v.end(), b.v_.begin(), b.v_.end());
  return LengthSet(std::move(v));
}

std::string to_string(const LengthSet& L) {
  std::string s = "{";
  for (std::size_t i = 0; i < L.values().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(L.values()[i]);
  }
  return s + "}";
}

LengthSet parse_length_set(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2) throw std::invalid_argument("bad length set literal: " + text);
  bool interval = t.front() == '[';
  if ((t.front() != '{' && t.front() != '[') || (t.back() != '}' && t.back() != ']'))
    throw std::invalid_argument("bad length set literal: " + text);
  std::string body = t.substr(1, t.size() - 2);
  std::vector<long long> vals;
  std::size_t p = 0;
  while (p < body.size()) {
    std::size_t q = body.find(',', p);
    std::string piece = body.substr(p, q == std::string::npos ? std::string::npos : q - p);
    if (piece.empty()) throw std::invalid_argument("bad length set literal: " + text);
    vals.push_back(std::stoll(piece));
    if (q == std::string::npos) break;
    p = q + 1;
  }
  if (vals.empty()) throw std::invalid_argument("empty length set literal: " + text);
  if (interval) {
    if (vals.size() != 2) throw std::invalid_argument("interval literal wants two endpoints: " + text);
    return LengthSet::interval(vals[0], vals[1]);
  }
  return LengthSet(std::move(vals));
}

std::vector<long long> delta_of(const LengthSet& L) {
  std::vector<long long> d;
  const auto& v = L.values();
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return d;
}

Rational rho_of(const LengthSet& L) {
  if (L.empty()) throw std::domain_error("elasticity of the empty set");
  if (L.values() == std::vector<long long>{0}) return Rational(1);
  if (L.min() <= 0) throw std::domain_error("elasticity wants positive lengths, got " + to_string(L));
  return rat(L.max(), L.min());
}

DeltaRho delta_and_rho(const LengthSet& L) { return DeltaRho{delta_of(L), rho_of(L)}; }

LengthSet ProgressionDecomposition::reconstruct() const {
  std::vector<long long> v;
  for (long long x : head) v.push_back(y + x);
  for (long long x : core) v.push_back(y + x);
  for (long long x : tail) v.push_back(y + x);
  return LengthSet(std::move(v));
}

namespace {

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// Attempts the decomposition for fixed (M, d, period, y). period holds 0
// and d and is sorted.
std::optional<ProgressionDecomposition> try_decompose(const LengthSet& L, long long M, long long d,
                                                      const std::vector<long long>& period, long long y) {
  // Residue test: every element must sit in y + period + dZ.
  std::vector<bool> residue(static_cast<std::size_t>(d), false);
  for (long long p : period) residue[static_cast<std::size_t>(floor_mod(p, d))] = true;
  for (long long x : L.values())
    if (!residue[static_cast<std::size_t>(floor_mod(x - y, d))]) return std::nullopt;

  // Walk the pattern upward from y and find the largest z with
  // L cap [y, z] equal to pattern cap [y, z], z in L.
  const auto& v = L.values();
  std::size_t start = 0;
  while (v[start] != y) ++start;
  long long z = y;
  std::size_t li = start;  // v[start..li] consumed, inclusive
  long long block = 0;
  std::size_t pi = 0;  // next pattern offset = block*d + period[pi], skipping duplicates 0/d
  auto next_pattern = [&]() {
    ++pi;
    if (pi + 1 >= period.size()) {  // period.back() == d coincides with next block's 0
      pi = 0;
      ++block;
    }
    return block * d + period[pi];
  };
  for (;;) {
    long long nxt = y + next_pattern();
    if (li + 1 < v.size() && v[li + 1] == nxt) {
      ++li;
      z = nxt;
    } else {
      break;
    }
  }

  // Fringes.
  ProgressionDecomposition dec;
  dec.y = y;
  dec.d = d;
  dec.M = M;
  dec.period = period;
  for (long long x : v) {
    long long off = x - y;
    if (off < 0) {
      if (off < -M) return std::nullopt;
      dec.head.push_back(off);
    } else if (off <= z - y) {
      dec.core.push_back(off);
    } else {
      if (off > (z - y) + M) return std::nullopt;
      dec.tail.push_back(off);
    }
  }
  if (!(dec.reconstruct() == L)) throw std::logic_error("progression reconstruction mismatch");
  return dec;
}

}  // namespace

ProgressionReport recognize_progressions(const LengthSet& L, long long M_cap, long long aamp_d_cap) {
  if (L.empty()) throw std::invalid_argument("progression recognition on the empty set");
  ProgressionReport rep;
  rep.bound_M = M_cap;
  rep.aamp_period_d_cap = aamp_d_cap;
  long long span = L.max() - L.min();
  long long d_max = std::max<long long>(1, span);

  for (long long M = 0; M <= M_cap && !rep.ap; ++M)
    for (long long d = 1; d <= d_max && !rep.ap; ++d)
      for (long long y = L.min(); y <= L.min() + M && !rep.ap; ++y) {
        if (!L.contains(y)) continue;
        rep.ap = try_decompose(L, M, d, {0, d}, y);
      }

  // Period subsets in (size, lexicographic) order; the two-element period
  // reproduces the plain progression, so any ap hit is also an aamp hit.
  for (long long M = 0; M <= M_cap && !rep.aamp; ++M)
    for (long long d = 1; d <= d_max && !rep.aamp; ++d) {
      if (rep.ap && rep.ap->M == M && rep.ap->d == d) {
        rep.aamp = rep.ap;
        break;
      }
      if (d > aamp_d_cap) continue;  // subsets not enumerated past the cap
      std::vector<std::vector<long long>> periods;
      long long inner = d - 1;
      for (long long mask = 0; mask < (1LL << inner); ++mask) {
        std::vector<long long> p{0};
        for (long long b = 0; b < inner; ++b)
          if (mask & (1LL << b)) p.push_back(b + 1);
        p.push_back(d);
        periods.push_back(std::move(p));
      }
      std::stable_sort(periods.begin(), periods.end(),
                       [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
      for (const auto& p : periods) {
        for (long long y = L.min(); y <= L.min() + M; ++y) {
          if (!L.contains(y)) continue;
          rep.aamp = try_decompose(L, M, d, p, y);
          if (rep.aamp) break;
        }
        if (rep.aamp) break;
      }
    }
  return rep;
}

ElasticityPlan full_elasticity_plan(const Rational& q, const LengthSet& witness_lengths) {
  ElasticityPlan plan;
  if (q <= 1) {
    plan.rejection = "target elasticity must exceed 1";
    return plan;
  }
  Rational qq = q;
  qq.canonicalize();
  long long r, s;
  if (qq.get_den() == 1) {
    r = 2 * to_ll(Rational(qq.get_num()));
    s = 2;
  } else {
    if (!qq.get_num().fits_slong_p() || !qq.get_den().fits_slong_p()) {
      plan.rejection = "target elasticity out of range";
      return plan;
    }
    r = qq.get_num().get_si();
    s = qq.get_den().get_si();
  }
  plan.r = r;
  plan.s = s;
  plan.shift = s - 2;
  plan.expected_witness_max = r - s + 2;
  if (witness_lengths.empty() || witness_lengths.min() != 2 || witness_lengths.max() != plan.expected_witness_max) {
    plan.rejection = "witness length set must have minimum 2 and maximum " +
                     std::to_string(plan.expected_witness_max) + ", got " + to_string(witness_lengths);
    return plan;
  }
  plan.predicted = witness_lengths.shifted(plan.shift);
  plan.rho = rho_of(plan.predicted);
  if (plan.rho != qq) throw std::logic_error("elasticity plan arithmetic mismatch");
  plan.ok = true;
  return plan;
}

}  // namespace idealarith::core
