#include "idealarith/zerosum.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace idealarith::zs {

std::vector<long long> GroupSpec::normalize(std::vector<long long> e) const {
  if (e.size() != orders.size()) throw std::invalid_argument("element rank mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (orders[i] != 0) {
      e[i] %= orders[i];
      if (e[i] < 0) e[i] += orders[i];
    }
  return e;
}

std::vector<long long> GroupSpec::add(const std::vector<long long>& a, const std::vector<long long>& b) const {
  if (a.size() != orders.size() || b.size() != orders.size()) throw std::invalid_argument("element rank mismatch");
  std::vector<long long> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return normalize(std::move(c));
}

bool GroupSpec::is_zero(const std::vector<long long>& e) const {
  for (long long x : normalize(e))
    if (x != 0) return false;
  return true;
}

std::string GroupSpec::element_text(const std::vector<long long>& e) const {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::size_t p = 0;
  while (p < t.size()) {
    std::size_t q = t.find('x', p);
    std::string piece = t.substr(p, q == std::string::npos ? std::string::npos : q - p);
    if (piece == "Z") {
      g.orders.push_back(0);
    } else if (piece.size() >= 2 && piece[0] == 'C') {
      long long n = std::stoll(piece.substr(1));
      if (n < 2) throw std::invalid_argument("cyclic order wants n >= 2: " + piece);
      g.orders.push_back(n);
    } else {
      throw std::invalid_argument("bad group component: " + piece);
    }
    if (q == std::string::npos) break;
    p = q + 1;
  }
  if (g.orders.empty()) throw std::invalid_argument("empty group spec: " + text);
  return g;
}

ZeroSumSequence::ZeroSumSequence(const GroupSpec& g,
                                 const std::vector<std::pair<std::vector<long long>, long long>>& items)
    : ZeroSumSequence(g) {
  for (const auto& [e, m] : items) add(e, m);
}

long long ZeroSumSequence::length() const {
  long long n = 0;
  for (const auto& [e, m] : mult_) n += m;
  return n;
}

void ZeroSumSequence::add(const std::vector<long long>& e, long long times) {
  if (times < 0) throw std::invalid_argument("negative multiplicity");
  if (times == 0) return;
  auto n = g_.normalize(e);
  for (long long i = 0; i < times; ++i) sum_ = g_.add(sum_, n);
  mult_[n] += times;
}

ZeroSumSequence operator+(const ZeroSumSequence& a, const ZeroSumSequence& b) {
  ZeroSumSequence c = a;
  for (const auto& [e, m] : b.mult_) c.add(e, m);
  return c;
}

std::string ZeroSumSequence::key() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [e, m] : mult_) {
    if (!first) s += ", ";
    first = false;
    s += g_.element_text(e);
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s + "]";
}

ZeroSumSequence parse_sequence(const GroupSpec& g, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("bad sequence literal: " + text);
  std::string body = t.substr(1, t.size() - 2);
  ZeroSumSequence s(g);
  std::size_t p = 0;
  while (p < body.size()) {
    // item = element or element^mult, element = (a,b,...) or bare integer
    std::vector<long long> elem;
    if (body[p] == '(') {
      std::size_t close = body.find(')', p);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses: " + text);
      std::string inner = body.substr(p + 1, close - p - 1);
      std::size_t ip = 0;
      while (ip < inner.size()) {
        std::size_t iq = inner.find(',', ip);
        std::string piece = inner.substr(ip, iq == std::string::npos ? std::string::npos : iq - ip);
        if (piece.empty()) throw std::invalid_argument("bad element in: " + text);
        elem.push_back(std::stoll(piece));
        if (iq == std::string::npos) break;
        ip = iq + 1;
      }
      p = close + 1;
    } else {
      std::size_t q = body.find_first_of("^,", p);
      std::string piece = body.substr(p, q == std::string::npos ? std::string::npos : q - p);
      if (piece.empty()) throw std::invalid_argument("bad element in: " + text);
      elem.push_back(std::stoll(piece));
      p = q == std::string::npos ? body.size() : q;
    }
    if (elem.size() != g.rank()) throw std::invalid_argument("element rank mismatch in: " + text);
    long long mult = 1;
    if (p < body.size() && body[p] == '^') {
      std::size_t q = body.find(',', p);
      mult = std::stoll(body.substr(p + 1, q == std::string::npos ? std::string::npos : q - p - 1));
      p = q == std::string::npos ? body.size() : q;
    }
    s.add(elem, mult);
    if (p < body.size()) {
      if (body[p] != ',') throw std::invalid_argument("bad separator in: " + text);
      ++p;
    }
  }
  return s;
}

namespace {

struct SubsetWalk {
  // Mixed-radix counter over the multiplicities of s; yields every
  // sub-multiset as a vector of picked counts.
  std::vector<std::vector<long long>> elems;
  std::vector<long long> caps;
  std::vector<long long> pick;

  explicit SubsetWalk(const ZeroSumSequence& s) {
    for (const auto& [e, m] : s.multiplicities()) {
      elems.push_back(e);
      caps.push_back(m);
    }
    pick.assign(caps.size(), 0);
  }

  std::size_t combinations() const {
    std::size_t n = 1;
    for (long long c : caps) n *= static_cast<std::size_t>(c + 1);
    return n;
  }

  bool advance() {  // false once wrapped around to all-zero
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i] < caps[i]) {
        ++pick[i];
        return true;
      }
      pick[i] = 0;
    }
    return false;
  }

  bool proper() const {
    bool any = false, all = true;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i] > 0) any = true;
      if (pick[i] < caps[i]) all = false;
    }
    return any && !all;
  }

  // Complement-aware dedup: keep the lexicographically smaller side.
  bool canonical_side() const {
    for (std::size_t i = 0; i < pick.size(); ++i) {
      long long other = caps[i] - pick[i];
      if (pick[i] != other) return pick[i] < other;
    }
    return true;  // self-complementary
  }

  ZeroSumSequence build(const GroupSpec& g, bool complement) const {
    ZeroSumSequence t(g);
    for (std::size_t i = 0; i < pick.size(); ++i) t.add(elems[i], complement ? caps[i] - pick[i] : pick[i]);
    return t;
  }

  bool picked_is_zero_sum(const GroupSpec& g) const {
    std::vector<long long> acc(g.rank(), 0);
    for (std::size_t i = 0; i < pick.size(); ++i)
      for (long long t = 0; t < pick[i]; ++t) acc = g.add(acc, elems[i]);
    return g.is_zero(acc);
  }
};

}  // namespace

bool minimal_zero_sum(const ZeroSumSequence& s, std::size_t budget) {
  if (s.empty()) throw std::invalid_argument("minimality of the empty sequence is undefined");
  if (!s.is_zero_sum()) throw std::invalid_argument("sequence does not sum to zero: " + s.key());
  SubsetWalk walk(s);
  if (walk.combinations() > budget) throw core::bound_exceeded("subset enumeration budget exceeded");
  while (walk.advance())
    if (walk.proper() && walk.picked_is_zero_sum(s.group())) return false;
  return true;
}

std::vector<std::pair<ZeroSumSequence, ZeroSumSequence>> BZeroSum::proper_divisor_pairs(const Element& a) const {
  if (!a.is_zero_sum()) throw std::invalid_argument("not a zero-sum sequence: " + a.key());
  std::vector<std::pair<Element, Element>> out;
  if (a.empty()) return out;
  if (a.length() > max_length)
    throw core::bound_exceeded("zero-sum sequence exceeds the configured length cap: " + a.key());
  SubsetWalk walk(a);
  if (walk.combinations() > subset_budget) throw core::bound_exceeded("subset enumeration budget exceeded");
  const GroupSpec& g = a.group();
  while (walk.advance()) {
    if (!walk.proper() || !walk.canonical_side()) continue;
    if (!walk.picked_is_zero_sum(g)) continue;
    out.push_back({walk.build(g, false), walk.build(g, true)});
  }
  return out;
}

core::LengthSet lengths_over_group(core::FactorEngine<BZeroSum>& eng, const ZeroSumSequence& s) {
  if (!s.is_zero_sum()) throw std::invalid_argument("not a zero-sum sequence: " + s.key());
  return eng.length_set(s);
}

RealizeResult realize_length_set_over_Z(const core::LengthSet& L, const RealizeWindow& w) {
  GroupSpec z{{0}};
  RealizeResult res{false, ZeroSumSequence(z), ""};
  if (L.empty() || L.min() < 2) {
    res.note = "realizable targets need every length at least 2";
    return res;
  }
  std::vector<long long> support;
  for (long long v = -w.support_radius; v <= w.support_radius; ++v)
    if (v != 0) support.push_back(v);

  BZeroSum mon;
  mon.max_length = w.max_total + 1;
  core::FactorEngine<BZeroSum> eng(mon);

  // Multiplicity vectors in (total length, lexicographic) order.
  std::vector<long long> mult(support.size(), 0);
  for (long long total = 2; total <= w.max_total; ++total) {
    std::fill(mult.begin(), mult.end(), 0);
    for (;;) {
      long long len = 0, sum = 0;
      for (std::size_t i = 0; i < support.size(); ++i) {
        len += mult[i];
        sum += mult[i] * support[i];
      }
      if (len == total && sum == 0) {
        ZeroSumSequence cand(z);
        for (std::size_t i = 0; i < support.size(); ++i)
          if (mult[i]) cand.add({support[i]}, mult[i]);
        if (eng.length_set(cand) == L) {
          res.found = true;
          res.seq = cand;
          return res;
        }
      }
      std::size_t i = 0;
      while (i < mult.size() && mult[i] == w.max_mult) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
  res.note = "search window exhausted (support radius " + std::to_string(w.support_radius) + ", multiplicity cap " +
             std::to_string(w.max_mult) + ", total cap " + std::to_string(w.max_total) + ")";
  return res;
}

}  // namespace idealarith::zs
