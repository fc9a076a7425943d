#include "idealarith/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace idealarith::poly {

Polynomial Polynomial::from_terms(std::vector<Term> ts) {
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (auto& t : ts) acc[t.m] += t.c;
  Polynomial r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& mm) { return mm < t.m; });
  if (it != terms_.end() && it->m == m) return it->c;
  return Rational(0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

std::optional<long long> Polynomial::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  long long d = terms_.front().m.degree();
  for (const auto& t : terms_) d = std::min<long long>(d, t.m.degree());
  return d;
}

int Polynomial::max_var_index() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.m.max_var_index());
  return v;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r;
  for (const auto& t : terms_)
    if (t.m.degree() == d) r.terms_.push_back(t);
  return r;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().m.degree();
  for (const auto& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  // Merge of two descending term lists.
  Polynomial r;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    if (terms_[i].m == g.terms_[j].m) {
      Rational c = terms_[i].c + g.terms_[j].c;
      if (c != 0) r.terms_.push_back({terms_[i].m, std::move(c)});
      ++i, ++j;
    } else if (terms_[i].m > g.terms_[j].m) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(g.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < g.terms_.size()) r.terms_.push_back(g.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  std::map<Monomial, Rational, std::greater<Monomial>> acc;
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) acc[a.m * b.m] += a.c * b.c;
  Polynomial r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial{};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.m = t.m * m;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.m.is_one()) {
      s += idealarith::to_string(c);
    } else {
      if (c != 1) {
        s += idealarith::to_string(c);
        s += '*';
      }
      s += to_string(t.m);
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t p = 0;
  int nvars;

  explicit Parser(const std::string& text, int nv) : s(text), nvars(nv) {
    if (nvars < 1 || nvars > kPublicMaxVars)
      throw std::invalid_argument("variable count out of range [1," + std::to_string(kPublicMaxVars) + "]");
  }

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eof() {
    skip_ws();
    return p >= s.size();
  }
  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(p) + ": " + why +
                                " in \"" + s + "\"");
  }

  long parse_uint() {
    skip_ws();
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) fail("expected digit");
    long v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      v = v * 10 + (s[p] - '0');
      if (v > 1'000'000'000L) fail("integer literal too large");
      ++p;
    }
    return v;
  }

  Rational parse_coeff() {
    long num = parse_uint();
    skip_ws();
    if (p < s.size() && s[p] == '/') {
      ++p;
      long den = parse_uint();
      if (den == 0) fail("zero denominator");
      return rat(num, den);
    }
    return Rational(num);
  }

  // X, Y, or X<k>; returns zero-based variable index.
  int parse_var() {
    skip_ws();
    char c = s[p];
    if (c == 'Y' || c == 'y') {
      if (nvars < 2) fail("variable Y not available");
      ++p;
      return 1;
    }
    if (c != 'X' && c != 'x') fail("expected variable");
    ++p;
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      long k = parse_uint();
      if (k < 1 || k > nvars) fail("variable index out of range");
      return static_cast<int>(k) - 1;
    }
    return 0;  // bare X means X1
  }

  // coefficient? (var (^int)?)* with optional '*' separators
  Polynomial parse_term() {
    Rational c(1);
    Monomial m = Monomial::one();
    bool any = false;
    skip_ws();
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      c = parse_coeff();
      any = true;
    }
    for (;;) {
      skip_ws();
      std::size_t save = p;
      if (accept('*')) {
        skip_ws();
        if (p >= s.size()) fail("dangling '*'");
      }
      if (p < s.size() && (s[p] == 'X' || s[p] == 'x' || s[p] == 'Y' || s[p] == 'y')) {
        int v = parse_var();
        long e = 1;
        skip_ws();
        if (accept('^')) e = parse_uint();
        m = m * Monomial::var(v, static_cast<int>(e));
        any = true;
      } else if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])) && save != p) {
        // "a*b" with two numeric factors
        c *= parse_coeff();
      } else {
        p = save;
        break;
      }
    }
    if (!any) fail("expected term");
    return Polynomial(m, c);
  }

  Polynomial parse_sum() {
    Polynomial r;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    for (;;) {
      Polynomial t = parse_term();
      r += neg ? -t : t;
      skip_ws();
      if (accept('-'))
        neg = true;
      else if (accept('+'))
        neg = false;
      else
        break;
    }
    return r;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
  Parser ps(text, nvars);
  Polynomial f = ps.parse_sum();
  if (!ps.eof()) ps.fail("trailing input");
  return f;
}

std::vector<Polynomial> parse_ideal_literal(const std::string& text, int nvars) {
  std::size_t a = text.find('<');
  std::size_t b = text.rfind('>');
  if (a == std::string::npos || b == std::string::npos || b <= a)
    throw std::invalid_argument("ideal literal must look like <f1; f2; ...>: " + text);
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<Polynomial> gens;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t semi = body.find(';', start);
    std::string piece = body.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) gens.push_back(parse_polynomial(piece, nvars));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (gens.empty()) throw std::invalid_argument("ideal literal with no generators: " + text);
  return gens;
}

}  // namespace idealarith::poly
