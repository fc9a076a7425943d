#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealarith/monomial.hpp"
#include "idealarith/rational.hpp"

namespace idealarith::poly {

struct Term {
  Monomial m;
  Rational c;  // never zero in a normalized polynomial
  friend bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }
};

// Canonical form: terms sorted by strictly decreasing monomial (lex,
// X1 > X2 > ...), no zero coefficients. Equality is representational.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational c) {
    if (c != 0) terms_.push_back({Monomial::one(), std::move(c)});
  }
  Polynomial(Monomial m, Rational c) {
    if (c != 0) terms_.push_back({std::move(m), std::move(c)});
  }

  // Sorts, merges and drops zeros.
  static Polynomial from_terms(std::vector<Term> ts);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const;                 // throws on zero
  const Monomial& leading_monomial() const { return leading().m; }
  const Rational& leading_coeff() const { return leading().c; }

  Rational coeff(const Monomial& m) const;     // 0 if absent
  int degree() const;                          // -1 for the zero polynomial
  std::optional<long long> min_degree() const; // nullopt encodes +infinity (zero polynomial)
  int max_var_index() const;                   // -1 if constant

  Polynomial homogeneous_part(int d) const;    // sum of degree-d terms
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial monic() const;  // divide by leading coefficient; zero stays zero

 private:
  std::vector<Term> terms_;
};

inline Polynomial var(int i, int power = 1) { return Polynomial(Monomial::var(i, power), 1); }

// Canonical text form, e.g. "X1^3 + 3/2*X1*X2 - X2^2".
std::string to_string(const Polynomial& f);

// Grammar: sums of terms; a term is an optional rational coefficient and
// power products of variables X1..Xn (X, Y accepted as aliases of X1, X2),
// with '^' for powers and '*' optional. nvars bounds the accepted
// variable indices; at most kPublicMaxVars.
Polynomial parse_polynomial(const std::string& text, int nvars = 2);

// "<f1; f2; ...>"; at least one generator.
std::vector<Polynomial> parse_ideal_literal(const std::string& text, int nvars = 2);

}  // namespace idealarith::poly
