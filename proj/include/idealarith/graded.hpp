#pragma once

#include <string>
#include <vector>

#include "idealarith/groebner.hpp"

namespace idealarith::poly {

// Homogeneous component of an ideal (or any subspace of the degree-d
// forms), stored in reduced row echelon form: rows homogeneous of the
// stated degree, monic, strictly decreasing leading monomials, and each
// row carrying coefficient 0 at every other row's lead.
struct GradedPiece {
  int degree = 0;
  std::vector<Polynomial> rows;

  std::size_t dim() const { return rows.size(); }
  bool contains(const Polynomial& f) const;  // f must be homogeneous of this degree (or zero)
  friend bool operator==(const GradedPiece& a, const GradedPiece& b) {
    return a.degree == b.degree && a.rows == b.rows;
  }
};

// Reduced row echelon span of homogeneous degree-d polynomials.
// Inputs that are zero are dropped; a wrong-degree input throws.
GradedPiece echelon_span(int degree, std::vector<Polynomial> vecs);

// Degree-d component of the ideal: spanned by m * g_b over generators g,
// homogeneous parts g_b of degree b, and monomials m of degree d - b.
GradedPiece graded_piece(const Ideal& I, int d);

// Span of all pairwise products of rows; degree adds.
GradedPiece graded_product(const GradedPiece& V, const GradedPiece& W);

// Sufficient primary criteria for ideals of Q[X1,X2] supported on the
// first two variables. Returns which criterion fired, or NotShown.
enum class PrimaryEvidence {
  NotShown,
  MonomialPurePowers,   // monomial generators including pure powers of X1 and X2
  RadicalIsMaximal,     // proper ideal containing X1^N and X2^N for some N <= cap
};

struct PrimaryReport {
  PrimaryEvidence evidence = PrimaryEvidence::NotShown;
  int pure_power_exponent = 0;  // the N that witnessed containment
  std::string detail;
};

// Only inspects the two-variable situation; generators touching X3+ or a
// non-monomial generator fall through to the membership criterion.
PrimaryReport primary_check(const Ideal& I, int power_cap = 24);

// True when every generator is a single term.
bool is_monomial_ideal(const Ideal& I);

}  // namespace idealarith::poly
