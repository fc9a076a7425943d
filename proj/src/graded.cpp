#include "idealarith/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealarith::poly {

bool GradedPiece::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous() || f.degree() != degree) return false;
  Polynomial r = f;
  for (const auto& row : rows) {
    Rational c = r.coeff(row.leading_monomial());
    if (c != 0) r -= row * c;
  }
  return r.is_zero();
}

GradedPiece echelon_span(int degree, std::vector<Polynomial> vecs) {
  std::vector<Polynomial> rows;
  for (auto& v : vecs) {
    if (v.is_zero()) continue;
    if (!v.is_homogeneous() || v.degree() != degree)
      throw std::invalid_argument("echelon_span wants homogeneous inputs of the stated degree");
    // Eliminate existing pivots, then either vanish or become a new row.
    for (const auto& row : rows) {
      Rational c = v.coeff(row.leading_monomial());
      if (c != 0) v -= row * c;
    }
    if (v.is_zero()) continue;
    v = v.monic();
    // Clear the new pivot from the other rows to keep reduced form.
    for (auto& row : rows) {
      Rational c = row.coeff(v.leading_monomial());
      if (c != 0) row -= v * c;
    }
    rows.push_back(std::move(v));
  }
  std::sort(rows.begin(), rows.end(),
            [](const Polynomial& a, const Polynomial& b) { return b.leading_monomial() < a.leading_monomial(); });
  return GradedPiece{degree, std::move(rows)};
}

GradedPiece graded_piece(const Ideal& I, int d) {
  if (d < 0) throw std::invalid_argument("graded piece of negative degree");
  std::vector<Polynomial> vecs;
  int nv = I.nvars();
  // Monomials of degree k in nv variables, generated recursively.
  auto monomials_of_degree = [&](int k) {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == nv - 1) {
        cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        cur.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
        self(self, var + 1, remaining - e);
      }
      cur.e[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, k);
    return out;
  };
  for (const auto& g : I.generators()) {
    if (g.is_zero()) continue;
    for (int b = 0; b <= d; ++b) {
      Polynomial gb = g.homogeneous_part(b);
      if (gb.is_zero()) continue;
      for (const auto& m : monomials_of_degree(d - b)) vecs.push_back(gb * m);
    }
  }
  return echelon_span(d, std::move(vecs));
}

GradedPiece graded_product(const GradedPiece& V, const GradedPiece& W) {
  std::vector<Polynomial> vecs;
  vecs.reserve(V.rows.size() * W.rows.size());
  for (const auto& v : V.rows)
    for (const auto& w : W.rows) vecs.push_back(v * w);
  return echelon_span(V.degree + W.degree, std::move(vecs));
}

bool is_monomial_ideal(const Ideal& I) {
  for (const auto& g : I.generators())
    if (g.size() != 1) return false;
  return true;
}

PrimaryReport primary_check(const Ideal& I, int power_cap) {
  PrimaryReport rep;
  if (I.nvars() > 2) {
    rep.detail = "generators touch more than two variables";
    return rep;
  }
  if (is_monomial_ideal(I)) {
    bool p1 = false, p2 = false;
    int n1 = 0, n2 = 0;
    for (const auto& g : I.generators()) {
      const Monomial& m = g.leading_monomial();
      if (m.e[1] == 0 && m.e[0] > 0) p1 = true, n1 = std::max<int>(n1, m.e[0]);
      if (m.e[0] == 0 && m.e[1] > 0) p2 = true, n2 = std::max<int>(n2, m.e[1]);
    }
    if (p1 && p2) {
      rep.evidence = PrimaryEvidence::MonomialPurePowers;
      rep.pure_power_exponent = std::max(n1, n2);
      rep.detail = "monomial ideal with pure powers of X1 and X2 among the generators";
      return rep;
    }
    rep.detail = "monomial ideal without pure powers of both variables";
    return rep;
  }
  // A proper ideal containing X1^N and X2^N has maximal radical <X1,X2>,
  // hence is primary.
  if (I.is_whole_ring()) {
    rep.detail = "ideal is the whole ring";
    return rep;
  }
  for (int n = 1; n <= power_cap; ++n) {
    if (I.contains(var(0, n)) && I.contains(var(1, n))) {
      rep.evidence = PrimaryEvidence::RadicalIsMaximal;
      rep.pure_power_exponent = n;
      rep.detail = "proper ideal containing X1^" + std::to_string(n) + " and X2^" + std::to_string(n);
      return rep;
    }
  }
  rep.detail = "no pure-power membership found up to exponent " + std::to_string(power_cap);
  return rep;
}

}  // namespace idealarith::poly
