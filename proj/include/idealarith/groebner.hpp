#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idealarith/polynomial.hpp"

namespace idealarith::poly {

// Resource guards for basis computation. Exceeding any of them raises
// errors::cap_exceeded; there is no silent truncation.
struct GroebnerOptions {
  int max_degree = 64;            // degree guard on intermediate polynomials
  std::size_t max_basis = 4096;   // basis rows during the completion loop
  std::size_t max_pairs = 500000; // critical pairs processed
};

// Full normal form of f against G (every term reduced). G rows must be
// nonzero; reduction picks the first row in list order whose lead divides
// the current term, so the result is deterministic for a fixed G order.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

// Unique reduced lex Groebner basis: rows monic, pairwise fully reduced,
// sorted by strictly decreasing leading monomial. Pair selection is the
// normal strategy: smallest lcm degree first, lex ties on the lcm, then
// insertion order. Input generators may be zero (ignored) but not all.
std::vector<Polynomial> reduced_groebner(std::vector<Polynomial> gens, const GroebnerOptions& opt = {});

// Nonzero ideal of Q[X1..Xn] presented by generators, with a lazily
// computed cached reduced basis. Value type; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<Polynomial> gens, GroebnerOptions opt = {});

  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& basis() const;  // reduced Groebner basis
  bool basis_ready() const;

  bool contains(const Polynomial& f) const;
  bool is_whole_ring() const;  // basis == {1}
  int nvars() const { return nvars_; }

  // mdeg: minimum over generators of their minimal term degree.
  // nullopt encodes +infinity (only for the zero ideal, which the
  // constructor rejects, so callers normally see a value).
  std::optional<long long> min_degree() const;

  friend bool equal(const Ideal& a, const Ideal& b);
  friend Ideal product(const Ideal& a, const Ideal& b);

  // Canonical text of the reduced basis, used for keys and hashes.
  std::string basis_text() const;

 private:
  std::vector<Polynomial> gens_;
  GroebnerOptions opt_;
  int nvars_ = 0;
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> gb;
  };
  std::shared_ptr<Cache> cache_;
};

Ideal power(const Ideal& a, int k);

// Stable 64-bit FNV-1a over the canonical basis text; identification only.
std::uint64_t basis_hash(const Ideal& I);
std::string basis_hash_hex(const Ideal& I);

}  // namespace idealarith::poly
