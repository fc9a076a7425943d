#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace idealarith::poly {

// Hard limit of the exponent storage. The public ring is capped at
// kPublicMaxVars; the headroom above that is used by the internal solver
// ring of the atom-certification engine.
inline constexpr int kStorageVars = 8;
inline constexpr int kPublicMaxVars = 4;

struct errors {
  struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
  };
};

// Power product X1^e0 * ... * X8^e7. Comparison is lexicographic with
// X1 > X2 > ... which is exactly elementwise array comparison.
struct Monomial {
  std::array<std::uint16_t, kStorageVars> e{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, int power = 1) {
    if (i < 0 || i >= kStorageVars || power < 0)
      throw std::invalid_argument("bad variable index or power");
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  int max_var_index() const {  // largest i with e[i] > 0, or -1
    for (int i = kStorageVars - 1; i >= 0; --i)
      if (e[static_cast<std::size_t>(i)] > 0) return i;
    return -1;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kStorageVars; ++i)
      if (e[static_cast<std::size_t>(i)] > m.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kStorageVars; ++i) {
      unsigned s = unsigned(e[static_cast<std::size_t>(i)]) + unsigned(m.e[static_cast<std::size_t>(i)]);
      if (s > 0xffffu) throw errors::cap_exceeded("monomial exponent overflow");
      r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  // Precondition: m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kStorageVars; ++i) {
      if (m.e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i)])
        throw std::invalid_argument("monomial quotient is not a monomial");
      r.e[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)] - m.e[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kStorageVars; ++i)
      r.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kStorageVars; ++i)
      if (a.e[static_cast<std::size_t>(i)] && b.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
};

// "X1^2*X2" style; "1" for the empty product.
inline std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kStorageVars; ++i) {
    auto x = m.e[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    if (!s.empty()) s += '*';
    s += 'X';
    s += std::to_string(i + 1);
    if (x > 1) {
      s += '^';
      s += std::to_string(x);
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace idealarith::poly
