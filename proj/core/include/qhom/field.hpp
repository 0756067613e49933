#pragma once

#include <cstdint>
#include <string>

#include "qhom/errors.hpp"

namespace qhom {

// Ground field: F_p for a prime p, or Q when characteristic == 0.
struct Field {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }
  bool is_finite() const { return characteristic != 0; }
  std::int64_t p() const { return static_cast<std::int64_t>(characteristic); }

  bool operator==(const Field&) const = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  static Field rationals() { return Field{0}; }
  static Field fp(std::uint32_t p) {
    if (!is_prime(p)) fail(ErrorKind::Input, "field characteristic must be 0 or prime, got " + std::to_string(p));
    return Field{p};
  }
  static Field make(std::uint32_t c) { return c == 0 ? rationals() : fp(c); }

  std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(characteristic); }
};

// Arithmetic on canonical residues 0 <= a < p.  p < 2^31 so products fit in int64.
namespace fp {

inline std::int64_t norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}
inline std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }
inline std::int64_t neg(std::int64_t a, std::int64_t p) { return a == 0 ? 0 : p - a; }

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  require(a % p != 0, "division by zero in F_p");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = norm(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  return norm(t, p);
}

}  // namespace fp
}  // namespace qhom
