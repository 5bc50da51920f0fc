#pragma once

// Independent reference arithmetic for tests: machine integers and brute
// force only, sharing no code with the library.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((unsigned __int128)a * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline std::optional<u64> brute_inverse(u64 a, u64 m) {
  for (u64 b = 1; b < m; ++b)
    if (mulmod(a, b, m) == 1 % m) return b;
  return std::nullopt;
}

inline u64 brute_order(u64 a, u64 m) {
  u64 acc = a % m;
  for (u64 e = 1; e < m; ++e) {
    if (acc == 1) return e;
    acc = mulmod(acc, a, m);
  }
  return 0;
}

inline bool brute_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// x with x*g = a in Z_p, by scanning.
inline u64 brute_dlog_additive(u64 a, u64 g, u64 p) {
  for (u64 x = 0; x < p; ++x)
    if (x * g % p == a % p) return x;
  return p;
}

// Affine short-Weierstrass arithmetic over small primes.
struct Pt {
  bool inf = true;
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const Pt&, const Pt&) = default;
};

inline i64 md(i64 v, i64 p) { return ((v % p) + p) % p; }

inline i64 inv_mod(i64 a, i64 p) { return static_cast<i64>(powmod(static_cast<u64>(md(a, p)), p - 2, p)); }

inline Pt add(const Pt& P, const Pt& Q, i64 a, i64 p) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  if (P.x == Q.x && md(P.y + Q.y, p) == 0) return Pt{};
  i64 lambda;
  if (P == Q) {
    lambda = md((3 * P.x % p * P.x + a) % p * inv_mod(2 * P.y, p), p);
  } else {
    lambda = md(md(Q.y - P.y, p) * inv_mod(Q.x - P.x, p), p);
  }
  const i64 x = md(lambda * lambda - P.x - Q.x, p);
  const i64 y = md(lambda * (P.x - x) - P.y, p);
  return Pt{false, x, y};
}

inline Pt neg(const Pt& P, i64 p) { return P.inf ? P : Pt{false, P.x, md(-P.y, p)}; }

// Repeated addition, no doubling shortcut.
inline Pt mul_slow(u64 k, const Pt& P, i64 a, i64 p) {
  Pt acc;
  for (u64 i = 0; i < k; ++i) acc = add(acc, P, a, p);
  return acc;
}

inline u64 count_points(i64 p, i64 a, i64 b) {
  u64 count = 1;
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y)
      if (md(y * y - (x * x % p * x + a * x + b), p) == 0) ++count;
  return count;
}

inline std::vector<Pt> all_points(i64 p, i64 a, i64 b) {
  std::vector<Pt> out{Pt{}};
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y)
      if (md(y * y - (x * x % p * x + a * x + b), p) == 0) out.push_back(Pt{false, x, y});
  return out;
}

}  // namespace oracle
