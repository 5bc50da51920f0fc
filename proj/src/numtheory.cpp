#include "msdmv/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "msdmv/error.hpp"

namespace msdmv {

namespace mp = boost::multiprecision;

NotInvertibleError::NotInvertibleError(const BigInt& value, const BigInt& modulus, BigInt gcd)
    : Error(to_decimal(value) + " is not invertible modulo " + to_decimal(modulus) +
            " (gcd " + to_decimal(gcd) + ")"),
      gcd_(std::move(gcd)) {}

BigInt parse_decimal(std::string_view text) {
  if (text.empty() || text.size() > 4096) throw ParameterError("expected a decimal integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw ParameterError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  // Boost reads a leading zero as an octal prefix, so only canonical forms pass.
  if (text.size() > 1 && text[0] == '0') throw ParameterError("leading zero in '" + std::string(text) + "'");
  return BigInt(std::string(text));
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt mod_floor(const BigInt& a, const BigInt& modulus) {
  BigInt r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus < 2) throw ParameterError("modulus must be at least 2");
  if (exp < 0) throw ParameterError("exponent must be nonnegative");
  return mp::powm(mod_floor(base, modulus), exp, modulus);
}

BigInt mod_inv(const BigInt& a, const BigInt& modulus) {
  if (modulus < 2) throw ParameterError("modulus must be at least 2");
  BigInt old_r = mod_floor(a, modulus), r = modulus;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw NotInvertibleError(a, modulus, old_r);
  return mod_floor(old_s, modulus);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    const auto v = static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 5; d <= v / d; d += 6) {
      if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
  }
  for (BigInt d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<BigInt> prime_factors(const BigInt& n) {
  if (n < 1) throw ParameterError("can only factor positive integers");
  std::vector<BigInt> out;
  BigInt rest = n;
  for (BigInt d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    while (rest % d == 0) {
      out.push_back(d);
      rest /= d;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  const auto factors = prime_factors(n);
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    const std::size_t base = out.size();
    BigInt power = 1;
    for (std::size_t e = i; e < j; ++e) {
      power *= factors[i];
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * power);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt element_order(const BigInt& a, const BigInt& modulus) {
  if (modulus < 2) throw ParameterError("modulus must be at least 2");
  const BigInt reduced = mod_floor(a, modulus);
  if (reduced == 0) throw ParameterError("zero has no multiplicative order");
  for (const auto& d : divisors(modulus - 1)) {
    if (mod_pow(reduced, d, modulus) == 1) return d;
  }
  throw ParameterError("element order not found; is the modulus prime?");
}

BigInt find_element_of_order(const BigInt& target_order, const BigInt& modulus, Rng& rng) {
  if (target_order < 1 || (modulus - 1) % target_order != 0) {
    throw ParameterError(to_decimal(target_order) + " does not divide " + to_decimal(modulus) + " - 1");
  }
  if (target_order == 1) return 1;
  const BigInt cofactor = (modulus - 1) / target_order;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const BigInt t = rng.uniform(1, modulus - 1);
    const BigInt g = mod_pow(t, cofactor, modulus);
    if (element_order(g, modulus) == target_order) return g;
  }
  throw SearchFailure("no element of order " + to_decimal(target_order) + " found");
}

std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p) {
  const BigInt n = mod_floor(a, p);
  if (n == 0) return 0;
  if (p == 2) return n;
  if (mod_pow(n, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(n, (p + 1) / 4, p);
  // Tonelli-Shanks.
  BigInt q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  BigInt c = mod_pow(z, q, p);
  BigInt x = mod_pow(n, (q + 1) / 2, p);
  BigInt t = mod_pow(n, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    BigInt t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return x;
}

Semiprime Semiprime::make(const BigInt& p_factor, const BigInt& q_factor) {
  if (!is_prime(p_factor) || !is_prime(q_factor)) throw ParameterError("semiprime factors must be prime");
  if (p_factor == q_factor) throw ParameterError("semiprime factors must be distinct");
  return Semiprime{p_factor, q_factor, p_factor * q_factor, (p_factor - 1) * (q_factor - 1)};
}

Semiprime Semiprime::from_modulus(const BigInt& n) {
  if (n < 6) throw ParameterError(to_decimal(n) + " is not a square-free semiprime");
  const auto factors = prime_factors(n);
  if (factors.size() != 2 || factors[0] == factors[1]) {
    throw ParameterError(to_decimal(n) + " is not a square-free semiprime");
  }
  return make(factors[0], factors[1]);
}

BigInt product(const std::vector<BigInt>& values) {
  BigInt out = 1;
  for (const auto& v : values) out *= v;
  return out;
}

}  // namespace msdmv
