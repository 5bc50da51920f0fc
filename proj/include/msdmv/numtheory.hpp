#pragma once

#include <optional>
#include <vector>

#include "msdmv/bigint.hpp"
#include "msdmv/rng.hpp"

namespace msdmv {

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Throws NotInvertibleError (carrying the gcd) when gcd(a, modulus) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& modulus);

// Least nonnegative residue, also for negative inputs.
BigInt mod_floor(const BigInt& a, const BigInt& modulus);

bool is_prime(const BigInt& n);

// Prime factorisation by trial division, ascending, with multiplicity.
std::vector<BigInt> prime_factors(const BigInt& n);

// All positive divisors of n, ascending.
std::vector<BigInt> divisors(const BigInt& n);

// Multiplicative order of a modulo a prime.
BigInt element_order(const BigInt& a, const BigInt& modulus);

// Random element of exactly the given order modulo a prime.
BigInt find_element_of_order(const BigInt& target_order, const BigInt& modulus, Rng& rng);

// Square root modulo a prime; nullopt for non-residues.
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p);

struct Semiprime {
  BigInt p_factor;
  BigInt q_factor;
  BigInt n;
  BigInt phi;

  static Semiprime make(const BigInt& p_factor, const BigInt& q_factor);
  // Factors n and checks it is a product of two distinct primes.
  static Semiprime from_modulus(const BigInt& n);

  friend bool operator==(const Semiprime&, const Semiprime&) = default;
};

BigInt product(const std::vector<BigInt>& values);

}  // namespace msdmv
