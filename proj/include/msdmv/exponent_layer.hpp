#pragma once

#include <vector>

#include "msdmv/bigint.hpp"
#include "msdmv/rng.hpp"

// RSA-style exponent layer shared by the Z_p* and elliptic-curve schemes.
// All exponents are full products of member exponents; nothing is reduced
// modulo phi, so the round trip holds for every residue of a square-free n.
namespace msdmv::exponent_layer {

// Public exponent coprime to phi, uniform over such values in [3, 2*phi+3].
BigInt sample_exponent(const BigInt& phi, Rng& rng);

// t = z^(prod e) mod n
BigInt blind(const BigInt& z, const std::vector<BigInt>& exponents, const BigInt& n);

// v_bar = sum(v_i) mod n
BigInt aggregate_responses(const std::vector<BigInt>& responses, const BigInt& n);

// u_bar = v_bar^(prod d) mod n
BigInt seal(const BigInt& v_bar, const std::vector<BigInt>& exponents, const BigInt& n);

// a = u_bar^(prod e) mod n, or b = t^(prod d) mod n.
BigInt unseal(const BigInt& value, const std::vector<BigInt>& exponents, const BigInt& n);

}  // namespace msdmv::exponent_layer
