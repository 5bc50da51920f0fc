#include "msdmv/pairing_group.hpp"

#include "msdmv/error.hpp"
#include "msdmv/hash.hpp"
#include "msdmv/numtheory.hpp"

namespace msdmv {

void PairingParams::validate() const {
  if (!is_prime(p)) throw ParameterError("pairing group order p must be prime");
  if (!is_prime(q)) throw ParameterError("target modulus q must be prime");
  if ((q - 1) % p != 0) throw ParameterError("p must divide q - 1");
  if (g < 1 || g >= p) throw ParameterError("generator g must lie in [1, p)");
  if (h < 2 || h >= q || element_order(h, q) != p) throw ParameterError("h must have order p modulo q");
}

PairingParams PairingParams::named(std::string_view name) {
  if (name == "paper-ex1") return {11, 2, 23, 2};
  if (name == "paper-ex2") return {53, 5, 107, 3};
  throw ParameterError("unknown pairing parameter set '" + std::string(name) + "'");
}

PairingParams gen_pairing_params(const BigInt& p, Rng& rng) {
  if (!is_prime(p)) throw ParameterError(to_decimal(p) + " is not prime");
  BigInt q = p + 1;
  bool found = false;
  for (int k = 1; k <= 1'000'000; ++k, q += p) {
    if (is_prime(q)) {
      found = true;
      break;
    }
  }
  if (!found) throw SearchFailure("no prime q = 1 mod " + to_decimal(p) + " within scan budget");
  PairingParams params;
  params.p = p;
  params.g = p == 2 ? 1 : 2;
  params.q = q;
  params.h = find_element_of_order(p, q, rng);
  return params;
}

PairingParams random_pairing_params(Rng& rng) {
  BigInt p;
  do {
    p = rng.uniform(11, 999);
  } while (!is_prime(p));
  return gen_pairing_params(p, rng);
}

BigInt dlog_additive(const GElem& a, const PairingParams& params) {
  return mod_floor(a.value * mod_inv(params.g, params.p), params.p);
}

GTElem pair(const GElem& a, const GElem& b, const PairingParams& params) {
  const BigInt x = dlog_additive(a, params);
  const BigInt y = dlog_additive(b, params);
  return {mod_pow(params.h, x * y % params.p, params.q)};
}

GElem hash_to_group(std::string_view message, const PairingParams& params) {
  return {digest_to_int(sha256(message)) % (params.p - 1) + 1};
}

GElem g_add(const GElem& a, const GElem& b, const PairingParams& params) {
  return {mod_floor(a.value + b.value, params.p)};
}

GElem g_scale(const BigInt& k, const GElem& a, const PairingParams& params) {
  return {mod_floor(k * a.value, params.p)};
}

GTElem gt_mul(const GTElem& a, const GTElem& b, const PairingParams& params) {
  return {a.value * b.value % params.q};
}

GTElem gt_pow(const GTElem& a, const BigInt& k, const PairingParams& params) {
  return {mod_pow(a.value, k, params.q)};
}

bool in_group(const GElem& a, const PairingParams& params) { return a.value >= 0 && a.value < params.p; }

bool in_target_group(const GTElem& a, const PairingParams& params) {
  return a.value >= 1 && a.value < params.q && mod_pow(a.value, params.p, params.q) == 1;
}

}  // namespace msdmv
