#pragma once

#include <string_view>

#include "msdmv/bigint.hpp"
#include "msdmv/rng.hpp"

// Toy symmetric pairing over explicit small groups.
//
// WARNING: the pairing is evaluated by taking discrete logarithms in the
// additive group Z_p, which is trivial. It is algebraically exact and useful
// for reproducing small worked examples, and offers no security whatsoever.
namespace msdmv {

// G = (Z_p, +) generated by g; G_T = order-p subgroup of Z_q^* generated by
// h = e(g, g).
struct PairingParams {
  BigInt p;
  BigInt g;
  BigInt q;
  BigInt h;

  void validate() const;

  // "paper-ex1": p=11 over Z_23 with h=2; "paper-ex2": p=53 over Z_107 with h=3.
  static PairingParams named(std::string_view name);

  friend bool operator==(const PairingParams&, const PairingParams&) = default;
};

struct GElem {
  BigInt value;
  friend bool operator==(const GElem&, const GElem&) = default;
};

struct GTElem {
  BigInt value;
  friend bool operator==(const GTElem&, const GTElem&) = default;
};

PairingParams gen_pairing_params(const BigInt& p, Rng& rng);

// Random parameters with p a prime in [11, 1000).
PairingParams random_pairing_params(Rng& rng);

// x with a = x*g in Z_p.
BigInt dlog_additive(const GElem& a, const PairingParams& params);

GTElem pair(const GElem& a, const GElem& b, const PairingParams& params);

// SHA-256 of the message reduced into [1, p-1].
GElem hash_to_group(std::string_view message, const PairingParams& params);

GElem g_add(const GElem& a, const GElem& b, const PairingParams& params);
GElem g_scale(const BigInt& k, const GElem& a, const PairingParams& params);
GTElem gt_mul(const GTElem& a, const GTElem& b, const PairingParams& params);
GTElem gt_pow(const GTElem& a, const BigInt& k, const PairingParams& params);

bool in_group(const GElem& a, const PairingParams& params);
bool in_target_group(const GTElem& a, const PairingParams& params);

}  // namespace msdmv
