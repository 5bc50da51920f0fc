#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msdmv/scheme_pairing.hpp"
#include "msdmv/scheme_zn.hpp"

// Pairing scheme and Z_p^* scheme run side by side over one prime p. A
// signature (sigma, r, s, t, u_bar) is accepted only if both halves verify.
namespace msdmv::combined_scheme {

struct Params {
  PairingParams pairing;
  zn_scheme::Params zn;

  void validate() const;
  Params mirrored() const { return Params{pairing, zn.mirrored()}; }

  // The Z_p^* set of the same name with a pairing layer generated for its p.
  static Params named(std::string_view name);

  friend bool operator==(const Params&, const Params&) = default;
};

// Pairing layer for zn.p: q is the smallest prime = 1 mod p, h found with rng.
Params make_params(const zn_scheme::Params& zn, Rng& rng);
Params random_params(Rng& rng);

struct MemberKey {
  pairing_scheme::Member pairing;
  zn_scheme::MemberKey zn;
  friend bool operator==(const MemberKey&, const MemberKey&) = default;
};

MemberKey member_keygen(const Params& params, zn_scheme::Side side, Rng& rng);

struct Round1Share {
  pairing_scheme::Signature sigma;
  zn_scheme::Round1Share zn;
  friend bool operator==(const Round1Share&, const Round1Share&) = default;
};

struct Challenge {
  pairing_scheme::Signature sigma;
  zn_scheme::Challenge zn;
};

struct Signature {
  GTElem sigma;
  BigInt r;
  BigInt s;
  BigInt t;
  BigInt u_bar;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Public and private material of both systems. Only the public parts of the
// signers are read during verification.
struct Membership {
  std::vector<MemberKey> signers;
  std::vector<MemberKey> verifiers;
};

struct Verdict {
  bool accepted = false;
  bool pairing_ok = false;
  bool zn_ok = false;
  zn_scheme::Verdict zn;
  std::string reason;
};

GElem signer_aggregate(const Params& params, const std::vector<MemberKey>& signers);
GElem verifier_aggregate(const Params& params, const std::vector<MemberKey>& verifiers);

Round1Share sign_round1(const Params& params, const MemberKey& member, const GElem& v,
                        const std::vector<BigInt>& verifier_pubs, const BigInt& k, std::string_view message);

Challenge aggregate(const Params& params, std::string_view message, const std::vector<Round1Share>& shares,
                    const std::vector<BigInt>& verifier_e);

Signature finalize(const Params& params, const Challenge& challenge, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d);

void check_well_formed(const Params& params, const Signature& signature);

// Per-verifier material: pairing share zeta_j and decode share z_j.
struct VerifierShare {
  pairing_scheme::Signature zeta;
  BigInt z;
  friend bool operator==(const VerifierShare&, const VerifierShare&) = default;
};

VerifierShare verifier_share(const Params& params, std::string_view message, const Signature& signature,
                             const MemberKey& verifier, const GElem& u);

// Verification from public signer data, verifier private exponents and the
// verifiers' shares, all listed in matching order.
Verdict verify_with_shares(const Params& params, std::string_view message, const Signature& signature,
                           const std::vector<BigInt>& signer_e, const std::vector<BigInt>& signer_y,
                           const std::vector<BigInt>& verifier_d, const std::vector<VerifierShare>& shares);

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
               const Membership& membership);

// Tuple (zeta, r', s', t', u') produced by the verifiers alone.
Signature simulate_transcript(const Params& params, std::string_view message, const Membership& membership,
                              const BigInt& k, zn_scheme::SimulationMode mode);

// Mirrored check of a simulated tuple: the signers recompute sigma and decode
// s' with their own secrets.
Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                        const Membership& membership);

}  // namespace msdmv::combined_scheme
