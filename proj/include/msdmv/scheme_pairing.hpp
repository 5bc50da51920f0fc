#pragma once

#include <string_view>
#include <vector>

#include "msdmv/pairing_group.hpp"

// Pairing-based multi-signer designated multi-verifier signature.
//
// Each signer i holds a_i with public p_i = a_i*g, each verifier j holds b_j
// with public q_j = b_j*g; u = sum p_i and v = sum q_j are published. A signer
// share is e(H1(M), a_i*v) and a verifier share is e(H1(M), b_j*u); both
// products equal e(H1(M), g)^(sum a * sum b).
namespace msdmv::pairing_scheme {

struct Member {
  BigInt secret;
  GElem public_point;
  friend bool operator==(const Member&, const Member&) = default;
};

struct Signature {
  GTElem sigma;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Member member_from_secret(const BigInt& secret, const PairingParams& params);
Member keygen(const PairingParams& params, Rng& rng);

GElem aggregate_public(const std::vector<GElem>& publics, const PairingParams& params);

Signature sign_share(std::string_view message, const Member& signer, const GElem& v,
                     const PairingParams& params);
// Same with H1(M) supplied directly.
Signature sign_share_hashed(const GElem& hashed, const Member& signer, const GElem& v,
                            const PairingParams& params);

Signature combine(const std::vector<Signature>& shares, const PairingParams& params);

Signature verify_share(std::string_view message, const Member& verifier, const GElem& u,
                       const PairingParams& params);
Signature verify_share_hashed(const GElem& hashed, const Member& verifier, const GElem& u,
                              const PairingParams& params);

bool verify(const Signature& sigma, const std::vector<Signature>& zeta_shares, const PairingParams& params);

}  // namespace msdmv::pairing_scheme
