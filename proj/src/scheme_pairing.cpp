#include "msdmv/scheme_pairing.hpp"

#include "msdmv/error.hpp"

namespace msdmv::pairing_scheme {

Member member_from_secret(const BigInt& secret, const PairingParams& params) {
  if (secret < 1 || secret >= params.p) throw ParameterError("secret must lie in [1, p)");
  return {secret, g_scale(secret, GElem{params.g}, params)};
}

Member keygen(const PairingParams& params, Rng& rng) {
  return member_from_secret(rng.uniform(1, params.p - 1), params);
}

GElem aggregate_public(const std::vector<GElem>& publics, const PairingParams& params) {
  if (publics.empty()) throw ParameterError("cannot aggregate an empty key list");
  GElem sum{0};
  for (const auto& pub : publics) sum = g_add(sum, pub, params);
  return sum;
}

Signature sign_share_hashed(const GElem& hashed, const Member& signer, const GElem& v,
                            const PairingParams& params) {
  return {pair(hashed, g_scale(signer.secret, v, params), params)};
}

Signature sign_share(std::string_view message, const Member& signer, const GElem& v,
                     const PairingParams& params) {
  return sign_share_hashed(hash_to_group(message, params), signer, v, params);
}

Signature combine(const std::vector<Signature>& shares, const PairingParams& params) {
  if (shares.empty()) throw ParameterError("cannot combine an empty share list");
  GTElem acc{1};
  for (const auto& share : shares) acc = gt_mul(acc, share.sigma, params);
  return {acc};
}

Signature verify_share_hashed(const GElem& hashed, const Member& verifier, const GElem& u,
                              const PairingParams& params) {
  return {pair(hashed, g_scale(verifier.secret, u, params), params)};
}

Signature verify_share(std::string_view message, const Member& verifier, const GElem& u,
                       const PairingParams& params) {
  return verify_share_hashed(hash_to_group(message, params), verifier, u, params);
}

bool verify(const Signature& sigma, const std::vector<Signature>& zeta_shares, const PairingParams& params) {
  return sigma == combine(zeta_shares, params);
}

}  // namespace msdmv::pairing_scheme
