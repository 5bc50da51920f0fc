#include "msdmv/scheme_combined.hpp"

#include "msdmv/error.hpp"

namespace msdmv::combined_scheme {

namespace {

// Fixed stream for the pairing layer of the named sets, so they are stable.
constexpr std::uint64_t kNamedSetSeed = 0x6d73646d76;

zn_scheme::Signature zn_part(const Signature& signature) {
  return {signature.r, signature.s, signature.t, signature.u_bar};
}

std::string describe(bool pairing_ok, bool zn_ok) {
  if (pairing_ok && zn_ok) return "accepted";
  if (!pairing_ok && !zn_ok) return "pairing check, zn check";
  return pairing_ok ? "zn check" : "pairing check";
}

}  // namespace

void Params::validate() const {
  pairing.validate();
  zn.validate();
  if (pairing.p != zn.p) throw ParameterError("pairing group order and Z_p* prime must coincide");
}

Params Params::named(std::string_view name) {
  Rng rng(kNamedSetSeed);
  return make_params(zn_scheme::Params::named(name), rng);
}

Params make_params(const zn_scheme::Params& zn, Rng& rng) {
  Params params{gen_pairing_params(zn.p, rng), zn};
  params.validate();
  return params;
}

Params random_params(Rng& rng) { return make_params(zn_scheme::random_params(rng), rng); }

MemberKey member_keygen(const Params& params, zn_scheme::Side side, Rng& rng) {
  auto pairing = pairing_scheme::keygen(params.pairing, rng);
  return {std::move(pairing), zn_scheme::member_keygen(params.zn, side, rng)};
}

GElem signer_aggregate(const Params& params, const std::vector<MemberKey>& signers) {
  std::vector<GElem> publics;
  for (const auto& m : signers) publics.push_back(m.pairing.public_point);
  return pairing_scheme::aggregate_public(publics, params.pairing);
}

GElem verifier_aggregate(const Params& params, const std::vector<MemberKey>& verifiers) {
  return signer_aggregate(params, verifiers);
}

Round1Share sign_round1(const Params& params, const MemberKey& member, const GElem& v,
                        const std::vector<BigInt>& verifier_pubs, const BigInt& k, std::string_view message) {
  auto zn = zn_scheme::sign_round1(params.zn, verifier_pubs, k);
  return {pairing_scheme::sign_share(message, member.pairing, v, params.pairing), std::move(zn)};
}

Challenge aggregate(const Params& params, std::string_view message, const std::vector<Round1Share>& shares,
                    const std::vector<BigInt>& verifier_e) {
  std::vector<pairing_scheme::Signature> sigmas;
  std::vector<zn_scheme::Round1Share> zn_shares;
  for (const auto& share : shares) {
    sigmas.push_back(share.sigma);
    zn_shares.push_back(share.zn);
  }
  return {pairing_scheme::combine(sigmas, params.pairing),
          zn_scheme::aggregate_challenge(params.zn, message, zn_shares, verifier_e)};
}

Signature finalize(const Params& params, const Challenge& challenge, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d) {
  const auto zn = zn_scheme::finalize(params.zn, responses, signer_d, challenge.zn);
  return {challenge.sigma.sigma, zn.r, zn.s, zn.t, zn.u_bar};
}

void check_well_formed(const Params& params, const Signature& signature) {
  if (!in_target_group(signature.sigma, params.pairing)) throw ParameterError("sigma is not in the target group");
  zn_scheme::check_well_formed(params.zn, zn_part(signature));
}

VerifierShare verifier_share(const Params& params, std::string_view message, const Signature& signature,
                             const MemberKey& verifier, const GElem& u) {
  return {pairing_scheme::verify_share(message, verifier.pairing, u, params.pairing),
          zn_scheme::decode_share(params.zn, zn_part(signature), verifier.zn)};
}

Verdict verify_with_shares(const Params& params, std::string_view message, const Signature& signature,
                           const std::vector<BigInt>& signer_e, const std::vector<BigInt>& signer_y,
                           const std::vector<BigInt>& verifier_d, const std::vector<VerifierShare>& shares) {
  check_well_formed(params, signature);
  std::vector<pairing_scheme::Signature> zetas;
  std::vector<BigInt> decode;
  for (const auto& share : shares) {
    zetas.push_back(share.zeta);
    decode.push_back(share.z);
  }
  Verdict out;
  out.pairing_ok = pairing_scheme::verify({signature.sigma}, zetas, params.pairing);
  out.zn = zn_scheme::verify(params.zn, message, zn_part(signature), signer_e, signer_y, verifier_d, decode);
  out.zn_ok = out.zn.accepted;
  out.accepted = out.pairing_ok && out.zn_ok;
  out.reason = describe(out.pairing_ok, out.zn_ok);
  return out;
}

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
               const Membership& membership) {
  check_well_formed(params, signature);
  const GElem u = signer_aggregate(params, membership.signers);
  std::vector<VerifierShare> shares;
  std::vector<BigInt> signer_e, signer_y, verifier_d;
  for (const auto& v : membership.verifiers) {
    shares.push_back(verifier_share(params, message, signature, v, u));
    verifier_d.push_back(v.zn.d);
  }
  for (const auto& s : membership.signers) {
    signer_e.push_back(s.zn.e);
    signer_y.push_back(s.zn.y);
  }
  return verify_with_shares(params, message, signature, signer_e, signer_y, verifier_d, shares);
}

Signature simulate_transcript(const Params& params, std::string_view message, const Membership& membership,
                              const BigInt& k, zn_scheme::SimulationMode mode) {
  const GElem u = signer_aggregate(params, membership.signers);
  std::vector<pairing_scheme::Signature> zetas;
  std::vector<zn_scheme::MemberKey> verifiers;
  for (const auto& v : membership.verifiers) {
    zetas.push_back(pairing_scheme::verify_share(message, v.pairing, u, params.pairing));
    verifiers.push_back(v.zn);
  }
  std::vector<BigInt> signer_e, signer_y;
  for (const auto& s : membership.signers) {
    signer_e.push_back(s.zn.e);
    signer_y.push_back(s.zn.y);
  }
  const auto zn = zn_scheme::simulate_transcript(params.zn, message, verifiers, signer_e, signer_y, k, mode);
  return {pairing_scheme::combine(zetas, params.pairing).sigma, zn.r, zn.s, zn.t, zn.u_bar};
}

Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                        const Membership& membership) {
  const Params mirror = params.mirrored();
  check_well_formed(mirror, simulated);
  const GElem v = verifier_aggregate(params, membership.verifiers);
  std::vector<pairing_scheme::Signature> sigmas;
  std::vector<BigInt> signer_d, signer_shares, verifier_e, verifier_y;
  for (const auto& s : membership.signers) {
    sigmas.push_back(pairing_scheme::sign_share(message, s.pairing, v, params.pairing));
    signer_d.push_back(s.zn.d);
    signer_shares.push_back(zn_scheme::decode_share(params.zn, zn_part(simulated), s.zn));
  }
  for (const auto& ver : membership.verifiers) {
    verifier_e.push_back(ver.zn.e);
    verifier_y.push_back(ver.zn.y);
  }
  Verdict out;
  out.pairing_ok = pairing_scheme::verify({simulated.sigma}, sigmas, params.pairing);
  out.zn = zn_scheme::verify_mirrored(params.zn, message, zn_part(simulated), verifier_e, verifier_y, signer_d,
                                      signer_shares);
  out.zn_ok = out.zn.accepted;
  out.accepted = out.pairing_ok && out.zn_ok;
  out.reason = describe(out.pairing_ok, out.zn_ok);
  return out;
}

}  // namespace msdmv::combined_scheme
