#include "msdmv/participant.hpp"

#include "msdmv/error.hpp"

namespace msdmv::session {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

GElem pairing_sum(const std::vector<RosterEntry>& roster, const PairingParams& params) {
  std::vector<GElem> points;
  for (const auto& entry : roster) {
    if (const auto* k = std::get_if<PairingPublic>(&entry.key)) points.push_back(k->point);
    if (const auto* k = std::get_if<CombinedPublic>(&entry.key)) points.push_back(k->point);
  }
  return pairing_scheme::aggregate_public(points, params);
}

std::vector<BigInt> exponents_of(const std::vector<RosterEntry>& roster) {
  std::vector<BigInt> out;
  for (const auto& entry : roster) {
    if (const auto* k = std::get_if<ZnPublic>(&entry.key)) out.push_back(k->e);
    if (const auto* k = std::get_if<EcPublic>(&entry.key)) out.push_back(k->e);
    if (const auto* k = std::get_if<CombinedPublic>(&entry.key)) out.push_back(k->e);
  }
  return out;
}

std::vector<BigInt> zn_ys(const std::vector<RosterEntry>& roster) {
  std::vector<BigInt> out;
  for (const auto& entry : roster) {
    if (const auto* k = std::get_if<ZnPublic>(&entry.key)) out.push_back(k->y);
    if (const auto* k = std::get_if<CombinedPublic>(&entry.key)) out.push_back(k->y);
  }
  return out;
}

std::vector<Point> ec_ys(const std::vector<RosterEntry>& roster) {
  std::vector<Point> out;
  for (const auto& entry : roster) out.push_back(std::get<EcPublic>(entry.key).y);
  return out;
}

template <class T>
std::vector<T> shares_in_order(const SessionState& state) {
  std::vector<T> out;
  for (const auto& entry : state.roster_b) out.push_back(std::get<T>(state.verify_shares.at(entry.id)));
  return out;
}

const Signature& require_signature(const SessionState& state) {
  if (!state.signature) throw SequencingError("no signature in phase " + std::string(to_string(state.phase)));
  return *state.signature;
}

ProtocolMessage make(const SessionState& state, std::string sender, RoundTag round, Payload payload) {
  return ProtocolMessage{state.id, std::move(sender), round, std::move(payload)};
}

std::string member_id(char prefix, std::size_t index) { return std::string(1, prefix) + std::to_string(index + 1); }

}  // namespace

SchemeParams named_params(SchemeTag scheme, std::string_view name) {
  switch (scheme) {
    case SchemeTag::s1: return PairingParams::named(name);
    case SchemeTag::s2: return zn_scheme::Params::named(name);
    case SchemeTag::s3: return ec_scheme::Params::named(name);
    case SchemeTag::combined: return combined_scheme::Params::named(name);
  }
  throw ParameterError("unknown scheme");
}

SchemeParams random_params(SchemeTag scheme, Rng& rng) {
  switch (scheme) {
    case SchemeTag::s1: return random_pairing_params(rng);
    case SchemeTag::s2: return zn_scheme::random_params(rng);
    case SchemeTag::s3: return ec_scheme::random_params(rng);
    case SchemeTag::combined: return combined_scheme::random_params(rng);
  }
  throw ParameterError("unknown scheme");
}

MemberSecret generate_key(const SchemeParams& params, zn_scheme::Side side, Rng& rng) {
  return std::visit(
      Overloaded{[&](const PairingParams& p) -> MemberSecret { return pairing_scheme::keygen(p, rng); },
                 [&](const zn_scheme::Params& p) -> MemberSecret { return zn_scheme::member_keygen(p, side, rng); },
                 [&](const ec_scheme::Params& p) -> MemberSecret { return ec_scheme::member_keygen(p, side, rng); },
                 [&](const combined_scheme::Params& p) -> MemberSecret {
                   return combined_scheme::member_keygen(p, side, rng);
                 }},
      params);
}

Membership generate_membership(SchemeTag scheme, SchemeParams params, std::size_t signers, std::size_t verifiers,
                               Rng& rng) {
  if (signers == 0 || verifiers == 0) throw ParameterError("membership needs at least one signer and one verifier");
  Membership out{scheme, std::move(params), {}, {}};
  for (std::size_t i = 0; i < signers; ++i) {
    out.signers.push_back({member_id('S', i), generate_key(out.params, zn_scheme::Side::A, rng)});
  }
  for (std::size_t j = 0; j < verifiers; ++j) {
    out.verifiers.push_back({member_id('D', j), generate_key(out.params, zn_scheme::Side::B, rng)});
  }
  return out;
}

RosterEntry public_entry(const Participant& participant) {
  PublicKey key = std::visit(
      Overloaded{[](const pairing_scheme::Member& m) -> PublicKey { return PairingPublic{m.public_point}; },
                 [](const zn_scheme::MemberKey& k) -> PublicKey { return ZnPublic{k.e, k.y}; },
                 [](const ec_scheme::MemberKey& k) -> PublicKey { return EcPublic{k.e, k.y}; },
                 [](const combined_scheme::MemberKey& k) -> PublicKey {
                   return CombinedPublic{k.pairing.public_point, k.zn.e, k.zn.y};
                 }},
      participant.key);
  return {participant.id, std::move(key)};
}

SessionState open_session(const Membership& membership, std::string id, std::string message) {
  std::vector<RosterEntry> roster_a, roster_b;
  for (const auto& s : membership.signers) roster_a.push_back(public_entry(s));
  for (const auto& v : membership.verifiers) roster_b.push_back(public_entry(v));
  return session_create(std::move(id), membership.scheme, membership.params, std::move(message), std::move(roster_a),
                        std::move(roster_b));
}

BigInt sample_nonce(const SchemeParams& params, Rng& rng) {
  return std::visit(Overloaded{[](const PairingParams&) { return BigInt(0); },
                               [&](const zn_scheme::Params& p) { return rng.uniform(1, p.p - 1); },
                               [&](const ec_scheme::Params& p) { return rng.uniform(1, p.curve.p - 1); },
                               [&](const combined_scheme::Params& p) { return rng.uniform(1, p.zn.p - 1); }},
                    params);
}

ProtocolMessage round1_message(const SessionState& state, const Participant& signer, const BigInt& k) {
  Payload payload = std::visit(
      Overloaded{[&](const PairingParams& p) -> Payload {
                   return pairing_scheme::sign_share(state.message, std::get<pairing_scheme::Member>(signer.key),
                                                     pairing_sum(state.roster_b, p), p);
                 },
                 [&](const zn_scheme::Params& p) -> Payload {
                   return zn_scheme::sign_round1(p, zn_ys(state.roster_b), k);
                 },
                 [&](const ec_scheme::Params& p) -> Payload {
                   return ec_scheme::sign_round1(p, ec_ys(state.roster_b), k);
                 },
                 [&](const combined_scheme::Params& p) -> Payload {
                   return combined_scheme::sign_round1(p, std::get<combined_scheme::MemberKey>(signer.key),
                                                       pairing_sum(state.roster_b, p.pairing), zn_ys(state.roster_b),
                                                       k, state.message);
                 }},
      state.params);
  return make(state, signer.id, RoundTag::round1, std::move(payload));
}

ProtocolMessage round2_message(const SessionState& state, const Participant& signer, const BigInt& k) {
  if (!state.challenge) throw SequencingError("no challenge has been published");
  BigInt v = std::visit(
      Overloaded{[&](const zn_scheme::MemberKey& key) {
                   return zn_scheme::sign_round2(std::get<zn_scheme::Challenge>(*state.challenge), key, k);
                 },
                 [&](const ec_scheme::MemberKey& key) {
                   return ec_scheme::sign_round2(std::get<ec_scheme::Challenge>(*state.challenge), key, k);
                 },
                 [&](const combined_scheme::MemberKey& key) {
                   return zn_scheme::sign_round2(std::get<combined_scheme::Challenge>(*state.challenge).zn, key.zn, k);
                 },
                 [](const pairing_scheme::Member&) -> BigInt {
                   throw SequencingError("the pairing scheme has no second round");
                 }},
      signer.key);
  return make(state, signer.id, RoundTag::round2, Response{std::move(v)});
}

ProtocolMessage deliver_message(const SessionState& state) {
  return make(state, std::string(kSystemA), RoundTag::deliver, Empty{});
}

ProtocolMessage verify_share_message(const SessionState& state, const Participant& verifier) {
  const Signature& signature = require_signature(state);
  Payload payload = std::visit(
      Overloaded{[&](const PairingParams& p) -> Payload {
                   return pairing_scheme::verify_share(state.message, std::get<pairing_scheme::Member>(verifier.key),
                                                       pairing_sum(state.roster_a, p), p);
                 },
                 [&](const zn_scheme::Params& p) -> Payload {
                   return ZnDecodeShare{zn_scheme::decode_share(p, std::get<zn_scheme::Signature>(signature),
                                                                std::get<zn_scheme::MemberKey>(verifier.key))};
                 },
                 [&](const ec_scheme::Params& p) -> Payload {
                   return EcDecodeShare{ec_scheme::decode_share(p, std::get<ec_scheme::Signature>(signature),
                                                                std::get<ec_scheme::MemberKey>(verifier.key))};
                 },
                 [&](const combined_scheme::Params& p) -> Payload {
                   return combined_scheme::verifier_share(p, state.message,
                                                          std::get<combined_scheme::Signature>(signature),
                                                          std::get<combined_scheme::MemberKey>(verifier.key),
                                                          pairing_sum(state.roster_a, p.pairing));
                 }},
      state.params);
  return make(state, verifier.id, RoundTag::verify_share, std::move(payload));
}

ProtocolMessage verdict_message(const SessionState& state, const Participant& verifier, VerdictPayload verdict) {
  return make(state, verifier.id, RoundTag::verdict, std::move(verdict));
}

VerdictPayload evaluate(const SessionState& state) {
  const Signature& signature = require_signature(state);
  if (state.verify_shares.size() != state.roster_b.size()) throw SequencingError("verify shares are missing");
  try {
    return std::visit(
        Overloaded{
            [&](const PairingParams& p) {
              const bool ok = pairing_scheme::verify(std::get<pairing_scheme::Signature>(signature),
                                                     shares_in_order<pairing_scheme::Signature>(state), p);
              return VerdictPayload{ok, ok ? "accepted" : "pairing check"};
            },
            [&](const zn_scheme::Params& p) {
              std::vector<BigInt> z;
              for (const auto& s : shares_in_order<ZnDecodeShare>(state)) z.push_back(s.z);
              const auto verdict =
                  zn_scheme::verify(p, state.message, std::get<zn_scheme::Signature>(signature),
                                    exponents_of(state.roster_a), zn_ys(state.roster_a),
                                    verifier_private_exponents(state), z);
              return VerdictPayload{verdict.accepted, verdict.reason};
            },
            [&](const ec_scheme::Params& p) {
              std::vector<Point> z;
              for (const auto& s : shares_in_order<EcDecodeShare>(state)) z.push_back(s.z);
              const auto verdict =
                  ec_scheme::verify(p, state.message, std::get<ec_scheme::Signature>(signature),
                                    exponents_of(state.roster_a), ec_ys(state.roster_a),
                                    verifier_private_exponents(state), z);
              return VerdictPayload{verdict.accepted, verdict.reason};
            },
            [&](const combined_scheme::Params& p) {
              const auto verdict = combined_scheme::verify_with_shares(
                  p, state.message, std::get<combined_scheme::Signature>(signature), exponents_of(state.roster_a),
                  zn_ys(state.roster_a), verifier_private_exponents(state),
                  shares_in_order<combined_scheme::VerifierShare>(state));
              return VerdictPayload{verdict.accepted, verdict.reason};
            }},
        state.params);
  } catch (const ParameterError& err) {
    return VerdictPayload{false, std::string("malformed signature: ") + err.what()};
  }
}

namespace {

HonestRun finish_session(Coordinator& coordinator, const Membership& membership) {
  coordinator.submit(deliver_message(coordinator.snapshot()));
  for (const auto& verifier : membership.verifiers) {
    coordinator.submit(verify_share_message(coordinator.snapshot(), verifier));
  }
  for (const auto& verifier : membership.verifiers) {
    const auto snapshot = coordinator.snapshot();
    coordinator.submit(verdict_message(snapshot, verifier, evaluate(snapshot)));
  }
  return {coordinator.snapshot(), coordinator.event_log()};
}

}  // namespace

HonestRun run_honest_session(const Membership& membership, std::string id, std::string message, Rng& rng) {
  Coordinator coordinator(open_session(membership, std::move(id), std::move(message)));
  std::vector<BigInt> nonces;
  for (const auto& signer : membership.signers) {
    nonces.push_back(sample_nonce(membership.params, rng));
    coordinator.submit(round1_message(coordinator.snapshot(), signer, nonces.back()));
  }
  if (membership.scheme != SchemeTag::s1) {
    for (std::size_t i = 0; i < membership.signers.size(); ++i) {
      coordinator.submit(round2_message(coordinator.snapshot(), membership.signers[i], nonces[i]));
    }
  }
  return finish_session(coordinator, membership);
}

HonestRun run_verification(const Membership& membership, std::string id, std::string message, Signature signature) {
  SessionState state = open_session(membership, std::move(id), std::move(message));
  if (signature.index() != state.params.index()) throw ParameterError("signature is for a different scheme");
  state.phase = Phase::signed_;
  state.signature = std::move(signature);
  Coordinator coordinator(std::move(state));
  return finish_session(coordinator, membership);
}

}  // namespace msdmv::session
