#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msdmv/session.hpp"

// Member-side computations for driving sessions: key material, the messages
// an honest participant sends in each round, and the verifier's own check.
namespace msdmv::session {

using MemberSecret =
    std::variant<pairing_scheme::Member, zn_scheme::MemberKey, ec_scheme::MemberKey, combined_scheme::MemberKey>;

struct Participant {
  std::string id;
  MemberSecret key;
  friend bool operator==(const Participant&, const Participant&) = default;
};

struct Membership {
  SchemeTag scheme = SchemeTag::s1;
  SchemeParams params;
  std::vector<Participant> signers;
  std::vector<Participant> verifiers;
};

SchemeParams named_params(SchemeTag scheme, std::string_view name);
SchemeParams random_params(SchemeTag scheme, Rng& rng);

MemberSecret generate_key(const SchemeParams& params, zn_scheme::Side side, Rng& rng);

// Signers are named S1..Sn and verifiers D1..Dm.
Membership generate_membership(SchemeTag scheme, SchemeParams params, std::size_t signers, std::size_t verifiers,
                               Rng& rng);

RosterEntry public_entry(const Participant& participant);
SessionState open_session(const Membership& membership, std::string id, std::string message);

// Nonce k in [1, p-1] for the field or group prime; 0 for the pairing scheme.
BigInt sample_nonce(const SchemeParams& params, Rng& rng);

ProtocolMessage round1_message(const SessionState& state, const Participant& signer, const BigInt& k);
ProtocolMessage round2_message(const SessionState& state, const Participant& signer, const BigInt& k);
ProtocolMessage deliver_message(const SessionState& state);
ProtocolMessage verify_share_message(const SessionState& state, const Participant& verifier);
ProtocolMessage verdict_message(const SessionState& state, const Participant& verifier, VerdictPayload verdict);

// The check every honest verifier runs once all verify shares are in.
VerdictPayload evaluate(const SessionState& state);

struct HonestRun {
  SessionState state;
  std::vector<std::string> log;
};

HonestRun run_honest_session(const Membership& membership, std::string id, std::string message, Rng& rng);

// Verifier side only: the session starts at the signed phase holding a
// signature received out of band, then runs delivery, shares and verdicts.
HonestRun run_verification(const Membership& membership, std::string id, std::string message, Signature signature);

}  // namespace msdmv::session
