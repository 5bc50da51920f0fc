#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msdmv/scheme_combined.hpp"
#include "msdmv/scheme_ec.hpp"
#include "msdmv/scheme_pairing.hpp"
#include "msdmv/scheme_zn.hpp"

// Coordinator state machine for one signing session between system A (the
// signers) and system B (the designated verifiers).
//
// session_submit is a pure function: it returns the successor state or throws,
// leaving its input untouched. Coordinator serialises concurrent callers.
namespace msdmv::session {

enum class SchemeTag { s1, s2, s3, combined };

// Declaration order is the only legal progression.
enum class Phase {
  collecting_round1,
  challenge_published,
  collecting_round2,
  signed_,
  delivered,
  verifying,
  accepted,
  rejected_returned,
};

enum class RoundTag { round1, round2, deliver, verify_share, verdict };

// Sender id reserved for the system-A coordinator; it issues the deliver step.
inline constexpr std::string_view kSystemA = "system-A";

using SchemeParams =
    std::variant<PairingParams, zn_scheme::Params, ec_scheme::Params, combined_scheme::Params>;

struct PairingPublic {
  GElem point;
  friend bool operator==(const PairingPublic&, const PairingPublic&) = default;
};
struct ZnPublic {
  BigInt e;
  BigInt y;
  friend bool operator==(const ZnPublic&, const ZnPublic&) = default;
};
struct EcPublic {
  BigInt e;
  Point y;
  friend bool operator==(const EcPublic&, const EcPublic&) = default;
};
struct CombinedPublic {
  GElem point;
  BigInt e;
  BigInt y;
  friend bool operator==(const CombinedPublic&, const CombinedPublic&) = default;
};
using PublicKey = std::variant<PairingPublic, ZnPublic, EcPublic, CombinedPublic>;

struct RosterEntry {
  std::string id;
  PublicKey key;
  friend bool operator==(const RosterEntry&, const RosterEntry&) = default;
};

struct Response {
  BigInt v;
  friend bool operator==(const Response&, const Response&) = default;
};
struct ZnDecodeShare {
  BigInt z;
  friend bool operator==(const ZnDecodeShare&, const ZnDecodeShare&) = default;
};
struct EcDecodeShare {
  Point z;
  friend bool operator==(const EcDecodeShare&, const EcDecodeShare&) = default;
};
struct VerdictPayload {
  bool accept = false;
  std::string reason;
  friend bool operator==(const VerdictPayload&, const VerdictPayload&) = default;
};
struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};

// pairing_scheme::Signature carries sigma_i in round 1 and zeta_j as a
// verify share.
using Payload = std::variant<Empty, pairing_scheme::Signature, zn_scheme::Round1Share, ec_scheme::Round1Share,
                             combined_scheme::Round1Share, Response, ZnDecodeShare, EcDecodeShare,
                             combined_scheme::VerifierShare, VerdictPayload>;

struct ProtocolMessage {
  std::string session;
  std::string sender;
  RoundTag round = RoundTag::round1;
  Payload payload;
  friend bool operator==(const ProtocolMessage&, const ProtocolMessage&) = default;
};

using Challenge = std::variant<zn_scheme::Challenge, ec_scheme::Challenge, combined_scheme::Challenge>;
using Signature =
    std::variant<pairing_scheme::Signature, zn_scheme::Signature, ec_scheme::Signature, combined_scheme::Signature>;

struct SessionState {
  std::string id;
  SchemeTag scheme = SchemeTag::s1;
  SchemeParams params;
  std::string message;
  Phase phase = Phase::collecting_round1;
  std::vector<RosterEntry> roster_a;
  std::vector<RosterEntry> roster_b;
  std::map<std::string, Payload> round1;
  std::map<std::string, Payload> round2;
  std::map<std::string, Payload> verify_shares;
  std::map<std::string, VerdictPayload> verdicts;
  std::optional<Challenge> challenge;
  // Kept after rejection: it is handed back to system A.
  std::optional<Signature> signature;
};

SessionState session_create(std::string id, SchemeTag scheme, SchemeParams params, std::string message,
                            std::vector<RosterEntry> roster_a, std::vector<RosterEntry> roster_b);

SessionState session_submit(const SessionState& state, const ProtocolMessage& message);

// Requires phase verifying and every verdict present.
Phase session_tally(const SessionState& state);

// Number of denials that sends the signature back: ceil(m / 2).
std::size_t denial_threshold(std::size_t verifier_count);

// Signature returned to system A after rejection.
std::optional<Signature> returned_signature(const SessionState& state);

std::string_view to_string(SchemeTag tag);
std::string_view to_string(Phase phase);
std::string_view to_string(RoundTag tag);
SchemeTag scheme_from_string(std::string_view text);
Phase phase_from_string(std::string_view text);
RoundTag round_from_string(std::string_view text);

// Derived private exponents. Each coordinator knows the totient of its own
// modulus, so d is recomputed from the published e.
std::vector<BigInt> signer_private_exponents(const SessionState& state);
std::vector<BigInt> verifier_private_exponents(const SessionState& state);

// Serialises submissions through one mutex and records every accepted
// message as a JSON line.
class Coordinator {
 public:
  explicit Coordinator(SessionState initial) : state_(std::move(initial)) {}

  void submit(const ProtocolMessage& message);
  SessionState snapshot() const;
  std::vector<std::string> event_log() const;

 private:
  mutable std::mutex mutex_;
  SessionState state_;
  std::vector<std::string> log_;
};

// Replays a JSON-lines event log on top of a freshly created session.
SessionState replay(SessionState initial, const std::vector<std::string>& log_lines);

}  // namespace msdmv::session
