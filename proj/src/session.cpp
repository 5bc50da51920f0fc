#include "msdmv/session.hpp"

#include <algorithm>
#include <array>

#include "msdmv/codec.hpp"
#include "msdmv/error.hpp"

namespace msdmv::session {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool in_roster(const std::vector<RosterEntry>& roster, std::string_view id) {
  return std::any_of(roster.begin(), roster.end(), [&](const RosterEntry& e) { return e.id == id; });
}

// Payloads collected in roster order, so aggregation never depends on arrival order.
template <class T>
std::vector<T> collect(const std::map<std::string, Payload>& bucket, const std::vector<RosterEntry>& roster) {
  std::vector<T> out;
  for (const auto& entry : roster) out.push_back(std::get<T>(bucket.at(entry.id)));
  return out;
}

const BigInt& rsa_e(const PublicKey& key) {
  return std::visit(Overloaded{[](const PairingPublic&) -> const BigInt& {
                                 throw ParameterError("pairing keys carry no exponent");
                               },
                               [](const ZnPublic& k) -> const BigInt& { return k.e; },
                               [](const EcPublic& k) -> const BigInt& { return k.e; },
                               [](const CombinedPublic& k) -> const BigInt& { return k.e; }},
                    key);
}

std::vector<BigInt> exponents(const std::vector<RosterEntry>& roster) {
  std::vector<BigInt> out;
  for (const auto& entry : roster) out.push_back(rsa_e(entry.key));
  return out;
}

const Semiprime& semiprime_of(const SessionState& state, zn_scheme::Side side) {
  return std::visit(Overloaded{[](const PairingParams&) -> const Semiprime& {
                                 throw ParameterError("pairing scheme has no RSA layer");
                               },
                               [&](const zn_scheme::Params& p) -> const Semiprime& { return p.semi(side); },
                               [&](const ec_scheme::Params& p) -> const Semiprime& { return p.semi(side); },
                               [&](const combined_scheme::Params& p) -> const Semiprime& {
                                 return p.zn.semi(side);
                               }},
                    state.params);
}

std::vector<BigInt> private_exponents(const SessionState& state, zn_scheme::Side side) {
  const Semiprime& semi = semiprime_of(state, side);
  std::vector<BigInt> out;
  for (const auto& e : exponents(side == zn_scheme::Side::A ? state.roster_a : state.roster_b)) {
    out.push_back(mod_inv(e, semi.phi));
  }
  return out;
}

bool expected_key_kind(SchemeTag scheme, const PublicKey& key) {
  switch (scheme) {
    case SchemeTag::s1: return std::holds_alternative<PairingPublic>(key);
    case SchemeTag::s2: return std::holds_alternative<ZnPublic>(key);
    case SchemeTag::s3: return std::holds_alternative<EcPublic>(key);
    case SchemeTag::combined: return std::holds_alternative<CombinedPublic>(key);
  }
  return false;
}

bool expected_params_kind(SchemeTag scheme, const SchemeParams& params) {
  return static_cast<std::size_t>(scheme) == params.index();
}

void require_unit(const BigInt& value, const BigInt& p, const char* what) {
  if (value < 1 || value >= p) throw ParameterError(std::string(what) + " must lie in [1, p)");
}

void require_on_curve(const Point& point, const Curve& curve, const char* what) {
  if (!on_curve(point, curve)) throw ParameterError(std::string(what) + " is not on the curve");
}

void require_target(const GTElem& value, const PairingParams& params) {
  if (!in_target_group(value, params)) throw ParameterError("pairing value is not in the target group");
}

template <class T>
const T& expect_payload(const Payload& payload, const char* what) {
  const T* value = std::get_if<T>(&payload);
  if (value == nullptr) throw ParameterError(std::string("payload is not a ") + what);
  return *value;
}

void check_round1(const SessionState& state, const Payload& payload) {
  std::visit(Overloaded{[&](const PairingParams& p) {
                          require_target(expect_payload<pairing_scheme::Signature>(payload, "sigma share").sigma, p);
                        },
                        [&](const zn_scheme::Params& p) {
                          const auto& s = expect_payload<zn_scheme::Round1Share>(payload, "Z_p* round-1 share");
                          require_unit(s.r, p.p, "r_i");
                          require_unit(s.s, p.p, "s_i");
                          require_unit(s.w, p.p, "w_i");
                        },
                        [&](const ec_scheme::Params& p) {
                          const auto& s = expect_payload<ec_scheme::Round1Share>(payload, "curve round-1 share");
                          require_on_curve(s.r, p.curve, "r_i");
                          require_on_curve(s.s, p.curve, "s_i");
                          require_on_curve(s.w, p.curve, "w_i");
                        },
                        [&](const combined_scheme::Params& p) {
                          const auto& s = expect_payload<combined_scheme::Round1Share>(payload, "combined share");
                          require_target(s.sigma.sigma, p.pairing);
                          require_unit(s.zn.r, p.zn.p, "r_i");
                          require_unit(s.zn.s, p.zn.p, "s_i");
                          require_unit(s.zn.w, p.zn.p, "w_i");
                        }},
             state.params);
}

void check_verify_share(const SessionState& state, const Payload& payload) {
  std::visit(Overloaded{[&](const PairingParams& p) {
                          require_target(expect_payload<pairing_scheme::Signature>(payload, "zeta share").sigma, p);
                        },
                        [&](const zn_scheme::Params& p) {
                          require_unit(expect_payload<ZnDecodeShare>(payload, "decode share").z, p.p, "z_j");
                        },
                        [&](const ec_scheme::Params& p) {
                          require_on_curve(expect_payload<EcDecodeShare>(payload, "decode share").z, p.curve, "z_j");
                        },
                        [&](const combined_scheme::Params& p) {
                          const auto& s = expect_payload<combined_scheme::VerifierShare>(payload, "verifier share");
                          require_target(s.zeta.sigma, p.pairing);
                          require_unit(s.z, p.zn.p, "z_j");
                        }},
             state.params);
}

void check_payload(const SessionState& state, RoundTag round, const Payload& payload) {
  switch (round) {
    case RoundTag::round1: check_round1(state, payload); break;
    case RoundTag::round2:
      if (expect_payload<Response>(payload, "round-2 response").v < 0) {
        throw ParameterError("round-2 response must be nonnegative");
      }
      break;
    case RoundTag::deliver: expect_payload<Empty>(payload, "empty deliver marker"); break;
    case RoundTag::verify_share: check_verify_share(state, payload); break;
    case RoundTag::verdict: expect_payload<VerdictPayload>(payload, "verdict"); break;
  }
}

void publish_challenge(SessionState& state) {
  const auto verifier_e = [&] { return exponents(state.roster_b); };
  std::visit(Overloaded{[&](const PairingParams& p) {
                          state.signature =
                              pairing_scheme::combine(collect<pairing_scheme::Signature>(state.round1, state.roster_a), p);
                          state.phase = Phase::signed_;
                        },
                        [&](const zn_scheme::Params& p) {
                          state.challenge = zn_scheme::aggregate_challenge(
                              p, state.message, collect<zn_scheme::Round1Share>(state.round1, state.roster_a),
                              verifier_e());
                          state.phase = Phase::challenge_published;
                        },
                        [&](const ec_scheme::Params& p) {
                          state.challenge = ec_scheme::aggregate_challenge(
                              p, state.message, collect<ec_scheme::Round1Share>(state.round1, state.roster_a),
                              verifier_e());
                          state.phase = Phase::challenge_published;
                        },
                        [&](const combined_scheme::Params& p) {
                          state.challenge = combined_scheme::aggregate(
                              p, state.message, collect<combined_scheme::Round1Share>(state.round1, state.roster_a),
                              verifier_e());
                          state.phase = Phase::challenge_published;
                        }},
             state.params);
}

void finalize_signature(SessionState& state) {
  std::vector<BigInt> responses;
  for (const auto& r : collect<Response>(state.round2, state.roster_a)) responses.push_back(r.v);
  const auto signer_d = signer_private_exponents(state);
  std::visit(Overloaded{[&](const PairingParams&) { throw SequencingError("pairing scheme has no round 2"); },
                        [&](const zn_scheme::Params& p) {
                          state.signature = zn_scheme::finalize(p, responses, signer_d,
                                                                std::get<zn_scheme::Challenge>(*state.challenge));
                        },
                        [&](const ec_scheme::Params& p) {
                          state.signature = ec_scheme::finalize(p, responses, signer_d,
                                                                std::get<ec_scheme::Challenge>(*state.challenge));
                        },
                        [&](const combined_scheme::Params& p) {
                          state.signature = combined_scheme::finalize(
                              p, std::get<combined_scheme::Challenge>(*state.challenge), responses, signer_d);
                        }},
             state.params);
  state.phase = Phase::signed_;
}

std::map<std::string, Payload> SessionState::*bucket_for(RoundTag round) {
  switch (round) {
    case RoundTag::round1: return &SessionState::round1;
    case RoundTag::round2: return &SessionState::round2;
    default: return &SessionState::verify_shares;
  }
}

void require_phase(const SessionState& state, RoundTag round) {
  bool ok = false;
  switch (round) {
    case RoundTag::round1: ok = state.phase == Phase::collecting_round1; break;
    case RoundTag::round2:
      if (state.scheme == SchemeTag::s1) throw SequencingError("the pairing scheme has no second round");
      ok = state.phase == Phase::challenge_published || state.phase == Phase::collecting_round2;
      break;
    case RoundTag::deliver: ok = state.phase == Phase::signed_; break;
    case RoundTag::verify_share: ok = state.phase == Phase::delivered; break;
    case RoundTag::verdict: ok = state.phase == Phase::verifying; break;
  }
  if (!ok) {
    throw SequencingError(std::string(to_string(round)) + " message not accepted in phase " +
                          std::string(to_string(state.phase)));
  }
}

void require_sender(const SessionState& state, const ProtocolMessage& message) {
  if (message.round == RoundTag::deliver) {
    if (message.sender != kSystemA) throw MembershipError("only " + std::string(kSystemA) + " can deliver");
    return;
  }
  const bool signer = in_roster(state.roster_a, message.sender);
  const bool verifier = in_roster(state.roster_b, message.sender);
  if (!signer && !verifier) throw MembershipError("unknown sender '" + message.sender + "'");
  const bool signer_round = message.round == RoundTag::round1 || message.round == RoundTag::round2;
  if (signer_round && !signer) throw MembershipError("'" + message.sender + "' is not a signer");
  if (!signer_round && !verifier) throw MembershipError("'" + message.sender + "' is not a designated verifier");
}

}  // namespace

SessionState session_create(std::string id, SchemeTag scheme, SchemeParams params, std::string message,
                            std::vector<RosterEntry> roster_a, std::vector<RosterEntry> roster_b) {
  if (roster_a.empty() || roster_b.empty()) throw ParameterError("both rosters must be nonempty");
  if (!expected_params_kind(scheme, params)) throw ParameterError("parameters do not match the scheme");
  std::vector<std::string> ids;
  for (const auto* roster : {&roster_a, &roster_b}) {
    for (const auto& entry : *roster) {
      if (entry.id.empty() || entry.id == kSystemA) throw ParameterError("invalid member id '" + entry.id + "'");
      if (!expected_key_kind(scheme, entry.key)) throw ParameterError("key of '" + entry.id + "' has the wrong kind");
      ids.push_back(entry.id);
    }
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw ParameterError("member ids must be unique");

  SessionState state;
  state.id = std::move(id);
  state.scheme = scheme;
  state.params = std::move(params);
  state.message = std::move(message);
  state.roster_a = std::move(roster_a);
  state.roster_b = std::move(roster_b);
  if (scheme != SchemeTag::s1) {
    signer_private_exponents(state);
    verifier_private_exponents(state);
  }
  return state;
}

SessionState session_submit(const SessionState& state, const ProtocolMessage& message) {
  if (message.session != state.id) throw MembershipError("message belongs to session '" + message.session + "'");
  require_sender(state, message);
  require_phase(state, message.round);
  const bool duplicate = message.round == RoundTag::verdict
                             ? state.verdicts.count(message.sender) != 0
                             : message.round != RoundTag::deliver &&
                                   (state.*bucket_for(message.round)).count(message.sender) != 0;
  if (duplicate) {
    throw DuplicateError("duplicate " + std::string(to_string(message.round)) + " message from " + message.sender);
  }
  check_payload(state, message.round, message.payload);

  SessionState next = state;
  if (message.round == RoundTag::deliver) {
    next.phase = Phase::delivered;
    return next;
  }
  if (message.round == RoundTag::verdict) {
    next.verdicts.emplace(message.sender, std::get<VerdictPayload>(message.payload));
    if (next.verdicts.size() == next.roster_b.size()) next.phase = session_tally(next);
    return next;
  }
  auto& bucket = next.*bucket_for(message.round);
  bucket.emplace(message.sender, message.payload);
  switch (message.round) {
    case RoundTag::round1:
      if (bucket.size() == next.roster_a.size()) publish_challenge(next);
      break;
    case RoundTag::round2:
      next.phase = Phase::collecting_round2;
      if (bucket.size() == next.roster_a.size()) finalize_signature(next);
      break;
    case RoundTag::verify_share:
      if (bucket.size() == next.roster_b.size()) next.phase = Phase::verifying;
      break;
    default: break;
  }
  return next;
}

std::size_t denial_threshold(std::size_t verifier_count) { return (verifier_count + 1) / 2; }

Phase session_tally(const SessionState& state) {
  if (state.phase != Phase::verifying) throw SequencingError("tally is only possible while verifying");
  if (state.verdicts.size() != state.roster_b.size()) throw SequencingError("verdicts are missing");
  const auto denials = static_cast<std::size_t>(std::count_if(
      state.verdicts.begin(), state.verdicts.end(), [](const auto& kv) { return !kv.second.accept; }));
  return denials >= denial_threshold(state.roster_b.size()) ? Phase::rejected_returned : Phase::accepted;
}

std::optional<Signature> returned_signature(const SessionState& state) {
  if (state.phase != Phase::rejected_returned) return std::nullopt;
  return state.signature;
}

std::vector<BigInt> signer_private_exponents(const SessionState& state) {
  return private_exponents(state, zn_scheme::Side::A);
}

std::vector<BigInt> verifier_private_exponents(const SessionState& state) {
  return private_exponents(state, zn_scheme::Side::B);
}

namespace {
constexpr std::array<std::string_view, 4> kSchemeNames{"s1", "s2", "s3", "combined"};
constexpr std::array<std::string_view, 8> kPhaseNames{"collecting_round1", "challenge_published",
                                                      "collecting_round2", "signed",
                                                      "delivered",         "verifying",
                                                      "accepted",          "rejected_returned"};
constexpr std::array<std::string_view, 5> kRoundNames{"round1", "round2", "deliver", "verify_share", "verdict"};

template <class Enum, std::size_t N>
Enum lookup(const std::array<std::string_view, N>& names, std::string_view text, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  throw ParameterError(std::string("unknown ") + what + " '" + std::string(text) + "'");
}
}  // namespace

std::string_view to_string(SchemeTag tag) { return kSchemeNames.at(static_cast<std::size_t>(tag)); }
std::string_view to_string(Phase phase) { return kPhaseNames.at(static_cast<std::size_t>(phase)); }
std::string_view to_string(RoundTag tag) { return kRoundNames.at(static_cast<std::size_t>(tag)); }
SchemeTag scheme_from_string(std::string_view text) { return lookup<SchemeTag>(kSchemeNames, text, "scheme"); }
Phase phase_from_string(std::string_view text) { return lookup<Phase>(kPhaseNames, text, "phase"); }
RoundTag round_from_string(std::string_view text) { return lookup<RoundTag>(kRoundNames, text, "round"); }

void Coordinator::submit(const ProtocolMessage& message) {
  std::lock_guard lock(mutex_);
  SessionState next = session_submit(state_, message);
  log_.push_back(codec::envelope_to_json(message).dump());
  state_ = std::move(next);
}

SessionState Coordinator::snapshot() const {
  std::lock_guard lock(mutex_);
  return state_;
}

std::vector<std::string> Coordinator::event_log() const {
  std::lock_guard lock(mutex_);
  return log_;
}

SessionState replay(SessionState initial, const std::vector<std::string>& log_lines) {
  SessionState state = std::move(initial);
  for (const auto& line : log_lines) {
    if (line.empty()) continue;
    state = session_submit(state, codec::envelope_from_json(codec::parse(line), state.scheme));
  }
  return state;
}

}  // namespace msdmv::session
