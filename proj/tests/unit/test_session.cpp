#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "msdmv/error.hpp"
#include "msdmv/participant.hpp"
#include "session_fuzz.hpp"

using namespace msdmv;
using namespace msdmv::session;

namespace {

Membership members_for(SchemeTag scheme, std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return generate_membership(scheme, named_params(scheme, "paper-ex1"), n, m, rng);
}

std::vector<RosterEntry> roster(const std::vector<Participant>& list) {
  std::vector<RosterEntry> out;
  for (const auto& p : list) out.push_back(public_entry(p));
  return out;
}

}  // namespace

TEST(SessionCreate, Errors) {
  const Membership members = members_for(SchemeTag::s2, 2, 2, 1);
  const auto a = roster(members.signers), b = roster(members.verifiers);
  EXPECT_THROW(session_create("x", SchemeTag::s2, members.params, "M", {}, b), ParameterError);
  EXPECT_THROW(session_create("x", SchemeTag::s2, members.params, "M", a, {}), ParameterError);
  EXPECT_THROW(session_create("x", SchemeTag::s3, members.params, "M", a, b), ParameterError);
  auto duplicated = a;
  duplicated.push_back(a.front());
  EXPECT_THROW(session_create("x", SchemeTag::s2, members.params, "M", duplicated, b), ParameterError);
  auto reserved = a;
  reserved.front().id = std::string(kSystemA);
  EXPECT_THROW(session_create("x", SchemeTag::s2, members.params, "M", reserved, b), ParameterError);
  EXPECT_EQ(session_create("x", SchemeTag::s2, members.params, "M", a, b).phase, Phase::collecting_round1);
}

TEST(SessionSubmit, RejectsWithoutMutating) {
  Rng rng(2);
  const Membership members = members_for(SchemeTag::s2, 2, 2, 2);
  SessionState state = open_session(members, "sess", "M");
  const SessionState before = state;
  const auto msg = round1_message(state, members.signers[0], sample_nonce(members.params, rng));

  ProtocolMessage unknown = msg;
  unknown.sender = "Z1";
  EXPECT_THROW(session_submit(state, unknown), MembershipError);
  ProtocolMessage wrong_session = msg;
  wrong_session.session = "other";
  EXPECT_THROW(session_submit(state, wrong_session), MembershipError);
  ProtocolMessage verifier_round1 = msg;
  verifier_round1.sender = members.verifiers[0].id;
  EXPECT_THROW(session_submit(state, verifier_round1), MembershipError);
  EXPECT_THROW(session_submit(state, deliver_message(state)), SequencingError);

  state = session_submit(state, msg);
  EXPECT_THROW(session_submit(state, msg), DuplicateError);
  EXPECT_EQ(before.round1.size(), 0u);
  EXPECT_EQ(state.round1.size(), 1u);
}

TEST(SessionSubmit, MalformedPayloadRejected) {
  const Membership members = members_for(SchemeTag::s2, 1, 1, 3);
  const SessionState state = open_session(members, "sess", "M");
  ProtocolMessage msg{"sess", members.signers[0].id, RoundTag::round1, zn_scheme::Round1Share{0, 1, 1}};
  EXPECT_THROW(session_submit(state, msg), ParameterError);
  msg.payload = Response{5};
  EXPECT_THROW(session_submit(state, msg), ParameterError);
}

TEST(SessionSubmit, AutoAdvanceTrace) {
  for (SchemeTag scheme : {SchemeTag::s1, SchemeTag::s2, SchemeTag::s3, SchemeTag::combined}) {
    Rng rng(4);
    const Membership members = members_for(scheme, 2, 3, 4);
    const auto run = run_honest_session(members, "trace", "M", rng);
    SessionState state = open_session(members, "trace", "M");
    std::vector<Phase> phases{state.phase};
    for (const auto& line : run.log) {
      state = session_submit(state, codec::envelope_from_json(codec::parse(line), scheme));
      if (phases.back() != state.phase) phases.push_back(state.phase);
    }
    std::vector<Phase> expected;
    if (scheme == SchemeTag::s1) {
      expected = {Phase::collecting_round1, Phase::signed_, Phase::delivered, Phase::verifying, Phase::accepted};
    } else {
      expected = {Phase::collecting_round1, Phase::challenge_published, Phase::collecting_round2, Phase::signed_,
                  Phase::delivered, Phase::verifying, Phase::accepted};
    }
    EXPECT_EQ(phases, expected) << to_string(scheme);
    EXPECT_EQ(state.phase, run.state.phase);
  }
}

TEST(SessionTally, ThresholdTable) {
  const std::size_t expected[] = {1, 1, 2, 2, 3, 3, 4};
  for (std::size_t m = 1; m <= 7; ++m) EXPECT_EQ(denial_threshold(m), expected[m - 1]) << m;
}

TEST(SessionTally, DenialsAtThresholdReturnSignature) {
  for (std::size_t m : {1, 2, 3, 4, 5}) {
    for (std::size_t denials = 0; denials <= m; ++denials) {
      Rng rng(5);
      const Membership members = members_for(SchemeTag::s2, 2, m, 5);
      SessionState state = open_session(members, "tally", "M");
      std::vector<BigInt> ks;
      for (const auto& s : members.signers) {
        ks.push_back(sample_nonce(members.params, rng));
        state = session_submit(state, round1_message(state, s, ks.back()));
      }
      for (std::size_t i = 0; i < members.signers.size(); ++i) {
        state = session_submit(state, round2_message(state, members.signers[i], ks[i]));
      }
      state = session_submit(state, deliver_message(state));
      for (const auto& v : members.verifiers) state = session_submit(state, verify_share_message(state, v));
      for (std::size_t j = 0; j < m; ++j) {
        state = session_submit(state, verdict_message(state, members.verifiers[j], VerdictPayload{j >= denials, "x"}));
      }
      const bool rejected = denials >= denial_threshold(m);
      EXPECT_EQ(state.phase, rejected ? Phase::rejected_returned : Phase::accepted) << m << " " << denials;
      EXPECT_EQ(returned_signature(state).has_value(), rejected);
    }
  }
}

TEST(SessionTally, VerdictOrderIrrelevant) {
  Rng rng(6);
  const Membership members = members_for(SchemeTag::s3, 1, 4, 6);
  SessionState base = open_session(members, "order", "M");
  const BigInt k = sample_nonce(members.params, rng);
  base = session_submit(base, round1_message(base, members.signers[0], k));
  base = session_submit(base, round2_message(base, members.signers[0], k));
  base = session_submit(base, deliver_message(base));
  for (const auto& v : members.verifiers) base = session_submit(base, verify_share_message(base, v));
  const bool votes[] = {false, true, false, true};
  std::vector<std::size_t> order{0, 1, 2, 3};
  do {
    SessionState state = base;
    for (auto j : order) state = session_submit(state, verdict_message(state, members.verifiers[j], {votes[j], ""}));
    EXPECT_EQ(state.phase, Phase::rejected_returned);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST(SessionTally, RequiresVerifyingPhase) {
  const Membership members = members_for(SchemeTag::s2, 1, 1, 7);
  EXPECT_THROW(session_tally(open_session(members, "t", "M")), SequencingError);
}

TEST(SessionHonest, EveryVerifierAcceptsTamperedMessageRejects) {
  for (SchemeTag scheme : {SchemeTag::s2, SchemeTag::s3, SchemeTag::combined}) {
    Rng rng(8);
    const Membership members = members_for(scheme, 3, 3, 8);
    const auto run = run_honest_session(members, "honest", "transfer", rng);
    EXPECT_EQ(run.state.phase, Phase::accepted) << to_string(scheme);
    for (const auto& [id, v] : run.state.verdicts) EXPECT_TRUE(v.accept) << id;
    const auto tampered = run_verification(members, "check", "transfer!", *run.state.signature);
    EXPECT_EQ(tampered.state.phase, Phase::rejected_returned) << to_string(scheme);
  }
}

TEST(SessionReplay, LogReproducesState) {
  for (SchemeTag scheme : {SchemeTag::s1, SchemeTag::s2, SchemeTag::s3, SchemeTag::combined}) {
    Rng rng(9);
    const Membership members = members_for(scheme, 2, 2, 9);
    const auto run = run_honest_session(members, "replay", "M", rng);
    const SessionState replayed = replay(open_session(members, "replay", "M"), run.log);
    EXPECT_EQ(replayed.phase, run.state.phase);
    EXPECT_EQ(replayed.signature, run.state.signature);
    EXPECT_EQ(replayed.round1, run.state.round1);
    EXPECT_EQ(replayed.verdicts, run.state.verdicts);
  }
}

TEST(Coordinator, ConcurrentRound1Submissions) {
  Rng rng(10);
  const Membership members = members_for(SchemeTag::s2, 6, 2, 10);
  Coordinator coordinator(open_session(members, "conc", "M"));
  std::vector<ProtocolMessage> messages;
  const SessionState start = coordinator.snapshot();
  for (const auto& s : members.signers) messages.push_back(round1_message(start, s, sample_nonce(members.params, rng)));
  std::vector<std::thread> threads;
  for (const auto& msg : messages) threads.emplace_back([&coordinator, msg] { coordinator.submit(msg); });
  for (auto& t : threads) t.join();
  const SessionState state = coordinator.snapshot();
  EXPECT_EQ(state.phase, Phase::challenge_published);
  EXPECT_EQ(state.round1.size(), 6u);
  EXPECT_EQ(coordinator.event_log().size(), 6u);
  EXPECT_THROW(coordinator.submit(messages.front()), SequencingError);
  EXPECT_EQ(coordinator.event_log().size(), 6u);
}

TEST(SessionNames, RoundTrip) {
  for (SchemeTag t : {SchemeTag::s1, SchemeTag::s2, SchemeTag::s3, SchemeTag::combined})
    EXPECT_EQ(scheme_from_string(to_string(t)), t);
  for (int i = 0; i <= static_cast<int>(Phase::rejected_returned); ++i)
    EXPECT_EQ(phase_from_string(to_string(static_cast<Phase>(i))), static_cast<Phase>(i));
  for (int i = 0; i <= static_cast<int>(RoundTag::verdict); ++i)
    EXPECT_EQ(round_from_string(to_string(static_cast<RoundTag>(i))), static_cast<RoundTag>(i));
  EXPECT_THROW(scheme_from_string("s9"), ParameterError);
}

TEST(SessionFuzz, SmallCampaign) {
  const auto report = testing_support::fuzz_sessions(11, 40, 80);
  EXPECT_EQ(report.crashes, 0u) << report.first_problem;
  EXPECT_EQ(report.illegal, 0u) << report.first_problem;
  EXPECT_GT(report.rejected_submissions, 0u);
  EXPECT_GT(report.terminal, 0u);
}
