#include <gtest/gtest.h>

#include <algorithm>

#include "msdmv/error.hpp"
#include "msdmv/exponent_layer.hpp"
#include "msdmv/scheme_zn.hpp"

using namespace msdmv;
using namespace msdmv::zn_scheme;

namespace {

const Params kEx1 = Params::named("paper-ex1");
const Params kEx2 = Params::named("paper-ex2");

struct Keys {
  std::vector<MemberKey> signers, verifiers;

  std::vector<BigInt> e_a() const { return field(signers, &MemberKey::e); }
  std::vector<BigInt> d_a() const { return field(signers, &MemberKey::d); }
  std::vector<BigInt> y_a() const { return field(signers, &MemberKey::y); }
  std::vector<BigInt> e_b() const { return field(verifiers, &MemberKey::e); }
  std::vector<BigInt> d_b() const { return field(verifiers, &MemberKey::d); }
  std::vector<BigInt> y_b() const { return field(verifiers, &MemberKey::y); }

  static std::vector<BigInt> field(const std::vector<MemberKey>& list, BigInt MemberKey::*member) {
    std::vector<BigInt> out;
    for (const auto& k : list) out.push_back(k.*member);
    return out;
  }
};

Keys ex1_keys() {
  return {{member_from(kEx1, Side::A, 13, 7), member_from(kEx1, Side::A, 7, 16), member_from(kEx1, Side::A, 11, 21)},
          {member_from(kEx1, Side::B, 5, 19), member_from(kEx1, Side::B, 11, 17)}};
}

Keys random_keys(const Params& params, std::size_t n, std::size_t m, Rng& rng) {
  Keys keys;
  for (std::size_t i = 0; i < n; ++i) keys.signers.push_back(member_keygen(params, Side::A, rng));
  for (std::size_t j = 0; j < m; ++j) keys.verifiers.push_back(member_keygen(params, Side::B, rng));
  return keys;
}

struct SignedRun {
  Challenge challenge;
  BigInt v_bar;
  Signature signature;
};

SignedRun sign(const Params& params, const Keys& keys, std::string_view message, const std::vector<BigInt>& ks) {
  std::vector<Round1Share> shares;
  for (const auto& k : ks) shares.push_back(sign_round1(params, keys.y_b(), k));
  SignedRun run;
  run.challenge = aggregate_challenge(params, message, shares, keys.e_b());
  std::vector<BigInt> responses;
  for (std::size_t i = 0; i < ks.size(); ++i) responses.push_back(sign_round2(run.challenge, keys.signers[i], ks[i]));
  run.v_bar = exponent_layer::aggregate_responses(responses, params.n_a());
  run.signature = finalize(params, responses, keys.d_a(), run.challenge);
  return run;
}

Verdict check(const Params& params, const Keys& keys, std::string_view message, const Signature& sig) {
  std::vector<BigInt> shares;
  for (const auto& d : keys.verifiers) shares.push_back(decode_share(params, sig, d));
  return verify(params, message, sig, keys.e_a(), keys.y_a(), keys.d_b(), shares);
}

}  // namespace

TEST(ZnParams, Named) {
  EXPECT_EQ(kEx1.p, 211);
  EXPECT_EQ(kEx1.n_a(), 15);
  EXPECT_EQ(kEx1.n_b(), 14);
  EXPECT_EQ(kEx1.g_a, 137);
  EXPECT_EQ(kEx1.g_b, 63);
  EXPECT_EQ(kEx2.p, 102103);
  EXPECT_EQ(kEx2.n_a(), 91);
  EXPECT_EQ(kEx2.n_b(), 187);
  EXPECT_EQ(kEx2.g_a, 44494);
  EXPECT_EQ(kEx2.g_b, 12733);
  kEx1.validate();
  kEx2.validate();
}

TEST(ZnParams, Rejects) {
  EXPECT_THROW(Semiprime::from_modulus(16), ParameterError);
  Rng rng(1);
  EXPECT_THROW(make_params(211, Semiprime::make(2, 11), Semiprime::make(3, 5), rng), ParameterError);
  Params bad = kEx1;
  bad.g_a = 63;
  EXPECT_THROW(bad.validate(), ParameterError);
}

TEST(ZnParams, RandomSetsValidate) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const Params params = random_params(rng);
    EXPECT_NO_THROW(params.validate()) << seed;
    EXPECT_NE(params.n_a(), params.n_b());
  }
}

TEST(ZnKeys, WorkedTable) {
  const auto s1 = member_from(kEx1, Side::A, 13, 7);
  EXPECT_EQ(s1.d, 5);
  EXPECT_EQ(s1.y, 150);
  const auto d1 = member_from(kEx1, Side::B, 5, 19);
  EXPECT_EQ(d1.d, 5);
  EXPECT_EQ(d1.y, 153);
  EXPECT_THROW(member_from(kEx1, Side::A, 4, 7), ParameterError);
  EXPECT_THROW(member_from(kEx1, Side::A, 13, 0), ParameterError);
}

TEST(ZnKeys, RandomKeysSatisfyInvariants) {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    for (Side side : {Side::A, Side::B}) {
      const auto key = member_keygen(kEx2, side, rng);
      EXPECT_EQ(key.e * key.d % kEx2.semi(side).phi, 1);
      EXPECT_EQ(key.y, mod_pow(kEx2.generator(side), key.x, kEx2.p));
    }
  }
}

TEST(ZnRound1, WorkedTable) {
  const Keys keys = ex1_keys();
  EXPECT_EQ(keys.y_b(), (std::vector<BigInt>{153, 12}));
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 8), (Round1Share{136, 148, 83}));
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 12).r, 114);
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 12).w, 71);
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 14).r, 134);
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 14).w, 134);
  EXPECT_THROW(sign_round1(kEx1, keys.y_b(), 0), ParameterError);
  EXPECT_THROW(sign_round1(kEx1, {}, 3), ParameterError);
}

// The worked table prints s_i = 171 and 210 for k = 12 and 14. Since g_B = 63
// has order 14, the correct values are 63^12 = 58 and 63^14 = 1.
TEST(ZnRound1, SValuesFollowGeneratorOrder) {
  const Keys keys = ex1_keys();
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 12).s, 58);
  EXPECT_EQ(sign_round1(kEx1, keys.y_b(), 14).s, 1);
  EXPECT_EQ(mod_pow(63, 2, 211), 171);
  EXPECT_EQ(mod_pow(63, 7, 211), 210);
}

TEST(ZnRound1, SecondWorkedTable) {
  const std::vector<BigInt> y_b{37552, 64089, 63449, 93579, 38061, 91435, 30671};
  EXPECT_EQ(sign_round1(kEx2, y_b, 42980), (Round1Share{22513, 68227, 59022}));
  EXPECT_EQ(sign_round1(kEx2, y_b, 19344), (Round1Share{40471, 35552, 91619}));
}

TEST(ZnChallenge, WorkedAggregates) {
  const Keys keys = ex1_keys();
  std::vector<Round1Share> shares;
  for (int k : {8, 12, 14}) shares.push_back(sign_round1(kEx1, keys.y_b(), k));
  const auto ch = aggregate_challenge(kEx1, "M", shares, keys.e_b());
  EXPECT_EQ(ch.r, 30);
  EXPECT_EQ(ch.w, 1);
  EXPECT_EQ(ch.s, 58);  // printed 144 comes from the misprinted s_i
  EXPECT_EQ(ch.t, ch.z);  // z^55 = z mod 14
  EXPECT_LT(ch.z, 14);
}

TEST(ZnChallenge, PrintedSharesGiveThePrintedAggregate) {
  const std::vector<Round1Share> printed{{136, 148, 83}, {114, 171, 71}, {134, 210, 134}};
  EXPECT_EQ(aggregate_challenge(kEx1, "M", printed, {5, 11}).s, 144);
}

TEST(ZnChallenge, SecondWorkedAggregates) {
  const std::vector<Round1Share> shares{{22513, 68227, 59022},
                                        {77234, 67990, 84473},
                                        {60319, 8171, 15368},
                                        {49375, 58517, 68284},
                                        {40471, 35552, 91619}};
  const auto ch = aggregate_challenge(kEx2, "M", shares, {3, 7, 11, 19, 51, 27, 91});
  EXPECT_EQ(ch.r, 41707);
  EXPECT_EQ(ch.s, 90653);
  EXPECT_EQ(ch.w, 91371);
  EXPECT_THROW(aggregate_challenge(kEx2, "M", {}, {3}), ParameterError);
}

TEST(ZnChallenge, HashVector) {
  EXPECT_EQ(challenge_hash("hello", 1, 14), 9);
  EXPECT_EQ(challenge_hash("hello", 91371, 187), 25);
}

TEST(ZnRound2, WorkedResponses) {
  const Keys keys = ex1_keys();
  for (int z = 0; z < 14; ++z) {
    Challenge ch{30, 58, 1, z, z, ""};
    EXPECT_EQ(sign_round2(ch, keys.signers[0], 8), 7 * z + 240);
    EXPECT_EQ(sign_round2(ch, keys.signers[2], 14), 21 * z + 420);
  }
}

TEST(ZnFinalize, WorkedReductions) {
  const Keys keys = ex1_keys();
  for (int z = 0; z < 14; ++z) {
    Challenge ch{30, 58, 1, z, z, ""};
    std::vector<BigInt> responses;
    const int ks[] = {8, 12, 14};
    for (int i = 0; i < 3; ++i) responses.push_back(sign_round2(ch, keys.signers[i], ks[i]));
    const BigInt v_bar = BigInt(44 * z + 1020) % 15;
    EXPECT_EQ(v_bar, 14 * z % 15);
    EXPECT_EQ(finalize(kEx1, responses, keys.d_a(), ch).u_bar, v_bar);
  }
  EXPECT_THROW(finalize(kEx1, {}, keys.d_a(), Challenge{}), ParameterError);
}

TEST(ZnDecode, Vectors) {
  const Keys keys = ex1_keys();
  EXPECT_EQ(decode_share(kEx1, Signature{30, 144, 0, 0}, keys.verifiers[0]), 171);
  EXPECT_EQ(decode_share(kEx1, Signature{30, 144, 0, 0}, keys.verifiers[1]), 123);
  EXPECT_EQ(decode_share(kEx1, Signature{30, 1, 0, 0}, keys.verifiers[0]), 1);
}

TEST(ZnVerify, WorkedMembershipEndToEnd) {
  const Keys keys = ex1_keys();
  for (const std::string message : {"M", "pay 5", "another"}) {
    const SignedRun run = sign(kEx1, keys, message, {8, 12, 14});
    const Verdict verdict = check(kEx1, keys, message, run.signature);
    EXPECT_TRUE(verdict.accepted) << message;
    EXPECT_EQ(verdict.reason, "accepted");
    EXPECT_EQ(verdict.a, run.v_bar);
    EXPECT_EQ(verdict.b, run.challenge.z);
  }
}

TEST(ZnVerify, PerturbedUBarFailsEquation) {
  const Keys keys = ex1_keys();
  const SignedRun run = sign(kEx1, keys, "M", {8, 12, 14});
  Signature bad = run.signature;
  bad.u_bar = (bad.u_bar + 1) % 15;
  const Verdict verdict = check(kEx1, keys, "M", bad);
  EXPECT_FALSE(verdict.accepted);
  EXPECT_FALSE(verdict.equation_ok);
  EXPECT_EQ(verdict.reason.rfind("equation-c mismatch", 0), 0u);
}

TEST(ZnVerify, MalformedIsAnError) {
  const Keys keys = ex1_keys();
  const SignedRun run = sign(kEx1, keys, "M", {8, 12, 14});
  Signature bad = run.signature;
  bad.t = 14;
  EXPECT_THROW(check_well_formed(kEx1, bad), ParameterError);
  EXPECT_THROW(check(kEx1, keys, "M", bad), ParameterError);
  bad = run.signature;
  bad.r = 0;
  EXPECT_THROW(check_well_formed(kEx1, bad), ParameterError);
}

TEST(ZnVerify, CompletenessAndIdentities) {
  Rng rng(100);
  std::vector<Params> sets{kEx1, kEx2};
  for (int i = 0; i < 3; ++i) sets.push_back(random_params(rng));
  for (const auto& params : sets) {
    for (std::size_t n : {1, 2, 3, 5}) {
      for (std::size_t m : {1, 2, 7}) {
        const Keys keys = random_keys(params, n, m, rng);
        std::vector<BigInt> ks;
        for (std::size_t i = 0; i < n; ++i) ks.push_back(rng.uniform(1, params.p - 1));
        const SignedRun run = sign(params, keys, "complete", ks);
        const Verdict verdict = check(params, keys, "complete", run.signature);
        EXPECT_TRUE(verdict.accepted) << params.p << " n=" << n << " m=" << m << " " << verdict.reason;
        EXPECT_EQ(verdict.a, run.v_bar);
        EXPECT_EQ(verdict.b, run.challenge.z);
      }
    }
  }
}

TEST(ZnProperties, ExponentProductIdentity) {
  Rng rng(6);
  const Keys keys = random_keys(kEx2, 5, 7, rng);
  EXPECT_EQ(product(keys.e_a()) * product(keys.d_a()) % kEx2.semi_a.phi, 1);
  EXPECT_EQ(product(keys.e_b()) * product(keys.d_b()) % kEx2.semi_b.phi, 1);
}

TEST(ZnProperties, ShareOrderInvariance) {
  Rng rng(8);
  const Keys keys = random_keys(kEx2, 4, 3, rng);
  std::vector<BigInt> ks;
  for (int i = 0; i < 4; ++i) ks.push_back(rng.uniform(1, kEx2.p - 1));
  std::vector<Round1Share> shares;
  for (const auto& k : ks) shares.push_back(sign_round1(kEx2, keys.y_b(), k));
  const auto reference = aggregate_challenge(kEx2, "perm", shares, keys.e_b());
  std::vector<std::size_t> order{0, 1, 2, 3};
  do {
    std::vector<Round1Share> permuted;
    std::vector<BigInt> responses;
    for (auto i : order) {
      permuted.push_back(shares[i]);
      responses.push_back(sign_round2(reference, keys.signers[i], ks[i]));
    }
    EXPECT_EQ(aggregate_challenge(kEx2, "perm", permuted, keys.e_b()), reference);
    std::vector<BigInt> in_order;
    for (std::size_t i = 0; i < 4; ++i) in_order.push_back(sign_round2(reference, keys.signers[i], ks[i]));
    EXPECT_EQ(exponent_layer::aggregate_responses(responses, kEx2.n_a()),
              exponent_layer::aggregate_responses(in_order, kEx2.n_a()));
  } while (std::next_permutation(order.begin(), order.end()));
}

namespace {

Verdict simulate_and_check(const Params& params, const Keys& keys, const BigInt& k, SimulationMode mode,
                           Signature* out = nullptr) {
  const auto sim = simulate_transcript(params, "sim", keys.verifiers, keys.e_a(), keys.y_a(), k, mode);
  if (out) *out = sim;
  std::vector<BigInt> shares;
  for (const auto& s : keys.signers) shares.push_back(decode_share(params, sim, s));
  return verify_mirrored(params, "sim", sim, keys.e_b(), keys.y_b(), keys.d_a(), shares);
}

}  // namespace

TEST(ZnSimulation, SingleVerifierModesCoincide) {
  Rng rng(12);
  const Keys keys = random_keys(kEx1, 3, 1, rng);
  for (int k = 1; k < 40; ++k) {
    Signature paper, corrected;
    EXPECT_TRUE(simulate_and_check(kEx1, keys, k, SimulationMode::paper, &paper).accepted);
    EXPECT_TRUE(simulate_and_check(kEx1, keys, k, SimulationMode::corrected, &corrected).accepted);
    EXPECT_EQ(paper, corrected);
  }
}

TEST(ZnSimulation, CorrectedModePassesForSeveralVerifiers) {
  Rng rng(13);
  for (const auto& params : {kEx1, kEx2}) {
    for (std::size_t m : {1, 2, 3}) {
      const Keys keys = random_keys(params, 3, m, rng);
      for (int i = 0; i < 10; ++i) {
        EXPECT_TRUE(simulate_and_check(params, keys, rng.uniform(1, params.p - 1), SimulationMode::corrected).accepted);
      }
    }
  }
}

// With two verifiers the literal aggregation adds k'r' one extra time, so the
// mirrored check passes exactly when n_B divides k'r'.
TEST(ZnSimulation, PaperModeTwoVerifiersCharacterised) {
  Rng rng(14);
  const Keys keys = random_keys(kEx1, 3, 2, rng);
  int failures = 0;
  for (int k = 1; k < 211; ++k) {
    Signature sim;
    const bool ok = simulate_and_check(kEx1, keys, k, SimulationMode::paper, &sim).accepted;
    EXPECT_EQ(ok, (BigInt(k) * sim.r) % kEx1.n_b() == 0) << k;
    if (!ok) ++failures;
  }
  EXPECT_GT(failures, 0);
}

TEST(ZnSimulation, SimulatedTupleSharesComponentRanges) {
  Rng rng(15);
  const Keys keys = random_keys(kEx2, 3, 3, rng);
  const SignedRun run = sign(kEx2, keys, "M", {5, 6, 7});
  Signature sim;
  simulate_and_check(kEx2, keys, 99, SimulationMode::corrected, &sim);
  EXPECT_LT(run.signature.t, kEx2.n_b());
  EXPECT_LT(run.signature.u_bar, kEx2.n_a());
  // Roles are exchanged: t' lives modulo n_A and u' modulo n_B.
  EXPECT_LT(sim.t, kEx2.n_a());
  EXPECT_LT(sim.u_bar, kEx2.n_b());
  EXPECT_GE(sim.r, 1);
  EXPECT_LT(sim.r, kEx2.p);
  EXPECT_GE(sim.s, 1);
  EXPECT_LT(sim.s, kEx2.p);
}
