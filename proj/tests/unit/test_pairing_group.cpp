#include <gtest/gtest.h>

#include "convert.hpp"
#include "msdmv/error.hpp"
#include "msdmv/hash.hpp"
#include "msdmv/numtheory.hpp"
#include "msdmv/pairing_group.hpp"
#include "oracle.hpp"

using namespace msdmv;
using testing_support::u64;

// Digest vectors below come from an independent SHA-256 implementation.
TEST(Hash, Sha256KnownAnswers) {
  EXPECT_EQ(to_hex(sha256("abc")), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(to_hex(sha256("")), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Hash, HexRoundTrip) {
  const Digest d = sha256("leaf");
  EXPECT_EQ(digest_from_hex(to_hex(d)), d);
  EXPECT_THROW(digest_from_hex("zz"), ParameterError);
}

TEST(Hash, ResidueVectors) {
  EXPECT_EQ(hash_to_residue("hello", "1", 14), 9);
  EXPECT_EQ(hash_to_residue("hello", "91371", 187), 25);
  EXPECT_EQ(hash_to_residue("hello", "O", 14), 9);
}

TEST(PairingParams, Named) {
  const auto ex1 = PairingParams::named("paper-ex1");
  EXPECT_EQ(ex1, (PairingParams{11, 2, 23, 2}));
  const auto ex2 = PairingParams::named("paper-ex2");
  EXPECT_EQ(ex2, (PairingParams{53, 5, 107, 3}));
  ex1.validate();
  ex2.validate();
  EXPECT_THROW(PairingParams::named("nope"), ParameterError);
}

TEST(PairingParams, GenerateForWorkedPrimes) {
  Rng rng(1);
  const auto p11 = gen_pairing_params(11, rng);
  EXPECT_EQ(p11.q, 23);
  EXPECT_EQ(element_order(p11.h, p11.q), 11);
  EXPECT_EQ(element_order(2, 23), 11);  // h=2 is admissible
  const auto p53 = gen_pairing_params(53, rng);
  EXPECT_EQ(p53.q, 107);
  EXPECT_EQ(mod_pow(3, 53, 107), 1);
  EXPECT_THROW(gen_pairing_params(4, rng), ParameterError);
}

TEST(PairingParams, ValidateRejects) {
  EXPECT_THROW((PairingParams{11, 2, 29, 2}).validate(), ParameterError);  // 11 does not divide 28
  EXPECT_THROW((PairingParams{11, 0, 23, 2}).validate(), ParameterError);
  EXPECT_THROW((PairingParams{11, 2, 23, 5}).validate(), ParameterError);  // order of 5 mod 23 is 22
}

TEST(Dlog, Examples) {
  const auto params = PairingParams::named("paper-ex1");
  EXPECT_EQ(dlog_additive(GElem{6}, params), 3);
  EXPECT_EQ(dlog_additive(GElem{7}, params), 9);
  EXPECT_EQ(dlog_additive(GElem{0}, params), 0);
  for (std::uint64_t a = 0; a < 53; ++a) {
    EXPECT_EQ(u64(dlog_additive(GElem{a}, PairingParams::named("paper-ex2"))), oracle::brute_dlog_additive(a, 5, 53));
  }
}

TEST(Pair, Examples) {
  const auto params = PairingParams::named("paper-ex1");
  EXPECT_EQ(pair(GElem{2}, GElem{2}, params).value, 2);
  EXPECT_EQ(pair(GElem{0}, GElem{5}, params).value, 1);
  EXPECT_EQ(pair(GElem{6}, GElem{5}, params).value, 4);
}

TEST(Pair, BilinearSymmetricExhaustiveP11) {
  const auto params = PairingParams::named("paper-ex1");
  for (std::uint64_t a = 0; a < 11; ++a) {
    for (std::uint64_t b = 0; b < 11; ++b) {
      const GTElem base = pair(GElem{a}, GElem{b}, params);
      ASSERT_EQ(base, pair(GElem{b}, GElem{a}, params));
      ASSERT_EQ(mod_pow(base.value, 11, 23), 1);
      for (std::uint64_t m = 0; m < 11; ++m) {
        for (std::uint64_t n = 0; n < 11; ++n) {
          ASSERT_EQ(pair(GElem{m * a % 11}, GElem{n * b % 11}, params), gt_pow(base, m * n, params));
        }
      }
    }
  }
  EXPECT_NE(pair(GElem{params.g}, GElem{params.g}, params).value, 1);
}

TEST(HashToGroup, Vectors) {
  const auto p11 = PairingParams::named("paper-ex1");
  const auto p53 = PairingParams::named("paper-ex2");
  EXPECT_EQ(hash_to_group("", p11).value, 10);
  EXPECT_EQ(hash_to_group("abc", p11).value, 6);
  EXPECT_EQ(hash_to_group("abc", p53).value, 14);
  EXPECT_EQ(hash_to_group("abc", p11), hash_to_group("abc", p11));
}

TEST(HashToGroup, NeverZero) {
  const auto params = PairingParams::named("paper-ex1");
  for (int i = 0; i < 500; ++i) {
    const auto v = hash_to_group("m" + std::to_string(i), params).value;
    EXPECT_GE(v, 1);
    EXPECT_LT(v, 11);
  }
}

TEST(GroupOps, Membership) {
  const auto params = PairingParams::named("paper-ex2");
  EXPECT_TRUE(in_target_group(GTElem{3}, params));
  EXPECT_FALSE(in_target_group(GTElem{2}, params));  // 2 has order 106 mod 107
  EXPECT_FALSE(in_target_group(GTElem{0}, params));
  EXPECT_TRUE(in_group(GElem{52}, params));
  EXPECT_FALSE(in_group(GElem{53}, params));
  EXPECT_EQ(g_add(GElem{50}, GElem{10}, params).value, 7);
  EXPECT_EQ(g_scale(3, GElem{20}, params).value, 7);
  EXPECT_EQ(gt_mul(GTElem{3}, GTElem{9}, params).value, 27);
}
