#include <gtest/gtest.h>

#include <algorithm>

#include "msdmv/error.hpp"
#include "msdmv/scheme_pairing.hpp"

using namespace msdmv;
using namespace msdmv::pairing_scheme;

namespace {

const PairingParams kEx1 = PairingParams::named("paper-ex1");

std::vector<Member> members(const std::vector<int>& secrets, const PairingParams& params) {
  std::vector<Member> out;
  for (int s : secrets) out.push_back(member_from_secret(s, params));
  return out;
}

GElem sum_of(const std::vector<Member>& list, const PairingParams& params) {
  std::vector<GElem> pubs;
  for (const auto& m : list) pubs.push_back(m.public_point);
  return aggregate_public(pubs, params);
}

}  // namespace

TEST(Keygen, WorkedPublics) {
  EXPECT_EQ(member_from_secret(3, kEx1).public_point.value, 6);
  EXPECT_EQ(member_from_secret(9, kEx1).public_point.value, 7);
  EXPECT_EQ(member_from_secret(6, kEx1).public_point.value, 1);
  EXPECT_THROW(member_from_secret(0, kEx1), ParameterError);
  EXPECT_THROW(member_from_secret(11, kEx1), ParameterError);
}

TEST(Keygen, RandomSecretInRange) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto m = keygen(kEx1, rng);
    EXPECT_GE(m.secret, 1);
    EXPECT_LT(m.secret, 11);
    EXPECT_EQ(m.public_point.value, m.secret * 2 % 11);
  }
}

TEST(Aggregate, Examples) {
  EXPECT_EQ(aggregate_public({GElem{6}, GElem{3}, GElem{7}}, kEx1).value, 5);
  EXPECT_EQ(aggregate_public({GElem{1}, GElem{5}}, kEx1).value, 6);
  EXPECT_EQ(aggregate_public({GElem{4}}, kEx1).value, 4);
  EXPECT_THROW(aggregate_public({}, kEx1), ParameterError);
}

TEST(SignShare, WorkedExponentsAtCEqualsOne) {
  const GElem hashed{2};  // H1(M) = 2c with c = 1
  const auto signers = members({3, 7, 9}, kEx1);
  EXPECT_EQ(sign_share_hashed(hashed, signers[0], GElem{6}, kEx1).sigma.value, 6);
  EXPECT_EQ(sign_share_hashed(hashed, signers[1], GElem{6}, kEx1).sigma.value, 12);
  EXPECT_EQ(sign_share_hashed(hashed, signers[0], GElem{0}, kEx1).sigma.value, 1);
}

TEST(VerifyShare, WorkedExponentsAtCEqualsOne) {
  const GElem hashed{2};
  const auto verifiers = members({6, 8}, kEx1);
  EXPECT_EQ(verify_share_hashed(hashed, verifiers[0], GElem{5}, kEx1).sigma.value, 16);
  EXPECT_EQ(verify_share_hashed(hashed, verifiers[1], GElem{5}, kEx1).sigma.value, 6);
  EXPECT_EQ(verify_share_hashed(hashed, verifiers[0], GElem{0}, kEx1).sigma.value, 1);
}

TEST(Combine, Examples) {
  EXPECT_EQ(combine({Signature{GTElem{6}}}, kEx1).sigma.value, 6);
  EXPECT_EQ(combine({Signature{GTElem{6}}, Signature{GTElem{12}}}, kEx1).sigma.value, 72 % 23);
  EXPECT_THROW(combine({}, kEx1), ParameterError);
}

TEST(Verify, WorkedExamplesAccept) {
  for (const char* set : {"paper-ex1", "paper-ex2"}) {
    const auto params = PairingParams::named(set);
    const bool ex1 = std::string(set) == "paper-ex1";
    const auto signers = ex1 ? members({3, 7, 9}, params) : members({7, 12, 15, 19, 31}, params);
    const auto verifiers = ex1 ? members({6, 8}, params) : members({10, 13, 17, 23, 51, 27, 36}, params);
    const GElem u = sum_of(signers, params), v = sum_of(verifiers, params);
    for (const std::string message : {"", "transfer 10", "M"}) {
      std::vector<Signature> sigma_shares, zeta_shares;
      for (const auto& s : signers) sigma_shares.push_back(sign_share(message, s, v, params));
      for (const auto& d : verifiers) zeta_shares.push_back(verify_share(message, d, u, params));
      const Signature sigma = combine(sigma_shares, params);
      EXPECT_TRUE(verify(sigma, zeta_shares, params));
      // Simulation is the identity for this scheme.
      EXPECT_EQ(combine(zeta_shares, params), sigma);
      EXPECT_FALSE(verify(Signature{gt_mul(sigma.sigma, GTElem{params.h}, params)}, zeta_shares, params));
    }
  }
}

TEST(Verify, ShareOrderIrrelevant) {
  const auto signers = members({3, 7, 9}, kEx1);
  const GElem v{6};
  std::vector<Signature> shares;
  for (const auto& s : signers) shares.push_back(sign_share("order", s, v, kEx1));
  const auto expected = combine(shares, kEx1);
  std::sort(shares.begin(), shares.end(), [](const auto& a, const auto& b) { return a.sigma.value < b.sigma.value; });
  do {
    EXPECT_EQ(combine(shares, kEx1), expected);
  } while (std::next_permutation(shares.begin(), shares.end(),
                                 [](const auto& a, const auto& b) { return a.sigma.value < b.sigma.value; }));
}

TEST(Verify, CompletenessRandomParams) {
  Rng rng(77);
  for (int p : {11, 53, 101}) {
    const auto params = gen_pairing_params(p, rng);
    for (std::size_t n : {1, 2, 3, 5}) {
      for (std::size_t m : {1, 2, 7}) {
        std::vector<Member> signers, verifiers;
        for (std::size_t i = 0; i < n; ++i) signers.push_back(keygen(params, rng));
        for (std::size_t j = 0; j < m; ++j) verifiers.push_back(keygen(params, rng));
        const GElem u = sum_of(signers, params), v = sum_of(verifiers, params);
        std::vector<Signature> sigma_shares, zeta_shares;
        for (const auto& s : signers) sigma_shares.push_back(sign_share("complete", s, v, params));
        for (const auto& d : verifiers) zeta_shares.push_back(verify_share("complete", d, u, params));
        EXPECT_TRUE(verify(combine(sigma_shares, params), zeta_shares, params)) << p << " " << n << " " << m;
      }
    }
  }
}
