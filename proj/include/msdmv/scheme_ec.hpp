#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msdmv/eccurve.hpp"
#include "msdmv/numtheory.hpp"
#include "msdmv/scheme_zn.hpp"

// Elliptic-curve variant of the Z_p^* scheme. Group products become point
// sums, the aggregated s and w are plain sums, and responses carry no r factor.
namespace msdmv::ec_scheme {

using zn_scheme::Side;
using zn_scheme::SimulationMode;

struct Params {
  Curve curve;
  Point P;  // order n_A
  Point Q;  // order n_B
  Semiprime semi_a;
  Semiprime semi_b;
  BigInt group_order;

  const BigInt& n_a() const { return semi_a.n; }
  const BigInt& n_b() const { return semi_b.n; }
  const Semiprime& semi(Side side) const { return side == Side::A ? semi_a : semi_b; }
  const Point& base(Side side) const { return side == Side::A ? P : Q; }

  void validate() const;
  Params mirrored() const { return Params{curve, Q, P, semi_b, semi_a, group_order}; }

  // "paper-ex1": y^2 = x^3 + 2 over Z_419, P=(22,151), Q=(55,156), n_A=15, n_B=14.
  // "paper-ex2": y^2 = x^3 + 5 over Z_6793, P=(3245,4097), Q=(5223,4702), n_A=91, n_B=38.
  static Params named(std::string_view name);

  friend bool operator==(const Params&, const Params&) = default;
};

// Finds base points of the required orders on a given curve.
Params make_params(const Curve& curve, const Semiprime& semi_a, const Semiprime& semi_b, Rng& rng);

// Random curve over a prime below max_p whose order has two distinct
// square-free semiprime divisors.
Params random_params(Rng& rng, long max_p = 1000);

struct MemberKey {
  Side side = Side::A;
  BigInt e;
  BigInt d;
  BigInt x;
  Point y;
  friend bool operator==(const MemberKey&, const MemberKey&) = default;
};

MemberKey member_from(const Params& params, Side side, const BigInt& e, const BigInt& x);
MemberKey member_keygen(const Params& params, Side side, Rng& rng);

struct Round1Share {
  Point r;
  Point s;
  Point w;
  friend bool operator==(const Round1Share&, const Round1Share&) = default;
};

struct Challenge {
  Point r;
  Point s;
  Point w;
  BigInt z;
  BigInt t;
  std::string warning;
  friend bool operator==(const Challenge&, const Challenge&) = default;
};

struct Signature {
  Point r;
  Point s;
  BigInt t;
  BigInt u_bar;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Verdict {
  bool accepted = false;
  bool equation_ok = false;
  bool hash_ok = false;
  BigInt a;
  BigInt b;
  Point c;
  std::string reason;
};

// H3(M, c) reduced into [0, modulus), hashing the point encoding.
BigInt challenge_hash(std::string_view message, const Point& point, const BigInt& modulus);

Round1Share sign_round1(const Params& params, const std::vector<Point>& verifier_pubs, const BigInt& k);

Challenge aggregate_challenge(const Params& params, std::string_view message,
                              const std::vector<Round1Share>& shares,
                              const std::vector<BigInt>& verifier_e);

// Unreduced v_i = z*x + k.
BigInt sign_round2(const Challenge& challenge, const MemberKey& signer, const BigInt& k);

Signature finalize(const Params& params, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d, const Challenge& challenge);

// z_j = [x_j]s.
Point decode_share(const Params& params, const Signature& signature, const MemberKey& verifier);

void check_well_formed(const Params& params, const Signature& signature);

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
                 const std::vector<BigInt>& signer_e, const std::vector<Point>& signer_y,
                 const std::vector<BigInt>& verifier_d, const std::vector<Point>& decode_shares);

Signature simulate_transcript(const Params& params, std::string_view message,
                              const std::vector<MemberKey>& verifiers, const std::vector<BigInt>& signer_e,
                              const std::vector<Point>& signer_y, const BigInt& k, SimulationMode mode);

Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                          const std::vector<BigInt>& verifier_e, const std::vector<Point>& verifier_y,
                          const std::vector<BigInt>& signer_d, const std::vector<Point>& signer_shares);

}  // namespace msdmv::ec_scheme
