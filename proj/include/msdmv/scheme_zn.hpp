#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msdmv/numtheory.hpp"

// Multi-signer designated multi-verifier signature over Z_p^*, combining a
// discrete-log commitment with an RSA-style exponent layer per system.
//
// System A (signers) works modulo n_A with generator g_A of order n_A, system
// B (verifiers) modulo n_B with g_B of order n_B; both n_A and n_B divide p-1.
namespace msdmv::zn_scheme {

enum class Side { A, B };

struct Params {
  BigInt p;
  Semiprime semi_a;
  Semiprime semi_b;
  BigInt g_a;
  BigInt g_b;

  const BigInt& n_a() const { return semi_a.n; }
  const BigInt& n_b() const { return semi_b.n; }
  const Semiprime& semi(Side side) const { return side == Side::A ? semi_a : semi_b; }
  const BigInt& generator(Side side) const { return side == Side::A ? g_a : g_b; }

  void validate() const;

  // Roles of the two systems exchanged; used for simulated transcripts.
  Params mirrored() const { return Params{p, semi_b, semi_a, g_b, g_a}; }

  // "paper-ex1": p=211, n_A=15, n_B=14, g_A=137, g_B=63.
  // "paper-ex2": p=102103, n_A=91, n_B=187, g_A=44494, g_B=12733.
  static Params named(std::string_view name);

  friend bool operator==(const Params&, const Params&) = default;
};

// Finds generators of the required orders. Throws ParameterError when n_A or
// n_B does not divide p-1.
Params make_params(const BigInt& p, const Semiprime& semi_a, const Semiprime& semi_b, Rng& rng);

// Small random semiprimes and the first prime p = k*lcm(n_A, n_B) + 1 after a
// random starting k.
Params random_params(Rng& rng);

struct MemberKey {
  Side side = Side::A;
  BigInt e;
  BigInt d;
  BigInt x;
  BigInt y;
  friend bool operator==(const MemberKey&, const MemberKey&) = default;
};

MemberKey member_from(const Params& params, Side side, const BigInt& e, const BigInt& x);
MemberKey member_keygen(const Params& params, Side side, Rng& rng);

struct Round1Share {
  BigInt r;
  BigInt s;
  BigInt w;
  friend bool operator==(const Round1Share&, const Round1Share&) = default;
};

struct Challenge {
  BigInt r;
  BigInt s;
  BigInt w;
  BigInt z;
  BigInt t;
  // Non-empty when z is 0 or 1, in which case t reveals z directly.
  std::string warning;
  friend bool operator==(const Challenge&, const Challenge&) = default;
};

struct Signature {
  BigInt r;
  BigInt s;
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
  BigInt c;
  std::string reason;
};

enum class SimulationMode { paper, corrected };

// H2(M, w) reduced into [0, modulus).
BigInt challenge_hash(std::string_view message, const BigInt& w, const BigInt& modulus);

Round1Share sign_round1(const Params& params, const std::vector<BigInt>& verifier_pubs, const BigInt& k);

Challenge aggregate_challenge(const Params& params, std::string_view message,
                              const std::vector<Round1Share>& shares,
                              const std::vector<BigInt>& verifier_e);

// Unreduced v_i = z*x + k*r.
BigInt sign_round2(const Challenge& challenge, const MemberKey& signer, const BigInt& k);

Signature finalize(const Params& params, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d, const Challenge& challenge);

// z_j = s^(x_j) mod p.
BigInt decode_share(const Params& params, const Signature& signature, const MemberKey& verifier);

// Throws ParameterError when a component is out of range.
void check_well_formed(const Params& params, const Signature& signature);

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
               const std::vector<BigInt>& signer_e, const std::vector<BigInt>& signer_y,
               const std::vector<BigInt>& verifier_d, const std::vector<BigInt>& decode_shares);

// Transcript produced by system B alone. In paper mode every verifier adds
// k'r' to the response, which only verifies when there is a single verifier.
Signature simulate_transcript(const Params& params, std::string_view message,
                              const std::vector<MemberKey>& verifiers, const std::vector<BigInt>& signer_e,
                              const std::vector<BigInt>& signer_y, const BigInt& k, SimulationMode mode);

// verify() with A and B exchanged: verifier publics take the signer slots,
// signer exponents decode t', and signers supply s'^(x_A) shares.
Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                        const std::vector<BigInt>& verifier_e, const std::vector<BigInt>& verifier_y,
                        const std::vector<BigInt>& signer_d, const std::vector<BigInt>& signer_shares);

}  // namespace msdmv::zn_scheme
