#include "msdmv/scheme_zn.hpp"

#include "msdmv/error.hpp"
#include "msdmv/exponent_layer.hpp"
#include "msdmv/hash.hpp"

namespace msdmv::zn_scheme {

namespace {

BigInt product_mod(const std::vector<BigInt>& values, const BigInt& modulus) {
  BigInt acc = 1;
  for (const auto& v : values) acc = acc * v % modulus;
  return acc;
}

void require_unit(const BigInt& value, const BigInt& p, const char* what) {
  if (value < 1 || value >= p) throw ParameterError(std::string(what) + " must lie in [1, p)");
}

void require_same_size(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs == 0 || lhs != rhs) throw ParameterError(std::string(what) + " must be nonempty and of equal length");
}

const BigInt kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

Semiprime random_semiprime(Rng& rng) {
  const auto count = std::size(kSmallPrimes);
  const auto i = rng.uniform_u64(0, count - 1);
  auto j = rng.uniform_u64(0, count - 2);
  if (j >= i) ++j;
  return Semiprime::make(kSmallPrimes[i], kSmallPrimes[j]);
}

}  // namespace

void Params::validate() const {
  if (!is_prime(p)) throw ParameterError("p must be prime");
  for (const Semiprime* semi : {&semi_a, &semi_b}) {
    if (*semi != Semiprime::make(semi->p_factor, semi->q_factor)) throw ParameterError("inconsistent semiprime");
    if ((p - 1) % semi->n != 0) throw ParameterError(to_decimal(semi->n) + " does not divide p - 1");
  }
  require_unit(g_a, p, "g_A");
  require_unit(g_b, p, "g_B");
  if (element_order(g_a, p) != n_a()) throw ParameterError("g_A does not have order n_A");
  if (element_order(g_b, p) != n_b()) throw ParameterError("g_B does not have order n_B");
}

Params Params::named(std::string_view name) {
  if (name == "paper-ex1") return {211, Semiprime::make(3, 5), Semiprime::make(2, 7), 137, 63};
  if (name == "paper-ex2") return {102103, Semiprime::make(7, 13), Semiprime::make(11, 17), 44494, 12733};
  throw ParameterError("unknown Z_p* parameter set '" + std::string(name) + "'");
}

Params make_params(const BigInt& p, const Semiprime& semi_a, const Semiprime& semi_b, Rng& rng) {
  if (!is_prime(p)) throw ParameterError(to_decimal(p) + " is not prime");
  Params params{p, semi_a, semi_b, find_element_of_order(semi_a.n, p, rng),
                find_element_of_order(semi_b.n, p, rng)};
  params.validate();
  return params;
}

Params random_params(Rng& rng) {
  const Semiprime semi_a = random_semiprime(rng);
  Semiprime semi_b = random_semiprime(rng);
  while (semi_b == semi_a) semi_b = random_semiprime(rng);
  const BigInt lcm = boost::multiprecision::lcm(semi_a.n, semi_b.n);
  BigInt p = lcm * rng.uniform(1, 50) + 1;
  while (!is_prime(p)) p += lcm;
  return make_params(p, semi_a, semi_b, rng);
}

MemberKey member_from(const Params& params, Side side, const BigInt& e, const BigInt& x) {
  const Semiprime& semi = params.semi(side);
  if (e < 1) throw ParameterError("public exponent must be positive");
  if (x < 1 || x >= params.p) throw ParameterError("discrete-log secret must lie in [1, p)");
  BigInt d;
  try {
    d = mod_inv(e, semi.phi);
  } catch (const NotInvertibleError& err) {
    throw ParameterError("public exponent " + to_decimal(e) + " is not coprime to phi (gcd " +
                         to_decimal(err.gcd()) + ")");
  }
  return MemberKey{side, e, d, x, mod_pow(params.generator(side), x, params.p)};
}

MemberKey member_keygen(const Params& params, Side side, Rng& rng) {
  const BigInt e = exponent_layer::sample_exponent(params.semi(side).phi, rng);
  return member_from(params, side, e, rng.uniform(1, params.p - 1));
}

BigInt challenge_hash(std::string_view message, const BigInt& w, const BigInt& modulus) {
  return hash_to_residue(message, to_decimal(w), modulus);
}

Round1Share sign_round1(const Params& params, const std::vector<BigInt>& verifier_pubs, const BigInt& k) {
  if (k < 1) throw ParameterError("nonce k must be at least 1");
  if (verifier_pubs.empty()) throw ParameterError("verifier key list is empty");
  const BigInt& p = params.p;
  const BigInt y_inv = mod_inv(product_mod(verifier_pubs, p), p);
  const BigInt w = mod_pow(params.g_a, k, p);
  return {w * mod_pow(y_inv, k, p) % p, mod_pow(params.g_b, k, p), w};
}

Challenge aggregate_challenge(const Params& params, std::string_view message,
                              const std::vector<Round1Share>& shares,
                              const std::vector<BigInt>& verifier_e) {
  if (shares.empty()) throw ParameterError("no round-1 shares to aggregate");
  const BigInt& p = params.p;
  BigInt r = 1, s = 1, w = 1;
  for (const auto& share : shares) {
    require_unit(share.r, p, "r_i");
    require_unit(share.s, p, "s_i");
    require_unit(share.w, p, "w_i");
    r = r * share.r % p;
    s = s * share.s % p;
    w = w * share.w % p;
  }
  Challenge out;
  out.r = r;
  out.s = mod_pow(s, r, p);
  out.w = mod_pow(w, r, p);
  out.z = challenge_hash(message, out.w, params.n_b());
  out.t = exponent_layer::blind(out.z, verifier_e, params.n_b());
  if (out.z <= 1) out.warning = "degenerate challenge z = " + to_decimal(out.z) + "; t reveals z";
  return out;
}

BigInt sign_round2(const Challenge& challenge, const MemberKey& signer, const BigInt& k) {
  return challenge.z * signer.x + k * challenge.r;
}

Signature finalize(const Params& params, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d, const Challenge& challenge) {
  const BigInt v_bar = exponent_layer::aggregate_responses(responses, params.n_a());
  return {challenge.r, challenge.s, challenge.t, exponent_layer::seal(v_bar, signer_d, params.n_a())};
}

BigInt decode_share(const Params& params, const Signature& signature, const MemberKey& verifier) {
  return mod_pow(signature.s, verifier.x, params.p);
}

void check_well_formed(const Params& params, const Signature& signature) {
  require_unit(signature.r, params.p, "r");
  require_unit(signature.s, params.p, "s");
  if (signature.t < 0 || signature.t >= params.n_b()) throw ParameterError("t must lie in [0, n_B)");
  if (signature.u_bar < 0 || signature.u_bar >= params.n_a()) throw ParameterError("u_bar must lie in [0, n_A)");
}

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
               const std::vector<BigInt>& signer_e, const std::vector<BigInt>& signer_y,
               const std::vector<BigInt>& verifier_d, const std::vector<BigInt>& decode_shares) {
  check_well_formed(params, signature);
  require_same_size(signer_e.size(), signer_y.size(), "signer key lists");
  require_same_size(verifier_d.size(), decode_shares.size(), "verifier key and share lists");
  for (const auto& y : signer_y) require_unit(y, params.p, "y_A");
  for (const auto& z : decode_shares) require_unit(z, params.p, "decode share");

  const BigInt& p = params.p;
  Verdict out;
  out.a = exponent_layer::unseal(signature.u_bar, signer_e, params.n_a());
  out.b = exponent_layer::unseal(signature.t, verifier_d, params.n_b());
  const BigInt y_inv = mod_inv(product_mod(signer_y, p), p);
  out.c = mod_pow(params.g_a, out.a, p) * mod_pow(y_inv, out.b, p) % p;
  const BigInt expected = mod_pow(signature.r, signature.r, p) * product_mod(decode_shares, p) % p;
  out.equation_ok = out.c == expected;
  out.hash_ok = out.b == challenge_hash(message, out.c, params.n_b());
  out.accepted = out.equation_ok && out.hash_ok;
  if (out.accepted) {
    out.reason = "accepted";
  } else if (!out.equation_ok && !out.hash_ok) {
    out.reason = "equation-c mismatch, hash mismatch";
  } else {
    out.reason = out.equation_ok ? "hash mismatch" : "equation-c mismatch";
  }
  return out;
}

Signature simulate_transcript(const Params& params, std::string_view message,
                              const std::vector<MemberKey>& verifiers, const std::vector<BigInt>& signer_e,
                              const std::vector<BigInt>& signer_y, const BigInt& k, SimulationMode mode) {
  if (k < 1) throw ParameterError("nonce k must be at least 1");
  if (verifiers.empty()) throw ParameterError("verifier list is empty");
  const BigInt& p = params.p;
  const BigInt r = mod_pow(params.g_b, k, p) * mod_pow(mod_inv(product_mod(signer_y, p), p), k, p) % p;
  const BigInt s = mod_pow(params.g_a, k * r, p);
  const BigInt w = mod_pow(params.g_b, k * r, p);
  const BigInt z = challenge_hash(message, w, params.n_a());
  const BigInt t = exponent_layer::blind(z, signer_e, params.n_a());

  std::vector<BigInt> responses;
  std::vector<BigInt> verifier_d;
  for (const auto& key : verifiers) {
    verifier_d.push_back(key.d);
    responses.push_back(z * key.x);
  }
  if (mode == SimulationMode::paper) {
    for (auto& v : responses) v += k * r;
  } else {
    responses.front() += k * r;
  }
  const BigInt v = exponent_layer::aggregate_responses(responses, params.n_b());
  return {r, s, t, exponent_layer::seal(v, verifier_d, params.n_b())};
}

Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                        const std::vector<BigInt>& verifier_e, const std::vector<BigInt>& verifier_y,
                        const std::vector<BigInt>& signer_d, const std::vector<BigInt>& signer_shares) {
  return verify(params.mirrored(), message, simulated, verifier_e, verifier_y, signer_d, signer_shares);
}

}  // namespace msdmv::zn_scheme
