#include "msdmv/scheme_ec.hpp"

#include <algorithm>

#include "msdmv/error.hpp"
#include "msdmv/exponent_layer.hpp"
#include "msdmv/hash.hpp"

namespace msdmv::ec_scheme {

namespace {

Point sum_points(const std::vector<Point>& points, const Curve& curve) {
  Point acc = Point::at_infinity();
  for (const auto& pt : points) acc = point_add(acc, pt, curve);
  return acc;
}

void require_same_size(std::size_t lhs, std::size_t rhs, const char* what) {
  if (lhs == 0 || lhs != rhs) throw ParameterError(std::string(what) + " must be nonempty and of equal length");
}

// Distinct-prime semiprime divisors of n.
std::vector<Semiprime> semiprime_divisors(const BigInt& n) {
  auto factors = prime_factors(n);
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  std::vector<Semiprime> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) out.push_back(Semiprime::make(factors[i], factors[j]));
  }
  return out;
}

}  // namespace

void Params::validate() const {
  curve.validate();
  if (!on_curve(P, curve) || !on_curve(Q, curve)) throw ParameterError("base points must lie on the curve");
  for (const Semiprime* semi : {&semi_a, &semi_b}) {
    if (*semi != Semiprime::make(semi->p_factor, semi->q_factor)) throw ParameterError("inconsistent semiprime");
    if (group_order % semi->n != 0) throw ParameterError(to_decimal(semi->n) + " does not divide the group order");
  }
  if (point_order(P, curve, group_order) != n_a()) throw ParameterError("P does not have order n_A");
  if (point_order(Q, curve, group_order) != n_b()) throw ParameterError("Q does not have order n_B");
}

Params Params::named(std::string_view name) {
  if (name == "paper-ex1") {
    return {Curve{419, 0, 2}, Point::affine(22, 151), Point::affine(55, 156), Semiprime::make(3, 5),
            Semiprime::make(2, 7), 420};
  }
  if (name == "paper-ex2") {
    return {Curve{6793, 0, 5}, Point::affine(3245, 4097), Point::affine(5223, 4702), Semiprime::make(7, 13),
            Semiprime::make(2, 19), 6916};
  }
  throw ParameterError("unknown elliptic-curve parameter set '" + std::string(name) + "'");
}

Params make_params(const Curve& curve, const Semiprime& semi_a, const Semiprime& semi_b, Rng& rng) {
  const BigInt order = curve_order(curve);
  Params params{curve,
                find_point_of_order(semi_a.n, curve, order, rng),
                find_point_of_order(semi_b.n, curve, order, rng),
                semi_a,
                semi_b,
                order};
  params.validate();
  return params;
}

Params random_params(Rng& rng, long max_p) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const BigInt p = rng.uniform(5, max_p - 1);
    if (!is_prime(p)) continue;
    const Curve curve{p, rng.uniform(0, p - 1), rng.uniform(0, p - 1)};
    if (mod_floor(4 * curve.a * curve.a * curve.a + 27 * curve.b * curve.b, p) == 0) continue;
    const auto candidates = semiprime_divisors(curve_order(curve));
    if (candidates.size() < 2) continue;
    const auto i = rng.uniform_u64(0, candidates.size() - 1);
    auto j = rng.uniform_u64(0, candidates.size() - 2);
    if (j >= i) ++j;
    try {
      return make_params(curve, candidates[i], candidates[j], rng);
    } catch (const SearchFailure&) {
      // Non-cyclic group without a point of the requested order; next curve.
    }
  }
  throw SearchFailure("no suitable random curve found");
}

MemberKey member_from(const Params& params, Side side, const BigInt& e, const BigInt& x) {
  const Semiprime& semi = params.semi(side);
  if (e < 1) throw ParameterError("public exponent must be positive");
  if (x < 1 || x >= params.curve.p) throw ParameterError("discrete-log secret must lie in [1, p)");
  BigInt d;
  try {
    d = mod_inv(e, semi.phi);
  } catch (const NotInvertibleError& err) {
    throw ParameterError("public exponent " + to_decimal(e) + " is not coprime to phi (gcd " +
                         to_decimal(err.gcd()) + ")");
  }
  return MemberKey{side, e, d, x, scalar_mul(x, params.base(side), params.curve)};
}

MemberKey member_keygen(const Params& params, Side side, Rng& rng) {
  const BigInt e = exponent_layer::sample_exponent(params.semi(side).phi, rng);
  return member_from(params, side, e, rng.uniform(1, params.curve.p - 1));
}

BigInt challenge_hash(std::string_view message, const Point& point, const BigInt& modulus) {
  return hash_to_residue(message, encode_point(point), modulus);
}

Round1Share sign_round1(const Params& params, const std::vector<Point>& verifier_pubs, const BigInt& k) {
  if (k < 1) throw ParameterError("nonce k must be at least 1");
  if (verifier_pubs.empty()) throw ParameterError("verifier key list is empty");
  const Curve& curve = params.curve;
  const Point w = scalar_mul(k, params.P, curve);
  const Point masked = scalar_mul(k, sum_points(verifier_pubs, curve), curve);
  return {point_sub(w, masked, curve), scalar_mul(k, params.Q, curve), w};
}

Challenge aggregate_challenge(const Params& params, std::string_view message,
                              const std::vector<Round1Share>& shares,
                              const std::vector<BigInt>& verifier_e) {
  if (shares.empty()) throw ParameterError("no round-1 shares to aggregate");
  const Curve& curve = params.curve;
  Challenge out;
  for (const auto& share : shares) {
    out.r = point_add(out.r, share.r, curve);
    out.s = point_add(out.s, share.s, curve);
    out.w = point_add(out.w, share.w, curve);
  }
  out.z = challenge_hash(message, out.w, params.n_b());
  out.t = exponent_layer::blind(out.z, verifier_e, params.n_b());
  if (out.z <= 1) out.warning = "degenerate challenge z = " + to_decimal(out.z) + "; t reveals z";
  return out;
}

BigInt sign_round2(const Challenge& challenge, const MemberKey& signer, const BigInt& k) {
  return challenge.z * signer.x + k;
}

Signature finalize(const Params& params, const std::vector<BigInt>& responses,
                   const std::vector<BigInt>& signer_d, const Challenge& challenge) {
  const BigInt v_bar = exponent_layer::aggregate_responses(responses, params.n_a());
  return {challenge.r, challenge.s, challenge.t, exponent_layer::seal(v_bar, signer_d, params.n_a())};
}

Point decode_share(const Params& params, const Signature& signature, const MemberKey& verifier) {
  return scalar_mul(verifier.x, signature.s, params.curve);
}

void check_well_formed(const Params& params, const Signature& signature) {
  if (!on_curve(signature.r, params.curve)) throw ParameterError("r is not on the curve");
  if (!on_curve(signature.s, params.curve)) throw ParameterError("s is not on the curve");
  if (signature.t < 0 || signature.t >= params.n_b()) throw ParameterError("t must lie in [0, n_B)");
  if (signature.u_bar < 0 || signature.u_bar >= params.n_a()) throw ParameterError("u_bar must lie in [0, n_A)");
}

Verdict verify(const Params& params, std::string_view message, const Signature& signature,
               const std::vector<BigInt>& signer_e, const std::vector<Point>& signer_y,
               const std::vector<BigInt>& verifier_d, const std::vector<Point>& decode_shares) {
  check_well_formed(params, signature);
  require_same_size(signer_e.size(), signer_y.size(), "signer key lists");
  require_same_size(verifier_d.size(), decode_shares.size(), "verifier key and share lists");
  const Curve& curve = params.curve;
  for (const auto& y : signer_y) {
    if (!on_curve(y, curve)) throw ParameterError("signer public point is not on the curve");
  }
  for (const auto& z : decode_shares) {
    if (!on_curve(z, curve)) throw ParameterError("decode share is not on the curve");
  }

  Verdict out;
  out.a = exponent_layer::unseal(signature.u_bar, signer_e, params.n_a());
  out.b = exponent_layer::unseal(signature.t, verifier_d, params.n_b());
  out.c = point_sub(scalar_mul(out.a, params.P, curve), scalar_mul(out.b, sum_points(signer_y, curve), curve),
                    curve);
  const Point expected = point_add(signature.r, sum_points(decode_shares, curve), curve);
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
                              const std::vector<Point>& signer_y, const BigInt& k, SimulationMode mode) {
  if (k < 1) throw ParameterError("nonce k must be at least 1");
  if (verifiers.empty()) throw ParameterError("verifier list is empty");
  const Curve& curve = params.curve;
  const Point w = scalar_mul(k, params.Q, curve);
  const Point r = point_sub(w, scalar_mul(k, sum_points(signer_y, curve), curve), curve);
  const Point s = scalar_mul(k, params.P, curve);
  const BigInt z = challenge_hash(message, w, params.n_a());
  const BigInt t = exponent_layer::blind(z, signer_e, params.n_a());

  std::vector<BigInt> responses;
  std::vector<BigInt> verifier_d;
  for (const auto& key : verifiers) {
    verifier_d.push_back(key.d);
    responses.push_back(z * key.x);
  }
  if (mode == SimulationMode::paper) {
    for (auto& v : responses) v += k;
  } else {
    responses.front() += k;
  }
  const BigInt v = exponent_layer::aggregate_responses(responses, params.n_b());
  return {r, s, t, exponent_layer::seal(v, verifier_d, params.n_b())};
}

Verdict verify_mirrored(const Params& params, std::string_view message, const Signature& simulated,
                        const std::vector<BigInt>& verifier_e, const std::vector<Point>& verifier_y,
                        const std::vector<BigInt>& signer_d, const std::vector<Point>& signer_shares) {
  return verify(params.mirrored(), message, simulated, verifier_e, verifier_y, signer_d, signer_shares);
}

}  // namespace msdmv::ec_scheme
