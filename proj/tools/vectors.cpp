#include "vectors.hpp"

#include <functional>
#include <optional>
#include <set>

#include "msdmv/error.hpp"
#include "msdmv/exponent_layer.hpp"

namespace msdmv::cli {

namespace {

using session::SchemeTag;
using zn_scheme::Side;

const std::string kMessage = "vector replay";

class Recorder {
 public:
  Recorder(std::vector<VectorCheck>& out, std::string scheme, std::string set)
      : out_(out), scheme_(std::move(scheme)), set_(std::move(set)) {}

  void text(std::string label, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    out_.push_back({scheme_, set_, std::move(label), std::move(expected), std::move(actual), pass});
  }
  void num(std::string label, const BigInt& expected, const BigInt& actual) {
    text(std::move(label), to_decimal(expected), to_decimal(actual));
  }
  // A relation checked over a whole range; actual names the first failure.
  void holds(std::string label, std::optional<BigInt> counterexample) {
    text(std::move(label), "holds", counterexample ? "fails at " + to_decimal(*counterexample) : "holds");
  }

 private:
  std::vector<VectorCheck>& out_;
  std::string scheme_;
  std::string set_;
};

std::string idx(const char* name, std::size_t i) { return std::string(name) + "_" + std::to_string(i + 1); }

// ---- pairing scheme ----

struct PairingExample {
  std::vector<int> a, p_pub, b, q_pub;
  int u, v;
  std::vector<int> sigma_exp, zeta_exp;
  int total_exp;
};

PairingExample pairing_example(std::string_view set) {
  if (set == "paper-ex1") return {{3, 7, 9}, {6, 3, 7}, {6, 8}, {1, 5}, 5, 6, {9, 10, 5}, {4, 9}, 2};
  return {{7, 12, 15, 19, 31},
          {35, 7, 22, 42, 49},
          {10, 13, 17, 23, 51, 27, 36},
          {50, 12, 32, 9, 43, 29, 21},
          49,
          37,
          {20, 4, 5, 24, 28},
          {45, 32, 50, 24, 44, 42, 3},
          28};
}

// First c in [1, p) where share(c*g) differs from h^(exponent*c).
template <typename ShareFn>
std::optional<BigInt> exponent_law(const PairingParams& params, const BigInt& exponent, ShareFn share) {
  for (BigInt c = 1; c < params.p; ++c) {
    const GElem hashed{c * params.g % params.p};
    const GTElem want{mod_pow(params.h, exponent * c % params.p, params.q)};
    if (share(hashed) != want) return c;
  }
  return std::nullopt;
}

void pairing_vectors(Recorder& rec, std::string_view set) {
  const PairingParams params = PairingParams::named(set);
  const PairingExample ex = pairing_example(set);
  rec.num("e(g,g)", params.h, pair(GElem{params.g}, GElem{params.g}, params).value);

  if (set == "paper-ex1") {
    std::set<BigInt> subgroup;
    for (BigInt k = 0; k < params.p; ++k) subgroup.insert(mod_pow(params.h, k, params.q));
    std::string listed;
    for (const auto& x : subgroup) listed += (listed.empty() ? "" : ",") + to_decimal(x);
    rec.text("G_T elements", "1,2,3,4,6,8,9,12,13,16,18", listed);
  }

  std::vector<pairing_scheme::Member> signers, verifiers;
  std::vector<GElem> p_pub, q_pub;
  for (std::size_t i = 0; i < ex.a.size(); ++i) {
    signers.push_back(pairing_scheme::member_from_secret(ex.a[i], params));
    p_pub.push_back(signers.back().public_point);
    rec.num(idx("p", i), ex.p_pub[i], p_pub.back().value);
  }
  for (std::size_t j = 0; j < ex.b.size(); ++j) {
    verifiers.push_back(pairing_scheme::member_from_secret(ex.b[j], params));
    q_pub.push_back(verifiers.back().public_point);
    rec.num(idx("q", j), ex.q_pub[j], q_pub.back().value);
  }
  const GElem u = pairing_scheme::aggregate_public(p_pub, params);
  const GElem v = pairing_scheme::aggregate_public(q_pub, params);
  rec.num("u", ex.u, u.value);
  rec.num("v", ex.v, v.value);

  for (std::size_t i = 0; i < signers.size(); ++i) {
    rec.holds(idx("sigma", i) + " = h^(" + std::to_string(ex.sigma_exp[i]) + "c)",
              exponent_law(params, ex.sigma_exp[i], [&](const GElem& hashed) {
                return pairing_scheme::sign_share_hashed(hashed, signers[i], v, params).sigma;
              }));
  }
  for (std::size_t j = 0; j < verifiers.size(); ++j) {
    rec.holds(idx("zeta", j) + " = h^(" + std::to_string(ex.zeta_exp[j]) + "c)",
              exponent_law(params, ex.zeta_exp[j], [&](const GElem& hashed) {
                return pairing_scheme::verify_share_hashed(hashed, verifiers[j], u, params).sigma;
              }));
  }
  const std::string total = "h^(" + std::to_string(ex.total_exp) + "c)";
  rec.holds("sigma = " + total, exponent_law(params, ex.total_exp, [&](const GElem& hashed) {
              std::vector<pairing_scheme::Signature> shares;
              for (const auto& s : signers) shares.push_back(pairing_scheme::sign_share_hashed(hashed, s, v, params));
              return pairing_scheme::combine(shares, params).sigma;
            }));
  rec.holds("zeta = " + total, exponent_law(params, ex.total_exp, [&](const GElem& hashed) {
              std::vector<pairing_scheme::Signature> shares;
              for (const auto& d : verifiers)
                shares.push_back(pairing_scheme::verify_share_hashed(hashed, d, u, params));
              return pairing_scheme::combine(shares, params).sigma;
            }));
}

// ---- Z_p^* scheme ----

struct KeyRow {
  int e, d, x;
  long y;  // residue for Z_p^*, multiple of the base point for the curve
};

struct ZnRound1Row {
  long k, r, s, w;
};

struct ZnExample {
  int order_a, order_b;
  std::vector<KeyRow> signers, verifiers;
  std::vector<ZnRound1Row> round1;
  long r, s, w;
  long e_product;     // product of the verifier exponents
  int t_exponent;     // t = z^t_exponent mod n_B
  long d_product;     // product of the signer private exponents
  int u_exponent;     // u_bar = v_bar^u_exponent mod n_A
  int v_coef, v_const;  // v_bar = v_coef*z + v_const mod n_A
  std::vector<long> response_const;  // printed constant of v_i, or k_i*r when empty
};

ZnExample zn_example(std::string_view set) {
  if (set == "paper-ex1") {
    return {15,
            14,
            {{13, 5, 7, 150}, {7, 7, 16, 137}, {11, 3, 21, 55}},
            {{5, 5, 19, 153}, {11, 5, 17, 12}},
            {{8, 136, 148, 83}, {12, 114, 171, 71}, {14, 134, 210, 134}},
            30,
            144,
            1,
            55,
            1,
            105,
            1,
            14,
            0,
            {240, 360, 420}};
  }
  return {91,
          187,
          {{5, 29, 15, 58327}, {11, 59, 19, 69494}, {7, 31, 24, 69058}, {23, 47, 18, 88515}, {35, 35, 32, 26123}},
          {{3, 107, 32, 37552},
           {7, 23, 17, 64089},
           {11, 131, 22, 63449},
           {19, 59, 27, 93579},
           {51, 91, 18, 38061},
           {27, 83, 21, 91435},
           {91, 51, 51, 30671}},
          {{42980, 22513, 68227, 59022},
           {68841, 77234, 67990, 84473},
           {82718, 60319, 8171, 15368},
           {90739, 49375, 58517, 68284},
           {19344, 40471, 35552, 91619}},
          41707,
          90653,
          91371,
          549972423,
          103,
          87252445,
          37,
          17,
          31,
          {}};
}

std::optional<BigInt> first_mismatch(const BigInt& bound, const std::function<bool(const BigInt&)>& ok) {
  for (BigInt z = 0; z < bound; ++z)
    if (!ok(z)) return z;
  return std::nullopt;
}

void zn_vectors(Recorder& rec, std::string_view set) {
  const zn_scheme::Params params = zn_scheme::Params::named(set);
  const ZnExample ex = zn_example(set);
  rec.num("|g_A|", ex.order_a, element_order(params.g_a, params.p));
  rec.num("|g_B|", ex.order_b, element_order(params.g_b, params.p));

  std::vector<zn_scheme::MemberKey> signers, verifiers;
  std::vector<BigInt> e_a, e_b, d_a, y_b;
  for (std::size_t i = 0; i < ex.signers.size(); ++i) {
    const KeyRow& row = ex.signers[i];
    signers.push_back(zn_scheme::member_from(params, Side::A, row.e, row.x));
    rec.num(idx("d_A", i), row.d, signers.back().d);
    rec.num(idx("y_A", i), row.y, signers.back().y);
    e_a.push_back(row.e);
    d_a.push_back(signers.back().d);
  }
  for (std::size_t j = 0; j < ex.verifiers.size(); ++j) {
    const KeyRow& row = ex.verifiers[j];
    verifiers.push_back(zn_scheme::member_from(params, Side::B, row.e, row.x));
    rec.num(idx("d_B", j), row.d, verifiers.back().d);
    rec.num(idx("y_B", j), row.y, verifiers.back().y);
    e_b.push_back(row.e);
    y_b.push_back(verifiers.back().y);
  }

  std::vector<zn_scheme::Round1Share> shares;
  for (std::size_t i = 0; i < ex.round1.size(); ++i) {
    const ZnRound1Row& row = ex.round1[i];
    shares.push_back(zn_scheme::sign_round1(params, y_b, row.k));
    const std::string tag = " (k=" + std::to_string(row.k) + ")";
    rec.num(idx("r", i) + tag, row.r, shares.back().r);
    rec.num(idx("s", i) + tag, row.s, shares.back().s);
    rec.num(idx("w", i) + tag, row.w, shares.back().w);
  }
  const zn_scheme::Challenge challenge = zn_scheme::aggregate_challenge(params, kMessage, shares, e_b);
  rec.num("r", ex.r, challenge.r);
  rec.num("s", ex.s, challenge.s);
  rec.num("w", ex.w, challenge.w);

  const BigInt n_a = params.n_a(), n_b = params.n_b();
  rec.num("prod e_B", ex.e_product, product(e_b));
  rec.num("prod e_B mod phi(n_B)", ex.t_exponent, product(e_b) % params.semi_b.phi);
  rec.holds("t = z^" + std::to_string(ex.t_exponent) + " mod n_B for gcd(z, n_B) = 1",
            first_mismatch(n_b, [&](const BigInt& z) {
              if (boost::multiprecision::gcd(z, n_b) != 1) return true;
              return exponent_layer::blind(z, e_b, n_b) == mod_pow(z, ex.t_exponent, n_b);
            }));
  rec.num("prod d_A", ex.d_product, product(d_a));
  rec.num("prod d_A mod phi(n_A)", ex.u_exponent, product(d_a) % params.semi_a.phi);
  rec.holds("u_bar = v_bar^" + std::to_string(ex.u_exponent) + " mod n_A", first_mismatch(n_a, [&](const BigInt& v) {
              return exponent_layer::seal(v, d_a, n_a) == mod_pow(v, ex.u_exponent, n_a);
            }));

  std::vector<BigInt> ks;
  for (const auto& row : ex.round1) ks.push_back(row.k);
  for (std::size_t i = 0; i < signers.size(); ++i) {
    const BigInt constant = ex.response_const.empty() ? BigInt(ks[i] * challenge.r) : BigInt(ex.response_const[i]);
    const std::string shown = ex.response_const.empty() ? std::to_string(ex.round1[i].k) + "r" : to_decimal(constant);
    rec.holds(idx("v", i) + " = " + std::to_string(ex.signers[i].x) + "z + " + shown,
              first_mismatch(n_a, [&](const BigInt& z) {
                zn_scheme::Challenge ch = challenge;
                ch.z = z;
                return zn_scheme::sign_round2(ch, signers[i], ks[i]) == ex.signers[i].x * z + constant;
              }));
  }
  rec.holds("v_bar = " + std::to_string(ex.v_coef) + "z + " + std::to_string(ex.v_const) + " mod n_A",
            first_mismatch(n_a, [&](const BigInt& z) {
              zn_scheme::Challenge ch = challenge;
              ch.z = z;
              std::vector<BigInt> responses;
              for (std::size_t i = 0; i < signers.size(); ++i)
                responses.push_back(zn_scheme::sign_round2(ch, signers[i], ks[i]));
              return exponent_layer::aggregate_responses(responses, n_a) == (ex.v_coef * z + ex.v_const) % n_a;
            }));
}

// ---- curve scheme ----

struct EcRound1Row {
  long k;
  int r_p, r_q, s_q, w_p;  // r = [r_p]P - [r_q]Q, s = [s_q]Q, w = [w_p]P
};

struct EcExample {
  long curve_order;
  int order_p, order_q;
  std::vector<KeyRow> signers, verifiers;  // y is the multiple of P (signers) or Q (verifiers)
  std::vector<EcRound1Row> round1;
  int r_p, r_q, s_q, w_p;
  int t_exponent;
  int u_exponent;
  int v_coef, v_const;
};

EcExample ec_example(std::string_view set) {
  if (set == "paper-ex1") {
    return {420,
            15,
            14,
            {{13, 5, 7, 7}, {7, 7, 16, 1}, {11, 3, 21, 6}},
            {{5, 5, 19, 5}, {11, 5, 17, 3}},
            {{8, 8, 8, 8, 8}, {12, 12, 12, 12, 12}, {14, 14, 0, 14, 14}},
            4,
            6,
            6,
            4,
            1,
            1,
            14,
            4};
  }
  return {6916,
          91,
          38,
          {{5, 29, 15, 15}, {11, 59, 19, 19}, {7, 31, 24, 24}, {23, 47, 18, 18}, {35, 35, 32, 32}},
          {{5, 11, 32, 32}, {7, 13, 17, 17}, {11, 5, 22, 22}, {13, 7, 27, 27}, {17, 17, 18, 18}, {13, 7, 21, 21},
           {7, 13, 51, 51}},
          {{5770, 37, 12, 32, 37},
           {2769, 39, 10, 33, 39},
           {6476, 15, 6, 16, 15},
           {1751, 22, 32, 3, 22},
           {88, 88, 14, 12, 88}},
          19,
          36,
          20,
          19,
          0,
          0,
          17,
          19};
}

std::string combo(int a, int b) {
  std::string out;
  if (a != 0) out = "[" + std::to_string(a) + "]P";
  if (b != 0) out += "-[" + std::to_string(b) + "]Q";
  return out.empty() ? "O" : out;
}

void ec_vectors(Recorder& rec, std::string_view set) {
  const ec_scheme::Params params = ec_scheme::Params::named(set);
  const EcExample ex = ec_example(set);
  const Curve& curve = params.curve;
  const auto lin = [&](int a, int b) {
    return point_sub(scalar_mul(a, params.P, curve), scalar_mul(b, params.Q, curve), curve);
  };
  const auto point_check = [&](std::string label, int a, int b, const Point& actual) {
    rec.text(std::move(label) + " = " + combo(a, b), encode_point(lin(a, b)), encode_point(actual));
  };

  const BigInt order = curve_order(curve);
  rec.num("|E|", ex.curve_order, order);
  rec.num("|P|", ex.order_p, point_order(params.P, curve, order));
  rec.num("|Q|", ex.order_q, point_order(params.Q, curve, order));

  std::vector<ec_scheme::MemberKey> signers, verifiers;
  std::vector<BigInt> e_a, e_b, d_a;
  std::vector<Point> y_b;
  for (std::size_t i = 0; i < ex.signers.size(); ++i) {
    const KeyRow& row = ex.signers[i];
    signers.push_back(ec_scheme::member_from(params, Side::A, row.e, row.x));
    rec.num(idx("d_A", i), row.d, signers.back().d);
    point_check(idx("y_A", i), static_cast<int>(row.y), 0, signers.back().y);
    e_a.push_back(row.e);
    d_a.push_back(signers.back().d);
  }
  for (std::size_t j = 0; j < ex.verifiers.size(); ++j) {
    const KeyRow& row = ex.verifiers[j];
    verifiers.push_back(ec_scheme::member_from(params, Side::B, row.e, row.x));
    rec.num(idx("d_B", j), row.d, verifiers.back().d);
    rec.text(idx("y_B", j) + " = [" + std::to_string(row.y) + "]Q", encode_point(scalar_mul(row.y, params.Q, curve)),
             encode_point(verifiers.back().y));
    e_b.push_back(row.e);
    y_b.push_back(verifiers.back().y);
  }

  std::vector<ec_scheme::Round1Share> shares;
  for (std::size_t i = 0; i < ex.round1.size(); ++i) {
    const EcRound1Row& row = ex.round1[i];
    shares.push_back(ec_scheme::sign_round1(params, y_b, row.k));
    const std::string tag = " (k=" + std::to_string(row.k) + ")";
    point_check(idx("r", i) + tag, row.r_p, row.r_q, shares.back().r);
    rec.text(idx("s", i) + tag + " = [" + std::to_string(row.s_q) + "]Q",
             encode_point(scalar_mul(row.s_q, params.Q, curve)), encode_point(shares.back().s));
    point_check(idx("w", i) + tag, row.w_p, 0, shares.back().w);
  }
  const ec_scheme::Challenge challenge = ec_scheme::aggregate_challenge(params, kMessage, shares, e_b);
  point_check("r", ex.r_p, ex.r_q, challenge.r);
  rec.text("s = [" + std::to_string(ex.s_q) + "]Q", encode_point(scalar_mul(ex.s_q, params.Q, curve)),
           encode_point(challenge.s));
  point_check("w", ex.w_p, 0, challenge.w);

  const BigInt n_a = params.n_a(), n_b = params.n_b();
  if (ex.t_exponent != 0) {
    rec.holds("t = z^" + std::to_string(ex.t_exponent) + " mod n_B", first_mismatch(n_b, [&](const BigInt& z) {
                return exponent_layer::blind(z, e_b, n_b) == mod_pow(z, ex.t_exponent, n_b);
              }));
  }
  if (ex.u_exponent != 0) {
    rec.holds("u_bar = v_bar^" + std::to_string(ex.u_exponent) + " mod n_A",
              first_mismatch(n_a, [&](const BigInt& v) {
                return exponent_layer::seal(v, d_a, n_a) == mod_pow(v, ex.u_exponent, n_a);
              }));
  }
  for (std::size_t i = 0; i < signers.size(); ++i) {
    const long k = ex.round1[i].k;
    rec.holds(idx("v", i) + " = " + std::to_string(ex.signers[i].x) + "z + " + std::to_string(k),
              first_mismatch(n_a, [&](const BigInt& z) {
                ec_scheme::Challenge ch = challenge;
                ch.z = z;
                return ec_scheme::sign_round2(ch, signers[i], k) == ex.signers[i].x * z + k;
              }));
  }
  rec.holds("v_bar = " + std::to_string(ex.v_coef) + "z + " + std::to_string(ex.v_const) + " mod n_A",
            first_mismatch(n_a, [&](const BigInt& z) {
              ec_scheme::Challenge ch = challenge;
              ch.z = z;
              std::vector<BigInt> responses;
              for (std::size_t i = 0; i < signers.size(); ++i)
                responses.push_back(ec_scheme::sign_round2(ch, signers[i], ex.round1[i].k));
              return exponent_layer::aggregate_responses(responses, n_a) == (ex.v_coef * z + ex.v_const) % n_a;
            }));
}

}  // namespace

std::vector<VectorCheck> paper_vectors(SchemeTag scheme, std::string_view set) {
  if (set != "paper-ex1" && set != "paper-ex2") throw ParameterError("no worked example named '" + std::string(set) + "'");
  std::vector<VectorCheck> out;
  switch (scheme) {
    case SchemeTag::s1: {
      Recorder rec(out, "s1", std::string(set));
      pairing_vectors(rec, set);
      break;
    }
    case SchemeTag::s2: {
      Recorder rec(out, "s2", std::string(set));
      zn_vectors(rec, set);
      break;
    }
    case SchemeTag::s3: {
      Recorder rec(out, "s3", std::string(set));
      ec_vectors(rec, set);
      break;
    }
    case SchemeTag::combined: {
      Recorder pairing_rec(out, "s1", std::string(set));
      pairing_vectors(pairing_rec, set);
      Recorder zn_rec(out, "s2", std::string(set));
      zn_vectors(zn_rec, set);
      break;
    }
  }
  return out;
}

}  // namespace msdmv::cli
