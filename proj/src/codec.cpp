#include "msdmv/codec.hpp"

#include "msdmv/error.hpp"

namespace msdmv::codec {

namespace {

using session::SchemeTag;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

template <class F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& err) {
    throw ParameterError(std::string("malformed JSON record: ") + err.what());
  }
}

BigInt big(const Json& j, const char* key) { return bigint_from_json(j.at(key)); }
Point pt(const Json& j, const char* key) { return point_from_json(j.at(key)); }

Json semiprime_to_json(const Semiprime& semi) {
  return {{"p_factor", to_json(semi.p_factor)}, {"q_factor", to_json(semi.q_factor)}};
}

Semiprime semiprime_from_json(const Json& j) { return Semiprime::make(big(j, "p_factor"), big(j, "q_factor")); }

Json pairing_params_json(const PairingParams& p) {
  return {{"p", to_json(p.p)}, {"g", to_json(p.g)}, {"q", to_json(p.q)}, {"h", to_json(p.h)}};
}

PairingParams pairing_params_from(const Json& j) { return {big(j, "p"), big(j, "g"), big(j, "q"), big(j, "h")}; }

Json zn_params_json(const zn_scheme::Params& p) {
  return {{"p", to_json(p.p)},
          {"semi_a", semiprime_to_json(p.semi_a)},
          {"semi_b", semiprime_to_json(p.semi_b)},
          {"g_a", to_json(p.g_a)},
          {"g_b", to_json(p.g_b)}};
}

zn_scheme::Params zn_params_from(const Json& j) {
  return {big(j, "p"), semiprime_from_json(j.at("semi_a")), semiprime_from_json(j.at("semi_b")), big(j, "g_a"),
          big(j, "g_b")};
}

Json ec_params_json(const ec_scheme::Params& p) {
  return {{"curve", {{"p", to_json(p.curve.p)}, {"a", to_json(p.curve.a)}, {"b", to_json(p.curve.b)}}},
          {"P", to_json(p.P)},
          {"Q", to_json(p.Q)},
          {"semi_a", semiprime_to_json(p.semi_a)},
          {"semi_b", semiprime_to_json(p.semi_b)},
          {"group_order", to_json(p.group_order)}};
}

ec_scheme::Params ec_params_from(const Json& j) {
  const Json& c = j.at("curve");
  return {Curve{big(c, "p"), big(c, "a"), big(c, "b")},
          pt(j, "P"),
          pt(j, "Q"),
          semiprime_from_json(j.at("semi_a")),
          semiprime_from_json(j.at("semi_b")),
          big(j, "group_order")};
}

const char* side_name(zn_scheme::Side side) { return side == zn_scheme::Side::A ? "A" : "B"; }

zn_scheme::Side side_from(const Json& j) {
  const auto text = j.at("side").get<std::string>();
  if (text == "A") return zn_scheme::Side::A;
  if (text == "B") return zn_scheme::Side::B;
  throw ParameterError("side must be 'A' or 'B'");
}

Json zn_key_json(const zn_scheme::MemberKey& k) {
  return {{"side", side_name(k.side)}, {"e", to_json(k.e)}, {"d", to_json(k.d)}, {"x", to_json(k.x)},
          {"y", to_json(k.y)}};
}

Json pairing_key_json(const pairing_scheme::Member& m) {
  return {{"secret", to_json(m.secret)}, {"public", to_json(m.public_point.value)}};
}

template <class Key>
void require_match(const Key& derived, const Key& stored) {
  if (!(derived == stored)) throw ParameterError("key record is inconsistent with its secret parts");
}

pairing_scheme::Member pairing_key_from(const Json& j, const PairingParams& params) {
  auto derived = pairing_scheme::member_from_secret(big(j, "secret"), params);
  require_match(derived, pairing_scheme::Member{big(j, "secret"), GElem{big(j, "public")}});
  return derived;
}

zn_scheme::MemberKey zn_key_from(const Json& j, const zn_scheme::Params& params) {
  auto derived = zn_scheme::member_from(params, side_from(j), big(j, "e"), big(j, "x"));
  require_match(derived, zn_scheme::MemberKey{side_from(j), big(j, "e"), big(j, "d"), big(j, "x"), big(j, "y")});
  return derived;
}

ec_scheme::MemberKey ec_key_from(const Json& j, const ec_scheme::Params& params) {
  auto derived = ec_scheme::member_from(params, side_from(j), big(j, "e"), big(j, "x"));
  require_match(derived, ec_scheme::MemberKey{side_from(j), big(j, "e"), big(j, "d"), big(j, "x"), pt(j, "y")});
  return derived;
}

}  // namespace

Json parse(std::string_view text) {
  return guarded([&] { return Json::parse(text); });
}

Json to_json(const BigInt& value) { return to_decimal(value); }

BigInt bigint_from_json(const Json& j) {
  return guarded([&] { return parse_decimal(j.get<std::string>()); });
}

Json to_json(const Point& point) {
  if (point.infinity) return "O";
  return {{"x", to_json(point.x)}, {"y", to_json(point.y)}};
}

Point point_from_json(const Json& j) {
  return guarded([&] {
    if (j.is_string()) {
      if (j.get<std::string>() != "O") throw ParameterError("point string must be \"O\"");
      return Point::at_infinity();
    }
    return Point::affine(big(j, "x"), big(j, "y"));
  });
}

Json params_to_json(const session::SchemeParams& params) {
  return std::visit(Overloaded{[](const PairingParams& p) {
                                 Json j = pairing_params_json(p);
                                 j["scheme"] = "s1";
                                 return j;
                               },
                               [](const zn_scheme::Params& p) {
                                 Json j = zn_params_json(p);
                                 j["scheme"] = "s2";
                                 return j;
                               },
                               [](const ec_scheme::Params& p) {
                                 Json j = ec_params_json(p);
                                 j["scheme"] = "s3";
                                 return j;
                               },
                               [](const combined_scheme::Params& p) {
                                 return Json{{"scheme", "combined"},
                                             {"pairing", pairing_params_json(p.pairing)},
                                             {"zn", zn_params_json(p.zn)}};
                               }},
                    params);
}

session::SchemeParams params_from_json(const Json& j) {
  return guarded([&]() -> session::SchemeParams {
    switch (session::scheme_from_string(j.at("scheme").get<std::string>())) {
      case SchemeTag::s1: {
        auto p = pairing_params_from(j);
        p.validate();
        return p;
      }
      case SchemeTag::s2: {
        auto p = zn_params_from(j);
        p.validate();
        return p;
      }
      case SchemeTag::s3: {
        auto p = ec_params_from(j);
        p.validate();
        return p;
      }
      case SchemeTag::combined: {
        combined_scheme::Params p{pairing_params_from(j.at("pairing")), zn_params_from(j.at("zn"))};
        p.validate();
        return p;
      }
    }
    throw ParameterError("unknown scheme");
  });
}

Json key_to_json(const session::MemberSecret& key) {
  return std::visit(Overloaded{[](const pairing_scheme::Member& m) { return pairing_key_json(m); },
                               [](const zn_scheme::MemberKey& k) { return zn_key_json(k); },
                               [](const ec_scheme::MemberKey& k) {
                                 return Json{{"side", side_name(k.side)}, {"e", to_json(k.e)}, {"d", to_json(k.d)},
                                             {"x", to_json(k.x)},          {"y", to_json(k.y)}};
                               },
                               [](const combined_scheme::MemberKey& k) {
                                 return Json{{"pairing", pairing_key_json(k.pairing)}, {"zn", zn_key_json(k.zn)}};
                               }},
                    key);
}

session::MemberSecret key_from_json(const Json& j, const session::SchemeParams& params) {
  return guarded([&] {
    return std::visit(
        Overloaded{[&](const PairingParams& p) -> session::MemberSecret { return pairing_key_from(j, p); },
                   [&](const zn_scheme::Params& p) -> session::MemberSecret { return zn_key_from(j, p); },
                   [&](const ec_scheme::Params& p) -> session::MemberSecret { return ec_key_from(j, p); },
                   [&](const combined_scheme::Params& p) -> session::MemberSecret {
                     return combined_scheme::MemberKey{pairing_key_from(j.at("pairing"), p.pairing),
                                                       zn_key_from(j.at("zn"), p.zn)};
                   }},
        params);
  });
}

Json membership_to_json(const session::Membership& membership) {
  auto members = [](const std::vector<session::Participant>& list) {
    Json out = Json::array();
    for (const auto& m : list) {
      Json entry = key_to_json(m.key);
      entry["id"] = m.id;
      out.push_back(std::move(entry));
    }
    return out;
  };
  return {{"scheme", session::to_string(membership.scheme)},
          {"params", params_to_json(membership.params)},
          {"signers", members(membership.signers)},
          {"verifiers", members(membership.verifiers)}};
}

session::Membership membership_from_json(const Json& j) {
  return guarded([&] {
    session::Membership out;
    out.scheme = session::scheme_from_string(j.at("scheme").get<std::string>());
    out.params = params_from_json(j.at("params"));
    if (out.params.index() != static_cast<std::size_t>(out.scheme)) {
      throw ParameterError("parameter record does not match the scheme");
    }
    for (const auto& entry : j.at("signers")) {
      out.signers.push_back({entry.at("id").get<std::string>(), key_from_json(entry, out.params)});
    }
    for (const auto& entry : j.at("verifiers")) {
      out.verifiers.push_back({entry.at("id").get<std::string>(), key_from_json(entry, out.params)});
    }
    return out;
  });
}

Json signature_to_json(const session::Signature& signature, const session::SchemeParams& params, const GElem* u,
                       const GElem* v) {
  return std::visit(
      Overloaded{[&](const pairing_scheme::Signature& s) {
                   Json j = pairing_params_json(std::get<PairingParams>(params));
                   j["scheme"] = "s1";
                   j["sigma"] = to_json(s.sigma.value);
                   if (u != nullptr) j["u"] = to_json(u->value);
                   if (v != nullptr) j["v"] = to_json(v->value);
                   return j;
                 },
                 [](const zn_scheme::Signature& s) {
                   return Json{{"scheme", "s2"},
                               {"r", to_json(s.r)},
                               {"s", to_json(s.s)},
                               {"t", to_json(s.t)},
                               {"u_bar", to_json(s.u_bar)}};
                 },
                 [](const ec_scheme::Signature& s) {
                   return Json{{"scheme", "s3"},
                               {"r", to_json(s.r)},
                               {"s", to_json(s.s)},
                               {"t", to_json(s.t)},
                               {"u_bar", to_json(s.u_bar)}};
                 },
                 [](const combined_scheme::Signature& s) {
                   return Json{{"scheme", "combined"},   {"sigma", to_json(s.sigma.value)},
                               {"r", to_json(s.r)},       {"s", to_json(s.s)},
                               {"t", to_json(s.t)},       {"u_bar", to_json(s.u_bar)}};
                 }},
      signature);
}

session::Signature signature_from_json(const Json& j) {
  return guarded([&]() -> session::Signature {
    switch (session::scheme_from_string(j.at("scheme").get<std::string>())) {
      case SchemeTag::s1: return pairing_scheme::Signature{GTElem{big(j, "sigma")}};
      case SchemeTag::s2: return zn_scheme::Signature{big(j, "r"), big(j, "s"), big(j, "t"), big(j, "u_bar")};
      case SchemeTag::s3: return ec_scheme::Signature{pt(j, "r"), pt(j, "s"), big(j, "t"), big(j, "u_bar")};
      case SchemeTag::combined:
        return combined_scheme::Signature{GTElem{big(j, "sigma")}, big(j, "r"), big(j, "s"), big(j, "t"),
                                          big(j, "u_bar")};
    }
    throw ParameterError("unknown scheme");
  });
}

Json payload_to_json(const session::Payload& payload, session::RoundTag round) {
  return std::visit(
      Overloaded{[](const session::Empty&) { return Json(); },
                 [&](const pairing_scheme::Signature& s) {
                   return Json{{round == session::RoundTag::verify_share ? "zeta" : "sigma", to_json(s.sigma.value)}};
                 },
                 [](const zn_scheme::Round1Share& s) {
                   return Json{{"r", to_json(s.r)}, {"s", to_json(s.s)}, {"w", to_json(s.w)}};
                 },
                 [](const ec_scheme::Round1Share& s) {
                   return Json{{"r", to_json(s.r)}, {"s", to_json(s.s)}, {"w", to_json(s.w)}};
                 },
                 [](const combined_scheme::Round1Share& s) {
                   return Json{{"sigma", to_json(s.sigma.sigma.value)},
                               {"r", to_json(s.zn.r)},
                               {"s", to_json(s.zn.s)},
                               {"w", to_json(s.zn.w)}};
                 },
                 [](const session::Response& r) { return Json{{"v", to_json(r.v)}}; },
                 [](const session::ZnDecodeShare& s) { return Json{{"z", to_json(s.z)}}; },
                 [](const session::EcDecodeShare& s) { return Json{{"z", to_json(s.z)}}; },
                 [](const combined_scheme::VerifierShare& s) {
                   return Json{{"zeta", to_json(s.zeta.sigma.value)}, {"z", to_json(s.z)}};
                 },
                 [](const session::VerdictPayload& v) { return Json{{"accept", v.accept}, {"reason", v.reason}}; }},
      payload);
}

session::Payload payload_from_json(const Json& j, SchemeTag scheme, session::RoundTag round) {
  using session::RoundTag;
  return guarded([&]() -> session::Payload {
    switch (round) {
      case RoundTag::deliver:
        if (!j.is_null()) throw ParameterError("deliver carries no payload");
        return session::Empty{};
      case RoundTag::round2: return session::Response{big(j, "v")};
      case RoundTag::verdict: return session::VerdictPayload{j.at("accept").get<bool>(), j.at("reason").get<std::string>()};
      case RoundTag::round1:
        switch (scheme) {
          case SchemeTag::s1: return pairing_scheme::Signature{GTElem{big(j, "sigma")}};
          case SchemeTag::s2: return zn_scheme::Round1Share{big(j, "r"), big(j, "s"), big(j, "w")};
          case SchemeTag::s3: return ec_scheme::Round1Share{pt(j, "r"), pt(j, "s"), pt(j, "w")};
          case SchemeTag::combined:
            return combined_scheme::Round1Share{pairing_scheme::Signature{GTElem{big(j, "sigma")}},
                                                zn_scheme::Round1Share{big(j, "r"), big(j, "s"), big(j, "w")}};
        }
        break;
      case RoundTag::verify_share:
        switch (scheme) {
          case SchemeTag::s1: return pairing_scheme::Signature{GTElem{big(j, "zeta")}};
          case SchemeTag::s2: return session::ZnDecodeShare{big(j, "z")};
          case SchemeTag::s3: return session::EcDecodeShare{pt(j, "z")};
          case SchemeTag::combined:
            return combined_scheme::VerifierShare{pairing_scheme::Signature{GTElem{big(j, "zeta")}}, big(j, "z")};
        }
        break;
    }
    throw ParameterError("unsupported payload");
  });
}

Json envelope_to_json(const session::ProtocolMessage& message) {
  return {{"session", message.session},
          {"sender", message.sender},
          {"round", session::to_string(message.round)},
          {"payload", payload_to_json(message.payload, message.round)}};
}

session::ProtocolMessage envelope_from_json(const Json& j, SchemeTag scheme) {
  return guarded([&] {
    const auto round = session::round_from_string(j.at("round").get<std::string>());
    return session::ProtocolMessage{j.at("session").get<std::string>(), j.at("sender").get<std::string>(), round,
                                    payload_from_json(j.at("payload"), scheme, round)};
  });
}

}  // namespace msdmv::codec
