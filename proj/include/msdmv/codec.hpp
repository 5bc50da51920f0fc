#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "msdmv/participant.hpp"
#include "msdmv/session.hpp"

// JSON records. Integers are decimal strings, points are {"x","y"} or "O",
// digests are lowercase hex. Malformed input raises ParameterError.
namespace msdmv::codec {

using Json = nlohmann::json;

Json parse(std::string_view text);

Json to_json(const BigInt& value);
BigInt bigint_from_json(const Json& j);
Json to_json(const Point& point);
Point point_from_json(const Json& j);

Json params_to_json(const session::SchemeParams& params);
// Reads the "scheme" field to pick the parameter kind.
session::SchemeParams params_from_json(const Json& j);

Json key_to_json(const session::MemberSecret& key);
// Re-derives the key from its secret parts and rejects inconsistent records.
session::MemberSecret key_from_json(const Json& j, const session::SchemeParams& params);

Json membership_to_json(const session::Membership& membership);
session::Membership membership_from_json(const Json& j);

// s1 records also carry the parameters and the aggregates u and v.
Json signature_to_json(const session::Signature& signature, const session::SchemeParams& params,
                       const GElem* u = nullptr, const GElem* v = nullptr);
session::Signature signature_from_json(const Json& j);

Json payload_to_json(const session::Payload& payload, session::RoundTag round);
session::Payload payload_from_json(const Json& j, session::SchemeTag scheme, session::RoundTag round);

Json envelope_to_json(const session::ProtocolMessage& message);
session::ProtocolMessage envelope_from_json(const Json& j, session::SchemeTag scheme);

}  // namespace msdmv::codec
