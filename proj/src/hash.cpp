#include "msdmv/hash.hpp"

#include <openssl/evp.h>

#include "msdmv/error.hpp"

namespace msdmv {

Digest sha256(std::string_view bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error("SHA-256 computation failed");
  }
  return out;
}

BigInt digest_to_int(const Digest& digest) {
  BigInt out = 0;
  for (auto byte : digest) out = (out << 8) | BigInt(byte);
  return out;
}

std::string to_hex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto byte : digest) {
    out.push_back(kHex[byte >> 4]);
    out.push_back(kHex[byte & 0xF]);
  }
  return out;
}

Digest digest_from_hex(std::string_view hex) {
  if (hex.size() != 64) throw ParameterError("digest must be 64 hex characters");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParameterError("digest must be lowercase hex");
  };
  Digest out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

BigInt hash_to_residue(std::string_view message, std::string_view encoded, const BigInt& modulus) {
  std::string input;
  input.reserve(message.size() + 1 + encoded.size());
  input.append(message);
  input.push_back('\x1f');
  input.append(encoded);
  return digest_to_int(sha256(input)) % modulus;
}

}  // namespace msdmv
