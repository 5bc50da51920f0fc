#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "msdmv/bigint.hpp"

namespace msdmv {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::string_view bytes);

// Big-endian interpretation of the digest.
BigInt digest_to_int(const Digest& digest);

std::string to_hex(const Digest& digest);
Digest digest_from_hex(std::string_view hex);

// SHA-256 over message || 0x1F || encoded, read as an integer and reduced
// into [0, modulus). Shared by the Z_p* and elliptic-curve challenges.
BigInt hash_to_residue(std::string_view message, std::string_view encoded, const BigInt& modulus);

}  // namespace msdmv
