#include "msdmv/rng.hpp"

#include "msdmv/error.hpp"

namespace msdmv {

BigInt Rng::uniform(const BigInt& lo, const BigInt& hi) {
  if (hi < lo) throw ParameterError("empty sampling range");
  const BigInt span = hi - lo + 1;
  const unsigned bits = boost::multiprecision::msb(span) + 1;
  const unsigned words = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt draw = 0;
    for (unsigned i = 0; i < words; ++i) draw = (draw << 64) | BigInt(engine_());
    draw &= mask;
    if (draw < span) return lo + draw;
  }
}

std::uint64_t Rng::uniform_u64(std::uint64_t lo, std::uint64_t hi) {
  return static_cast<std::uint64_t>(uniform(BigInt(lo), BigInt(hi)));
}

}  // namespace msdmv
