#pragma once

#include <cstdint>
#include <random>

#include "msdmv/bigint.hpp"

namespace msdmv {

// Seeded generator. Only the raw mt19937_64 stream is used so that sampled
// values are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], both inclusive.
  BigInt uniform(const BigInt& lo, const BigInt& hi);
  std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi);

  // Independent child stream, used to give each participant its own source.
  Rng fork() { return Rng(next()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace msdmv
