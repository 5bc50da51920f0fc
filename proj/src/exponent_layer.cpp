#include "msdmv/exponent_layer.hpp"

#include "msdmv/error.hpp"
#include "msdmv/numtheory.hpp"

namespace msdmv::exponent_layer {

namespace {

BigInt exponent_product(const std::vector<BigInt>& exponents) {
  if (exponents.empty()) throw ParameterError("exponent list is empty");
  return product(exponents);
}

}  // namespace

BigInt sample_exponent(const BigInt& phi, Rng& rng) {
  for (;;) {
    BigInt e = rng.uniform(3, 2 * phi + 3);
    if (boost::multiprecision::gcd(e, phi) == 1) return e;
  }
}

BigInt blind(const BigInt& z, const std::vector<BigInt>& exponents, const BigInt& n) {
  return mod_pow(z, exponent_product(exponents), n);
}

BigInt aggregate_responses(const std::vector<BigInt>& responses, const BigInt& n) {
  if (responses.empty()) throw ParameterError("response list is empty");
  BigInt sum = 0;
  for (const auto& v : responses) sum += v;
  return mod_floor(sum, n);
}

BigInt seal(const BigInt& v_bar, const std::vector<BigInt>& exponents, const BigInt& n) {
  return mod_pow(v_bar, exponent_product(exponents), n);
}

BigInt unseal(const BigInt& value, const std::vector<BigInt>& exponents, const BigInt& n) {
  return mod_pow(value, exponent_product(exponents), n);
}

}  // namespace msdmv::exponent_layer
