#include "msdmv/eccurve.hpp"

#include <cstdint>
#include <vector>

#include "msdmv/error.hpp"
#include "msdmv/numtheory.hpp"

namespace msdmv {

namespace {

void require_on_curve(const Point& point, const Curve& curve) {
  if (!on_curve(point, curve)) throw ParameterError("point " + encode_point(point) + " is not on the curve");
}

// Unchecked group law; callers validate inputs once.
Point add_unchecked(const Point& lhs, const Point& rhs, const BigInt& a, const BigInt& p) {
  if (lhs.infinity) return rhs;
  if (rhs.infinity) return lhs;
  BigInt slope;
  if (lhs.x == rhs.x) {
    if (mod_floor(lhs.y + rhs.y, p) == 0) return Point::at_infinity();
    slope = mod_floor((3 * lhs.x * lhs.x + a) * mod_inv(2 * lhs.y, p), p);
  } else {
    slope = mod_floor((rhs.y - lhs.y) * mod_inv(rhs.x - lhs.x, p), p);
  }
  BigInt x = mod_floor(slope * slope - lhs.x - rhs.x, p);
  BigInt y = mod_floor(slope * (lhs.x - x) - lhs.y, p);
  return Point::affine(std::move(x), std::move(y));
}

Point mul_unchecked(BigInt k, Point base, const BigInt& a, const BigInt& p) {
  Point acc = Point::at_infinity();
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) acc = add_unchecked(acc, base, a, p);
    base = add_unchecked(base, base, a, p);
    k >>= 1;
  }
  return acc;
}

}  // namespace

void Curve::validate() const {
  if (!is_prime(p) || p < 5) throw ParameterError("curve field modulus must be a prime >= 5");
  if (a < 0 || a >= p || b < 0 || b >= p) throw ParameterError("curve coefficients must lie in [0, p)");
  if (mod_floor(4 * a * a * a + 27 * b * b, p) == 0) throw ParameterError("singular curve");
}

bool on_curve(const Point& point, const Curve& curve) {
  if (point.infinity) return true;
  const auto& p = curve.p;
  if (point.x < 0 || point.x >= p || point.y < 0 || point.y >= p) return false;
  return mod_floor(point.y * point.y - (point.x * point.x * point.x + curve.a * point.x + curve.b), p) == 0;
}

std::string encode_point(const Point& point) {
  if (point.infinity) return "O";
  return to_decimal(point.x) + "," + to_decimal(point.y);
}

Point decode_point(std::string_view text) {
  if (text == "O") return Point::at_infinity();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParameterError("point must be 'x,y' or 'O'");
  return Point::affine(parse_decimal(text.substr(0, comma)), parse_decimal(text.substr(comma + 1)));
}

Point point_neg(const Point& point, const Curve& curve) {
  require_on_curve(point, curve);
  if (point.infinity) return point;
  return Point::affine(point.x, mod_floor(-point.y, curve.p));
}

Point point_add(const Point& lhs, const Point& rhs, const Curve& curve) {
  require_on_curve(lhs, curve);
  require_on_curve(rhs, curve);
  return add_unchecked(lhs, rhs, curve.a, curve.p);
}

Point point_sub(const Point& lhs, const Point& rhs, const Curve& curve) {
  return point_add(lhs, point_neg(rhs, curve), curve);
}

Point scalar_mul(const BigInt& k, const Point& point, const Curve& curve) {
  require_on_curve(point, curve);
  if (k < 0) throw ParameterError("scalar must be nonnegative; negate the point instead");
  return mul_unchecked(k, point, curve.a, curve.p);
}

BigInt curve_order(const Curve& curve) {
  if (curve.p > kCurveOrderCap) throw SizeError("curve_order is limited to p <= 10^7");
  curve.validate();
  const auto p = static_cast<std::uint64_t>(curve.p);
  const auto a = static_cast<std::uint64_t>(curve.a);
  const auto b = static_cast<std::uint64_t>(curve.b);
  // Quadratic character table: squares[v] = number of y with y^2 = v.
  std::vector<std::uint8_t> squares(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++squares[y * y % p];
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t rhs = ((x * x % p) * x % p + a * x % p + b) % p;
    count += squares[rhs];
  }
  return count;
}

BigInt point_order(const Point& point, const Curve& curve, const BigInt& group_order) {
  require_on_curve(point, curve);
  for (const auto& d : divisors(group_order)) {
    if (mul_unchecked(d, point, curve.a, curve.p).infinity) return d;
  }
  throw ParameterError("point order does not divide the stated group order");
}

Point random_point(const Curve& curve, Rng& rng) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const BigInt x = rng.uniform(0, curve.p - 1);
    const auto y = sqrt_mod(x * x * x + curve.a * x + curve.b, curve.p);
    if (!y) continue;
    BigInt yy = *y;
    if (yy != 0 && rng.next() % 2 == 1) yy = curve.p - yy;
    return Point::affine(x, yy);
  }
  throw SearchFailure("no random curve point found");
}

Point find_point_of_order(const BigInt& n, const Curve& curve, const BigInt& group_order, Rng& rng) {
  if (n < 1 || group_order % n != 0) {
    throw ParameterError(to_decimal(n) + " does not divide the group order " + to_decimal(group_order));
  }
  if (n == 1) return Point::at_infinity();
  const BigInt cofactor = group_order / n;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point candidate = mul_unchecked(cofactor, random_point(curve, rng), curve.a, curve.p);
    if (candidate.infinity) continue;
    if (point_order(candidate, curve, group_order) == n) return candidate;
  }
  throw SearchFailure("no point of order " + to_decimal(n) + " found");
}

}  // namespace msdmv
