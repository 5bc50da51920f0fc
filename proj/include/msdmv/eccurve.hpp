#pragma once

#include <string>
#include <string_view>

#include "msdmv/bigint.hpp"
#include "msdmv/rng.hpp"

namespace msdmv {

// y^2 = x^3 + a*x + b over Z_p, affine coordinates.
struct Curve {
  BigInt p;
  BigInt a;
  BigInt b;

  // Throws ParameterError for non-prime p, out-of-range coefficients or a
  // singular curve.
  void validate() const;

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Point {
  bool infinity = true;
  BigInt x;
  BigInt y;

  static Point at_infinity() { return Point{}; }
  static Point affine(BigInt x, BigInt y) { return Point{false, std::move(x), std::move(y)}; }

  friend bool operator==(const Point& lhs, const Point& rhs) {
    if (lhs.infinity || rhs.infinity) return lhs.infinity == rhs.infinity;
    return lhs.x == rhs.x && lhs.y == rhs.y;
  }
};

inline constexpr long kCurveOrderCap = 10'000'000;

bool on_curve(const Point& point, const Curve& curve);

// Decimal "x,y" without spaces; the point at infinity is "O".
std::string encode_point(const Point& point);
Point decode_point(std::string_view text);

Point point_neg(const Point& point, const Curve& curve);
Point point_add(const Point& lhs, const Point& rhs, const Curve& curve);
Point point_sub(const Point& lhs, const Point& rhs, const Curve& curve);
Point scalar_mul(const BigInt& k, const Point& point, const Curve& curve);

// Number of points including infinity, by counting residues. p <= 10^7.
BigInt curve_order(const Curve& curve);

BigInt point_order(const Point& point, const Curve& curve, const BigInt& group_order);

Point random_point(const Curve& curve, Rng& rng);
Point find_point_of_order(const BigInt& n, const Curve& curve, const BigInt& group_order, Rng& rng);

}  // namespace msdmv
