#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace msdmv {

using BigInt = boost::multiprecision::cpp_int;

// Parses a nonnegative decimal integer. Throws ParameterError on anything else.
BigInt parse_decimal(std::string_view text);
std::string to_decimal(const BigInt& value);

}  // namespace msdmv
