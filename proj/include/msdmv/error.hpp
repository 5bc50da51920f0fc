#pragma once

#include <stdexcept>
#include <string>

#include "msdmv/bigint.hpp"

namespace msdmv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input values: wrong ranges, failed preconditions, malformed records.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const BigInt& value, const BigInt& modulus, BigInt gcd);
  const BigInt& gcd() const noexcept { return gcd_; }

 private:
  BigInt gcd_;
};

class SearchFailure : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

// Session protocol violations.
class SequencingError : public Error {
 public:
  using Error::Error;
};

class DuplicateError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

// Ledger refuses to attach an attestation from a session that did not accept.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace msdmv
