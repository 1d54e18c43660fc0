#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cutbetti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed trees, partitions, patterns or arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size budget (vertices, subsets, faces) would be exceeded.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (non-integral closed form, a basis
/// element that does not reduce, ...).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Binomial coefficient C(n, k) as a big integer.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow_big(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cutbetti
