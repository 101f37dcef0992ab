#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuzzsg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense element index inside a FiniteGroup (0..order-1).
using Elem = std::uint32_t;

// Error hierarchy. Everything derives from std::runtime_error so callers can
// catch broadly; the CLI maps each kind to its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument, spec string, or membership function.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured cap (order, subgroups, chains, automorphisms) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A family-specific formula was asked for outside its domain.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed (e.g. a Burnside sum that does not divide).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_order = 360;
  std::size_t max_subgroups = 10000;
  std::size_t max_chains = 1000000;
  std::size_t max_automorphisms = 100000;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

// Rationals are stored normalized, so equality is componentwise. Much cheaper
// than the library operator, which goes through a full comparison.
inline bool same_value(const Rational& a, const Rational& b) {
  return boost::multiprecision::numerator(a) == boost::multiprecision::numerator(b) &&
         boost::multiprecision::denominator(a) == boost::multiprecision::denominator(b);
}

}  // namespace fuzzsg
