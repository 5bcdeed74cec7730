#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace raysplit {

// Exact arbitrary-precision integers and rationals. Everything that feeds an
// identity check stays in these types; doubles appear only on the spectral side.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "n" when integral, "n/d" otherwise (matches the serialized coefficient format).
inline std::string rational_str(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "n" or "n/d". Throws std::runtime_error on malformed input.
inline Rational rational_from_str(const std::string& s) { return Rational(s); }

}  // namespace raysplit
