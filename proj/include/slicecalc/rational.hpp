#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "slicecalc/errors.hpp"

namespace slicecalc {

// Exact scalar for the rational regime. cpp_rational keeps values in reduced
// canonical form, which the exact-comparison tests rely on.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

// "3", "-3/4", "0.25" (finite decimals become exact rationals).
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

// sqrt when the argument is a perfect square of a rational; nullopt otherwise.
std::optional<Rat> exact_sqrt(const Rat& r);

} // namespace slicecalc
