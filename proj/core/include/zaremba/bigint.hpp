#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zaremba {

// Exact arithmetic used everywhere a value can outgrow 64 bits or where a
// check must be tolerance-free.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace zaremba
