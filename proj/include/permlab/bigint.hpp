#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

// Exact arithmetic for all counting tables and series work. Counts grow past
// 32 bits already at n = 13 and the EGF expansion needs exact rationals, so
// everything table-facing is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

}  // namespace permlab
