#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dessins {

// Group orders overflow 64 bits quickly (|S_25| ~ 1.5e25), so all order
// arithmetic runs on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace dessins
