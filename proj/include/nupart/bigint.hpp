#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace nupart {

// Exact integer type for all sequence values. Counts are nonnegative by
// construction; finite differences of order >= 3 can be negative, so the
// shared type is signed.
using BigInt = boost::multiprecision::cpp_int;

// High-precision real for asymptotic ratios (50 significant decimal digits).
// Conversions from BigInt are exact-then-round; no double intermediates.
using Real = boost::multiprecision::cpp_bin_float_50;

// Round an exact integer to the nearest IEEE-754 double-representable
// integer (53-bit mantissa, ties to even). Values that already fit are
// returned unchanged. This is the arithmetic a spreadsheet applies when a
// big-integer table is stored in 64-bit float cells.
inline BigInt round_to_double53(const BigInt& x) {
    if (x < 0) {
        return -round_to_double53(-x);
    }
    static const BigInt limit = BigInt(1) << 53;
    if (x < limit) {
        return x;
    }
    const unsigned shift = boost::multiprecision::msb(x) - 52;
    BigInt hi = x >> shift;
    const BigInt rem = x - (hi << shift);
    const BigInt half = BigInt(1) << (shift - 1);
    if (rem > half || (rem == half && boost::multiprecision::bit_test(hi, 0))) {
        ++hi;
    }
    return hi << shift;
}

}  // namespace nupart
