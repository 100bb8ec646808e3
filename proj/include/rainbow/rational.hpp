#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace rainbow {

// Exact rational arithmetic. Weight values are sums of terms like
// 1/(outdeg * star_size); their reduced denominators can exceed 64 bits even
// on 40-vertex instances, so the integer type is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline Rat rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

inline std::string to_string(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

}  // namespace rainbow
