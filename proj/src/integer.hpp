#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ratknot {

// All arithmetic in this library is exact. Determinants grow like the
// product of the twist counts, so fixed-width integers are not an option.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

inline Integer abs_int(const Integer& v) { return boost::multiprecision::abs(v); }

inline Integer gcd_int(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

}  // namespace ratknot
