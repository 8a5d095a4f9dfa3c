#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bdiag {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(const Int& n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - (k - i);
        r /= i;
    }
    return r;
}

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& i) { return i.str(); }

}  // namespace bdiag
