#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace segcalc {

// All arithmetic in this library is exact. Scalars are arbitrary-precision
// rationals; intermediate results are never rounded or floated.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised on contract violations. The message is the stable, documented error
// text callers may match on.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int b = 1;
    // exact at every step: a product of j consecutive integers is divisible by j!
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// C(k, j) for arbitrary integer k: the falling factorial k(k-1)...(k-j+1)/j!.
// This is the coefficient of x^j in the binomial series (1+x)^k; k may be
// negative (geometric-type series) or smaller than j (then the value is 0 for
// k >= 0).
inline Rational generalized_binomial(long long k, unsigned j) {
    Rational r = 1;
    for (unsigned i = 0; i < j; ++i) r *= Rational(Int(k) - Int(i));
    return r / Rational(factorial(j));
}

inline Int int_pow(const Int& base, unsigned e) {
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Renders "p" when integral, "p/q" otherwise.
inline std::string rational_str(const Rational& q) { return q.str(); }

}  // namespace segcalc
