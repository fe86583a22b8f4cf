#ifndef FLCC_RATIONAL_HPP
#define FLCC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace flcc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient, exact; 0 when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt floor_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);  // always positive
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

// Floor, clamped below at 0, as a machine integer.
inline std::int64_t floor_clamp0(const Rational& r) {
    BigInt f = floor_rational(r);
    if (f < 0) return 0;
    return static_cast<std::int64_t>(f);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace flcc

#endif
