#ifndef SSPT_RATIONAL_HPP
#define SSPT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace sspt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// H(n) = sum_{i=1..n} 1/i, exact.
inline Rational harmonic(std::uint64_t n) {
    Rational h(0);
    for (std::uint64_t i = 1; i <= n; ++i) h += Rational(1, BigInt(i));
    return h;
}

}  // namespace sspt

#endif
