// Exact arbitrary-precision integer and rational types used across the library.
#ifndef SUMSET_INTEGERS_HPP
#define SUMSET_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sumset {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when user-supplied data violates a documented precondition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an internal invariant is broken; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline long long to_int64(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw ValidationError("integer does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

inline Int int_gcd(Int a, Int b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace sumset

#endif
