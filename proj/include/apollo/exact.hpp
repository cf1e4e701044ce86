#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apollo {

/// Exact signed integer of unbounded magnitude. All curvatures, coordinates
/// and spinor components in this library are values of this type.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for Euclidean decoding and group matrices.
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    if (den < 0) {  // cpp_rational's (num, den) constructor wants den > 0
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

struct IsqrtResult {
    Int root;    // floor(sqrt(n))
    bool exact;  // root * root == n
};

/// Floor integer square root by Newton iteration. Throws std::domain_error
/// for negative input.
IsqrtResult isqrt(const Int& n);

/// sqrt(n) when n is a perfect square >= 0, empty otherwise.
std::optional<Int> perfect_square(const Int& n);

/// gcd of the absolute values; all-zero input gives 0. Throws
/// std::invalid_argument on an empty list.
Int gcd_all(const std::vector<Int>& v);

/// Decomposition n = p^2 + q^2 with 0 <= p <= q and p minimal, or empty when
/// none exists. Direct search over p; fine at the magnitudes this library
/// works with.
std::optional<std::pair<Int, Int>> two_squares(const Int& n);

/// F_0 = 0, F_1 = 1, F_{k+1} = F_k + F_{k-1}. Throws on negative index.
Int fibonacci(long k);

}  // namespace apollo
