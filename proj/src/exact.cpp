#include "apollo/exact.hpp"

namespace apollo {

IsqrtResult isqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("isqrt: negative input");
    }
    if (n == 0) {
        return {0, true};
    }
    // Newton iteration x <- (x + n/x) / 2 from an over-estimate; converges
    // monotonically down to floor(sqrt(n)).
    Int x = Int(1) << static_cast<unsigned>(boost::multiprecision::msb(n) / 2 + 1);
    while (true) {
        Int y = (x + n / x) >> 1;
        if (y >= x) {
            break;
        }
        x = y;
    }
    return {x, x * x == n};
}

std::optional<Int> perfect_square(const Int& n) {
    if (n < 0) {
        return std::nullopt;
    }
    auto r = isqrt(n);
    if (!r.exact) {
        return std::nullopt;
    }
    return r.root;
}

Int gcd_all(const std::vector<Int>& v) {
    if (v.empty()) {
        throw std::invalid_argument("gcd_all: empty list");
    }
    Int g = 0;
    for (const Int& x : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) {
            break;
        }
    }
    return g;
}

std::optional<std::pair<Int, Int>> two_squares(const Int& n) {
    if (n < 0) {
        throw std::domain_error("two_squares: negative input");
    }
    for (Int p = 0; 2 * p * p <= n; ++p) {
        if (auto q = perfect_square(n - p * p)) {
            return std::make_pair(p, *q);
        }
    }
    return std::nullopt;
}

Int fibonacci(long k) {
    if (k < 0) {
        throw std::domain_error("fibonacci: negative index");
    }
    Int a = 0, b = 1;
    for (long i = 0; i < k; ++i) {
        Int c = a + b;
        a = b;
        b = c;
    }
    return a;
}

}  // namespace apollo
