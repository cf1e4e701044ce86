#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

#include "apollo/exact.hpp"

namespace apollo {

struct NotTangentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralSpinorError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParityViolationError : std::domain_error {
    using std::domain_error::domain_error;
};
struct BothHalfPlanesError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A disk as four integers: reduced center coordinates (xdot, ydot) = A * (x, y),
/// curvature and co-curvature. Encodes a circle of center (xdot/A, ydot/A) and
/// radius 1/A when the curvature A is nonzero, a half-plane when it is zero.
/// A meaningful symbol satisfies curv * cocurv = xdot^2 + ydot^2 - 1, i.e. it is
/// a Minkowski vector of norm -1.
struct DiskSymbol {
    Int xdot;
    Int ydot;
    Int curv;
    Int cocurv;

    bool operator==(const DiskSymbol&) const = default;

    bool is_valid() const {
        if (xdot == 0 && ydot == 0 && curv == 0 && cocurv == 0) {
            return false;
        }
        return curv * cocurv == xdot * xdot + ydot * ydot - 1;
    }

    void require_valid() const {
        if (!is_valid()) {
            throw std::invalid_argument("disk symbol violates the norm invariant");
        }
    }

    DiskSymbol operator-() const { return {-xdot, -ydot, -curv, -cocurv}; }
    DiskSymbol operator+(const DiskSymbol& o) const {
        return {xdot + o.xdot, ydot + o.ydot, curv + o.curv, cocurv + o.cocurv};
    }
    DiskSymbol operator-(const DiskSymbol& o) const { return *this + (-o); }
};

DiskSymbol make_disk(Int xdot, Int ydot, Int curv, Int cocurv);

/// Integer pair attached to an ordered tangent disk pair, defined up to a
/// global sign. The canonical representative has m > 0, or m = 0 and n >= 0.
struct Spinor {
    Int m;
    Int n;

    bool operator==(const Spinor&) const = default;

    Spinor canonical() const {
        if (m < 0 || (m == 0 && n < 0)) {
            return {-m, -n};
        }
        return *this;
    }

    Int norm2() const { return m * m + n * n; }
};

struct Circle {
    Rat cx;
    Rat cy;
    Rat radius;  // signed: negative for a disk that extends outside its circle
    bool operator==(const Circle&) const = default;
};

/// Zero-curvature disk: the region {p : nx*p.x + ny*p.y >= offset}. The
/// normal (nx, ny) is a unit integer vector by the norm invariant.
struct HalfPlane {
    Int nx;
    Int ny;
    Rat offset;
    bool operator==(const HalfPlane&) const = default;
};

using EuclideanShape = std::variant<Circle, HalfPlane>;

/// Twice the Minkowski inner product of two symbols (doubled to stay in the
/// integers): -2*xa*xb - 2*ya*yb + A*B^c + A^c*B. A symbol paired with itself
/// gives -2; a tangent pair gives 2.
Int minkowski2(const DiskSymbol& a, const DiskSymbol& b);

/// True iff minkowski2(a, b) == 2. The arguments must be distinct disks
/// (a != b and a != -b), otherwise std::invalid_argument.
bool is_tangent(const DiskSymbol& a, const DiskSymbol& b);

/// Reflection of c in the boundary circle of k: c + 2<k,c>k. An involution
/// that preserves all pairwise Minkowski products.
DiskSymbol invert_disk(const DiskSymbol& k, const DiskSymbol& c);

/// The tangency spinor oriented from a to b, canonicalized in sign. Requires
/// tangency of the pair; throws NonIntegralSpinorError when either radicand
/// fails to be an even perfect square, which signals that the placement is
/// not hyper-integral.
Spinor tangency_spinor(const DiskSymbol& a, const DiskSymbol& b);

/// (m, n) -> (-n, m), canonicalized. Taking the spinor of the reversed pair
/// applies this quarter turn.
Spinor spinor_conjugate(const Spinor& u);

struct SpacetimeVector {
    Int xdot;
    Int ydot;
    Int z;  // (curv - cocurv) / 2
    Int t;  // (curv + cocurv) / 2
    bool operator==(const SpacetimeVector&) const = default;
};

/// Change of basis to space-time coordinates; requires curv + cocurv even.
SpacetimeVector spacetime(const DiskSymbol& a);

EuclideanShape decode(const DiskSymbol& a);

/// Reconstruct the symbol of a circle with integer curvature and integral
/// reduced coordinates. Throws if the data is not integral.
DiskSymbol encode_circle(const Rat& cx, const Rat& cy, const Int& curv);

struct RatPoint {
    Rat x;
    Rat y;
    bool operator==(const RatPoint&) const = default;
};

/// The common boundary point of a tangent pair, exact. At least one of the
/// two must be a circle; two half-planes meet only at infinity
/// (BothHalfPlanesError).
RatPoint tangency_point(const DiskSymbol& a, const DiskSymbol& b);

std::string to_string(const DiskSymbol& a);
std::string to_string(const Spinor& u);

}  // namespace apollo
