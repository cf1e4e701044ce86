#include "apollo/disk.hpp"

#include <sstream>

namespace apollo {

DiskSymbol make_disk(Int xdot, Int ydot, Int curv, Int cocurv) {
    DiskSymbol d{std::move(xdot), std::move(ydot), std::move(curv), std::move(cocurv)};
    d.require_valid();
    return d;
}

Int minkowski2(const DiskSymbol& a, const DiskSymbol& b) {
    return -2 * a.xdot * b.xdot - 2 * a.ydot * b.ydot + a.curv * b.cocurv +
           a.cocurv * b.curv;
}

bool is_tangent(const DiskSymbol& a, const DiskSymbol& b) {
    if (a == b || a == -b) {
        throw std::invalid_argument("is_tangent: arguments denote the same circle");
    }
    return minkowski2(a, b) == 2;
}

DiskSymbol invert_disk(const DiskSymbol& k, const DiskSymbol& c) {
    Int twice_product = minkowski2(k, c);
    return {c.xdot + twice_product * k.xdot, c.ydot + twice_product * k.ydot,
            c.curv + twice_product * k.curv, c.cocurv + twice_product * k.cocurv};
}

Spinor tangency_spinor(const DiskSymbol& a, const DiskSymbol& b) {
    if (!is_tangent(a, b)) {
        throw NotTangentError("tangency_spinor: disks are not tangent");
    }
    Int delta = a.curv * b.xdot - b.curv * a.xdot;
    Int dety = a.curv * b.ydot - b.curv * a.ydot;
    Int sum = a.curv + b.curv;
    Int twice_m2 = sum + delta;
    Int twice_n2 = sum - delta;
    if (twice_m2 < 0 || twice_n2 < 0 || twice_m2 % 2 != 0 || twice_n2 % 2 != 0) {
        throw NonIntegralSpinorError("tangency_spinor: radicand not an even non-negative integer");
    }
    auto m = perfect_square(twice_m2 / 2);
    auto n = perfect_square(twice_n2 / 2);
    if (!m || !n) {
        throw NonIntegralSpinorError("tangency_spinor: radicand is not a perfect square");
    }
    Int sign = dety < 0 ? -1 : 1;
    return Spinor{*m, sign * *n}.canonical();
}

Spinor spinor_conjugate(const Spinor& u) {
    return Spinor{-u.n, u.m}.canonical();
}

SpacetimeVector spacetime(const DiskSymbol& a) {
    Int sum = a.curv + a.cocurv;
    if (sum % 2 != 0) {
        throw ParityViolationError("spacetime: curvature and co-curvature differ in parity");
    }
    return {a.xdot, a.ydot, (a.curv - a.cocurv) / 2, sum / 2};
}

EuclideanShape decode(const DiskSymbol& a) {
    if (a.curv == 0) {
        return HalfPlane{a.xdot, a.ydot, make_rat(a.cocurv, 2)};
    }
    return Circle{make_rat(a.xdot, a.curv), make_rat(a.ydot, a.curv),
                  make_rat(1, a.curv)};
}

DiskSymbol encode_circle(const Rat& cx, const Rat& cy, const Int& curv) {
    Rat rx = cx * curv;
    Rat ry = cy * curv;
    if (boost::multiprecision::denominator(rx) != 1 ||
        boost::multiprecision::denominator(ry) != 1) {
        throw std::invalid_argument("encode_circle: reduced coordinates are not integral");
    }
    Int xdot = boost::multiprecision::numerator(rx);
    Int ydot = boost::multiprecision::numerator(ry);
    Int num = xdot * xdot + ydot * ydot - 1;
    if (curv == 0 || num % curv != 0) {
        throw std::invalid_argument("encode_circle: co-curvature is not integral");
    }
    return make_disk(xdot, ydot, curv, num / curv);
}

RatPoint tangency_point(const DiskSymbol& a, const DiskSymbol& b) {
    if (!is_tangent(a, b)) {
        throw NotTangentError("tangency_point: disks are not tangent");
    }
    if (a.curv == 0 && b.curv == 0) {
        throw BothHalfPlanesError("tangency_point: two half-planes meet at infinity");
    }
    // For tangent disks the contact point is the curvature-weighted mean of
    // the centers, (xdot_a + xdot_b, ydot_a + ydot_b) / (A + B); the sum of
    // curvatures cannot vanish once the same-circle and two-half-plane cases
    // are excluded.
    Int den = a.curv + b.curv;
    return {make_rat(a.xdot + b.xdot, den), make_rat(a.ydot + b.ydot, den)};
}

std::string to_string(const DiskSymbol& a) {
    std::ostringstream os;
    os << "(" << a.xdot << "," << a.ydot << "," << a.curv << "," << a.cocurv << ")";
    return os.str();
}

std::string to_string(const Spinor& u) {
    std::ostringstream os;
    os << "[" << u.m << "," << u.n << "]";
    return os.str();
}

}  // namespace apollo
