#include <doctest.h>

#include <vector>

#include "apollo/disk.hpp"

using namespace apollo;

namespace {

// The placed root of the Apollonian Window (outer unit circle, two half
// disks, the top circle) and the base configuration it inverts to.
const DiskSymbol kOuter{0, 0, -1, 1};
const DiskSymbol kLeft{-1, 0, 2, 0};
const DiskSymbol kRight{1, 0, 2, 0};
const DiskSymbol kTop{0, 2, 3, 1};
const DiskSymbol kLineL{-1, 0, 0, 2};
const DiskSymbol kLineR{1, 0, 0, 2};
const DiskSymbol kUnit{0, 0, 1, -1};

Spinor complex_square(const Spinor& u) {
    return {u.m * u.m - u.n * u.n, 2 * u.m * u.n};
}

}  // namespace

TEST_CASE("norm invariant checks on construction") {
    CHECK_NOTHROW(make_disk(6, 8, 11, 9));
    CHECK_THROWS_AS(make_disk(6, 8, 11, 10), std::invalid_argument);
    CHECK_THROWS_AS(make_disk(0, 0, 0, 0), std::invalid_argument);
    for (const DiskSymbol& d : {kOuter, kLeft, kRight, kTop, kLineL, kLineR, kUnit}) {
        CHECK(d.is_valid());
    }
}

TEST_CASE("minkowski2 values") {
    CHECK(minkowski2(kOuter, kOuter) == -2);
    CHECK(minkowski2(kOuter, kRight) == 2);
    CHECK(minkowski2(kLineL, kLineR) == 2);  // tangent at infinity
    CHECK(minkowski2(kLeft, kRight) == 2);
}

TEST_CASE("is_tangent") {
    CHECK(is_tangent(kUnit, kLineR));
    DiskSymbol eleven{6, 8, 11, 9};
    DiskSymbol fourteen{7, 8, 14, 8};
    CHECK(is_tangent(eleven, fourteen));
    CHECK_FALSE(is_tangent(kUnit, DiskSymbol{0, 4, 1, 15}));  // disjoint translate
    CHECK_THROWS_AS(is_tangent(kUnit, kUnit), std::invalid_argument);
    CHECK_THROWS_AS(is_tangent(kUnit, -kUnit), std::invalid_argument);
}

TEST_CASE("invert_disk on tangent pairs adds twice the mirror") {
    CHECK(invert_disk(kOuter, kRight) == kLineR);
    CHECK(invert_disk(kRight, kRight) == -kRight);
    // Inverting the (11,14,15) tricycle through its 11-disk.
    DiskSymbol eleven{6, 8, 11, 9};
    DiskSymbol fourteen{7, 8, 14, 8};
    DiskSymbol fifteen{6, 10, 15, 9};
    DiskSymbol img14 = invert_disk(eleven, fourteen);
    DiskSymbol img15 = invert_disk(eleven, fifteen);
    CHECK(img14 == DiskSymbol{19, 24, 36, 26});
    CHECK(img15 == DiskSymbol{18, 26, 37, 27});
    CHECK(img14.is_valid());
    CHECK(img15.is_valid());
}

TEST_CASE("invert_disk is an involution preserving products") {
    std::vector<DiskSymbol> disks{kOuter, kLeft, kRight, kTop, kUnit, kLineR};
    for (const DiskSymbol& k : disks) {
        for (const DiskSymbol& c : disks) {
            CHECK(invert_disk(k, invert_disk(k, c)) == c);
        }
        for (const DiskSymbol& a : disks) {
            for (const DiskSymbol& b : disks) {
                CHECK(minkowski2(invert_disk(k, a), invert_disk(k, b)) ==
                      minkowski2(a, b));
            }
        }
    }
}

TEST_CASE("tangency spinors of the base figures") {
    CHECK(tangency_spinor(kLeft, kRight) == Spinor{2, 0});
    CHECK(tangency_spinor(kRight, kOuter) == Spinor{1, 0});
    CHECK(tangency_spinor(kOuter, kRight) == Spinor{0, 1});
    CHECK(tangency_spinor(kLineL, kLineR) == Spinor{0, 0});
    CHECK_THROWS_AS(tangency_spinor(kUnit, DiskSymbol{0, 4, 1, 15}), NotTangentError);
}

TEST_CASE("spinor norm equals the curvature sum") {
    std::vector<DiskSymbol> window{kOuter, kLeft, kRight, kTop};
    for (size_t i = 0; i < window.size(); ++i) {
        for (size_t j = 0; j < window.size(); ++j) {
            if (i == j) {
                continue;
            }
            Spinor u = tangency_spinor(window[i], window[j]);
            CHECK(u.norm2() == window[i].curv + window[j].curv);
        }
    }
}

TEST_CASE("non-integral spinor is reported") {
    // Two unit circles tangent along the x-axis: the radicand (A+B+delta)/2
    // comes out 2, not a square, so this placement is not hyper-integral.
    DiskSymbol a = kUnit;
    DiskSymbol b = encode_circle(Rat(2), Rat(0), Int(1));
    CHECK(is_tangent(a, b));
    CHECK_THROWS_AS(tangency_spinor(a, b), NonIntegralSpinorError);
    // The same circles stacked vertically are fine: spinor (1,-1).
    DiskSymbol c = encode_circle(Rat(0), Rat(1), Int(1));
    DiskSymbol d = encode_circle(Rat(0), Rat(-1), Int(1));
    CHECK(tangency_spinor(c, d) == Spinor{1, -1});
}

TEST_CASE("spinor covariance under self-inversion: squares negate") {
    std::vector<DiskSymbol> window{kOuter, kLeft, kRight, kTop};
    for (size_t i = 0; i < window.size(); ++i) {
        for (size_t j = 0; j < window.size(); ++j) {
            if (i == j) {
                continue;
            }
            const DiskSymbol& a = window[i];
            const DiskSymbol& b = window[j];
            Spinor u = tangency_spinor(a, b);
            Spinor up = tangency_spinor(invert_disk(a, a), invert_disk(a, b));
            Spinor usq = complex_square(u);
            Spinor upsq = complex_square(up);
            CHECK(upsq == Spinor{-usq.m, -usq.n});
            CHECK(up.canonical() == spinor_conjugate(u));
        }
    }
}

TEST_CASE("spinor_conjugate") {
    CHECK(spinor_conjugate({1, 0}) == Spinor{0, 1});
    CHECK(spinor_conjugate({2, 2}) == Spinor{2, -2});
    CHECK(spinor_conjugate({0, 0}) == Spinor{0, 0});
}

TEST_CASE("spacetime change of basis") {
    CHECK(spacetime(kLineR) == SpacetimeVector{1, 0, -1, 1});
    CHECK(spacetime(kUnit) == SpacetimeVector{0, 0, 1, 0});
    CHECK_THROWS_AS(spacetime(DiskSymbol{0, 0, 1, 0}), ParityViolationError);
}

TEST_CASE("decode to Euclidean shapes") {
    auto c = std::get<Circle>(decode(DiskSymbol{6, 8, 11, 9}));
    CHECK(c.cx == Rat(6, 11));
    CHECK(c.cy == Rat(8, 11));
    CHECK(c.radius == Rat(1, 11));

    auto h = std::get<HalfPlane>(decode(kLineR));
    CHECK(h.nx == 1);
    CHECK(h.ny == 0);
    CHECK(h.offset == 1);  // boundary x = 1, disk x >= 1

    auto hl = std::get<HalfPlane>(decode(kLineL));
    CHECK(hl.nx == -1);
    CHECK(hl.offset == 1);  // boundary -x = 1, disk x <= -1

    auto u = std::get<Circle>(decode(kUnit));
    CHECK(u.cx == 0);
    CHECK(u.cy == 0);
    CHECK(u.radius == 1);
}

TEST_CASE("decode/encode round-trip") {
    for (const DiskSymbol& d : {kOuter, kLeft, kRight, kTop, kUnit,
                                DiskSymbol{6, 8, 11, 9}, DiskSymbol{18, 26, 37, 27}}) {
        if (d.curv == 0) {
            continue;
        }
        auto c = std::get<Circle>(decode(d));
        CHECK(encode_circle(c.cx, c.cy, d.curv) == d);
    }
}

TEST_CASE("tangency_point") {
    CHECK(tangency_point(kLeft, kTop) == RatPoint{Rat(-1, 5), Rat(2, 5)});
    CHECK(tangency_point(kUnit, kLineR) == RatPoint{Rat(1), Rat(0)});
    CHECK(tangency_point(kOuter, kRight) == RatPoint{Rat(1), Rat(0)});
    CHECK_THROWS_AS(tangency_point(kLineL, kLineR), BothHalfPlanesError);
    CHECK_THROWS_AS(tangency_point(kUnit, DiskSymbol{0, 4, 1, 15}), NotTangentError);
}
