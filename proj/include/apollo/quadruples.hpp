#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollo/disk.hpp"
#include "apollo/exact.hpp"
#include "apollo/report.hpp"

namespace apollo {

struct InvalidQuadrupleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadPatternError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Curvatures of four mutually tangent disks, slot order preserved.
struct DescartesQuadruple {
    std::array<Int, 4> v;

    bool operator==(const DescartesQuadruple&) const = default;

    DescartesQuadruple sorted() const;
};

/// Four placed disks, one per row. The rows of a meaningful value are
/// pairwise tangent symbols whose curvature column satisfies the Descartes
/// relation.
struct GeoQuadruple {
    std::array<DiskSymbol, 4> rows;

    bool operator==(const GeoQuadruple&) const = default;

    DescartesQuadruple curvatures() const;
};

enum class QuadMoveKind { M, N };

/// M{i}: replace disk i by its Descartes conjugate through the other three.
/// N{i}: self-inversion through the boundary of disk i.
struct QuadMove {
    QuadMoveKind kind;
    int slot;  // 1..4

    bool operator==(const QuadMove&) const = default;
};

using MoveChain = std::vector<QuadMove>;

Int weight4(const DescartesQuadruple& v);

/// (a+b+c+d)^2 - 2(a^2+b^2+c^2+d^2); zero exactly on Descartes quadruples.
Int q4(const DescartesQuadruple& v);

/// Throws InvalidQuadrupleError, naming the failing condition, unless v is
/// primitive, satisfies the Descartes relation, and has weight > 1.
void validate_quadruple(const DescartesQuadruple& v);

DescartesQuadruple apply_move(const DescartesQuadruple& v, const QuadMove& mv);
GeoQuadruple apply_move(const GeoQuadruple& g, const QuadMove& mv);

bool is_base_quadruple(const DescartesQuadruple& v);

struct QuadDescent {
    MoveChain chain;
    DescartesQuadruple final;                 // a slot permutation of (0,0,1,1)
    std::vector<DescartesQuadruple> trace;    // starts with the input
};

/// Self-inversion on the negative minimum when present, otherwise the
/// Descartes move on the maximum; ties break to the lowest slot. Iterates to
/// the base quadruple with strictly decreasing weight.
QuadDescent descend4(const DescartesQuadruple& v);

/// The base Descartes configuration (two vertical lines, two unit circles)
/// with rows arranged so the curvature column equals the given permutation
/// of (0,0,1,1). Among equal curvatures the assignment is fixed: first
/// 0-slot (-1,0,0,2), second 0-slot (1,0,0,2), first 1-slot (0,0,1,-1),
/// second 1-slot (0,2,1,3).
GeoQuadruple base_geo(const DescartesQuadruple& pattern);

/// Place v in the plane with all-integer symbols and spinors: descend to the
/// base, build the base configuration on the final pattern, then replay the
/// recorded chain in reverse (each generator is its own inverse). The result's
/// curvature column equals v slotwise.
GeoQuadruple geometrize(const DescartesQuadruple& v);

/// Checks a placed quadruple: row norm invariants, pairwise tangency, the
/// Descartes relation on curvatures, integral spinors of the expected norm on
/// all six edges, curvature/co-curvature parity, and two-square
/// representability of every pairwise curvature sum.
VerificationReport verify_geo(const GeoQuadruple& g);

std::string to_string(const DescartesQuadruple& v);
std::string to_string(const QuadMove& mv);

}  // namespace apollo
