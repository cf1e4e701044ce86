#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollo/exact.hpp"

namespace apollo {

struct NotProperError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvalidTripleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonTerminationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Curvatures of three mutually tangent disks, slot order preserved.
struct CurvatureTriple {
    std::array<Int, 3> v;

    bool operator==(const CurvatureTriple&) const = default;

    const Int& operator[](int slot) const { return v[static_cast<size_t>(slot)]; }

    CurvatureTriple sorted() const;
};

enum class TriMoveKind { SelfInvert, DescartesReplace };

struct TriMove {
    TriMoveKind kind;
    int slot;       // 1..3
    int sign;       // +1 / -1, meaningful for DescartesReplace only
};

Int weight3(const CurvatureTriple& t);

/// The quadratic form ab + bc + ca; its square root is the curvature of the
/// circle through the three tangency points.
Int q3(const CurvatureTriple& t);

/// Primitive, of positive weight, and with integral Descartes completion
/// (q3 a perfect square).
bool is_proper(const CurvatureTriple& t);

Int inscribed_curvature(const CurvatureTriple& t);

/// The two curvatures completing the triple to a Descartes configuration:
/// a+b+c -+ 2*sqrt(q3), returned with dminus <= dplus.
std::pair<Int, Int> descartes_completions(const CurvatureTriple& t);

/// Inversion through the boundary of the disk in the given slot (1..3):
/// negate that entry, add twice its old value to the other two.
CurvatureTriple self_invert3(const CurvatureTriple& t, int slot);

/// Replace the entry at slot (1..3) by w(t) + sign * 2*sqrt(q3(t)). Requires
/// a proper triple so the result is integral.
CurvatureTriple descartes_move3(const CurvatureTriple& t, int slot, int sign);

/// Throws InvalidTripleError, naming the failing condition, unless t is a
/// realizable proper triple: gcd 1, positive weight, q3 a perfect square, and
/// at most one negative entry.
void validate_triple(const CurvatureTriple& t);

struct TriStep {
    TriMove move;
    CurvatureTriple result;
};

/// One descending move: self-inversion through the negative entry when one
/// exists, otherwise the smaller-conjugate Descartes replacement of the
/// maximal entry. Ties break to the lowest slot. The base triple (0,0,1)
/// is the unique fixed point.
TriStep descend_step3(const CurvatureTriple& t);

struct TriDescent {
    std::vector<TriMove> chain;
    std::vector<CurvatureTriple> trace;  // starts with the input, ends at base
};

/// Iterate descend_step3 until the sorted triple equals (0,0,1).
TriDescent descend3(const CurvatureTriple& t);

bool is_base_triple(const CurvatureTriple& t);

std::string to_string(const CurvatureTriple& t);

}  // namespace apollo
