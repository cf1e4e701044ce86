#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollo/exact.hpp"
#include "apollo/quadruples.hpp"
#include "apollo/triples.hpp"

namespace apollo {

struct UnknownFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A quadruple on which no Descartes move lowers the weight, sorted
/// a <= 0 <= b <= c <= d with a + b + c >= d. Its three minimal curvatures
/// form the principal triple labeling the packing.
struct RootQuadruple {
    DescartesQuadruple quad;

    CurvatureTriple principal() const { return {{quad.v[0], quad.v[1], quad.v[2]}}; }

    bool operator==(const RootQuadruple&) const = default;
    auto operator<=>(const RootQuadruple& o) const { return quad.v <=> o.quad.v; }
};

/// All primitive root quadruples with outer curvature down to -max_outer,
/// sorted. Scans principal triples (a,b,c) with c bounded by a^2 + |a| and
/// keeps integral completions that satisfy the root inequality; every result
/// is cross-validated by a full descent to the base quadruple.
std::vector<RootQuadruple> root_atlas(const Int& max_outer);

/// Reduce a quadruple to its packing root by Descartes moves on the maximal
/// slot while they lower the weight. Sorted output.
RootQuadruple reduce_to_root(const DescartesQuadruple& v);

struct DescentDigraph {
    struct Edge {
        size_t from;
        size_t to;
        TriMoveKind kind;
    };
    std::vector<CurvatureTriple> vertices;  // sorted triples, canonical order
    std::vector<Edge> edges;
    std::set<size_t> principal;  // indices of principal (root) triples

    size_t index_of(const CurvatureTriple& sorted_triple) const;
};

/// The descent-step digraph on the principal triples of root_atlas(max_outer)
/// together with every intermediate triple on their descents. Every path ends
/// at the base triple (0,0,1).
DescentDigraph principal_descent_digraph(const Int& max_outer);

enum class ThreadFamily { A, B, C, D, E, F, G };

ThreadFamily parse_family(const std::string& s);
std::string to_string(ThreadFamily f);

struct ThreadTriple {
    CurvatureTriple triple;
    std::pair<Int, Int> fourth;  // Descartes completions, dminus <= dplus
};

/// The n-th triple of a thread family with its completions. The closed-form
/// fourth-disk values are recomputed from the triple and must agree with the
/// family formula; a mismatch is a logic error.
ThreadTriple thread_triple(ThreadFamily f, long n);

/// (-F_{2n}, F_{2n+1}, F_{2n+2}) with fourth disks 2 F_{2n+1} -+ 2.
ThreadTriple fibonacci_triple(long n);

struct FibonacciPoint {
    RatPoint p;
    bool on_circle;  // exact test of (x+1)^2 + (y-1)^2 = 1
};

/// Tangency point of consecutive disks in the planar realization of the
/// Fibonacci thread: (-F_{n-1}^2, 2 F_n^2) / F_{2n+1}. The first coordinate
/// is negated relative to the source display, which fails the circle identity
/// as printed for n >= 2.
FibonacciPoint fibonacci_tangency_point(long n);

}  // namespace apollo
