#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollo/disk.hpp"
#include "apollo/exact.hpp"
#include "apollo/quadruples.hpp"
#include "apollo/report.hpp"

namespace apollo {

struct InvalidRootError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BoundTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RegionRequiredError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed axis-aligned rectangle with exact rational corners.
struct RatRect {
    Rat x0;
    Rat y0;
    Rat x1;
    Rat y1;

    bool valid() const { return x0 <= x1 && y0 <= y1; }
};

/// Conservative intersection test on the disk's bounding box; disks of
/// non-positive curvature have unbounded extent and always intersect.
bool disk_touches(const DiskSymbol& d, const RatRect& region);

struct TangencyEdge {
    size_t a;  // indices into Packing::disks, a < b
    size_t b;
    Spinor spinor;  // oriented from disks[a] to disks[b], canonical sign
};

struct Packing {
    GeoQuadruple root;
    Int bound;
    std::optional<RatRect> region;
    std::vector<DiskSymbol> disks;  // deduped, sorted by (curv, xdot, ydot)
    std::vector<TangencyEdge> tangencies;

    /// Curvature quadruples of every configuration the search visited.
    std::vector<DescartesQuadruple> visited_quads;

    /// For each disk, the index of the visited configuration whose Descartes
    /// move produced it, or none for a root disk.
    std::vector<std::optional<size_t>> witness;
};

/// Apollonian completion of a placed Descartes configuration: breadth-first
/// orbit of the four Descartes moves, keeping children whose new disk has
/// curvature <= max_curv and (when a region is given) touches the region.
/// Configurations containing a half-plane enumerate unboundedly many
/// translates, so those roots require a region.
Packing complete(const GeoQuadruple& root, const Int& max_curv,
                 const std::optional<RatRect>& region = std::nullopt);

/// Packing-wide checks: symbol norm invariants, parity, every edge's Minkowski
/// product and spinor norm, and the Descartes relation on every visited
/// configuration.
VerificationReport verify_packing(const Packing& p);

struct AdjacentSum {
    size_t edge;        // index into tangencies
    Int curvature_a;
    Int curvature_b;
    Int sum;
    Int p;              // sum = p^2 + q^2, read off the spinor, p <= q
    Int q;
};

/// The two-squares decomposition of every adjacent curvature sum, witnessed
/// directly by the edge spinors rather than re-searched.
std::vector<AdjacentSum> adjacent_sums_report(const Packing& p);

}  // namespace apollo
