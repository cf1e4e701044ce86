#include "apollo/packing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace apollo {

bool disk_touches(const DiskSymbol& d, const RatRect& region) {
    if (d.curv <= 0) {
        return true;
    }
    Rat cx = make_rat(d.xdot, d.curv);
    Rat cy = make_rat(d.ydot, d.curv);
    Rat r = make_rat(1, d.curv);
    return cx + r >= region.x0 && cx - r <= region.x1 && cy + r >= region.y0 &&
           cy - r <= region.y1;
}

namespace {

using RowKey = std::array<Int, 4>;
using StateKey = std::array<RowKey, 4>;

RowKey row_key(const DiskSymbol& d) { return {d.xdot, d.ydot, d.curv, d.cocurv}; }

StateKey state_key(const GeoQuadruple& g) {
    StateKey k{row_key(g.rows[0]), row_key(g.rows[1]), row_key(g.rows[2]),
               row_key(g.rows[3])};
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

Packing complete(const GeoQuadruple& root, const Int& max_curv,
                 const std::optional<RatRect>& region) {
    VerificationReport root_report = verify_geo(root);
    if (!root_report.all_ok()) {
        std::ostringstream os;
        os << "complete: root configuration fails verification:";
        for (const auto& f : root_report.failures()) {
            os << " [" << f.name << "]";
        }
        throw InvalidRootError(os.str());
    }
    for (const DiskSymbol& d : root.rows) {
        if (d.curv > max_curv) {
            throw BoundTooSmallError("complete: max_curv is below a root curvature");
        }
    }
    bool has_half_plane = std::any_of(root.rows.begin(), root.rows.end(),
                                      [](const DiskSymbol& d) { return d.curv == 0; });
    if (has_half_plane && !region) {
        throw RegionRequiredError(
            "complete: root contains a half-plane; a region is required to bound the search");
    }
    if (region && !region->valid()) {
        throw std::invalid_argument("complete: degenerate region");
    }

    Packing p;
    p.root = root;
    p.bound = max_curv;
    p.region = region;

    std::map<RowKey, std::optional<size_t>> disk_witness;
    for (const DiskSymbol& d : root.rows) {
        disk_witness.emplace(row_key(d), std::nullopt);
    }

    std::set<StateKey> visited;
    std::deque<GeoQuadruple> queue{root};
    visited.insert(state_key(root));
    while (!queue.empty()) {
        GeoQuadruple state = queue.front();
        queue.pop_front();
        size_t state_index = p.visited_quads.size();
        p.visited_quads.push_back(state.curvatures());
        for (int slot = 1; slot <= 4; ++slot) {
            GeoQuadruple child = apply_move(state, QuadMove{QuadMoveKind::M, slot});
            const DiskSymbol& fresh = child.rows[static_cast<size_t>(slot - 1)];
            if (fresh.curv > max_curv) {
                continue;
            }
            if (region && !disk_touches(fresh, *region)) {
                continue;
            }
            if (!visited.insert(state_key(child)).second) {
                continue;
            }
            disk_witness.emplace(row_key(fresh), state_index);
            queue.push_back(child);
        }
    }

    std::vector<std::pair<RowKey, std::optional<size_t>>> collected(disk_witness.begin(),
                                                                    disk_witness.end());
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) {
                  auto key = [](const RowKey& k) {
                      return std::array<Int, 3>{k[2], k[0], k[1]};  // curv, xdot, ydot
                  };
                  return key(a.first) < key(b.first);
              });
    for (const auto& [k, w] : collected) {
        p.disks.push_back(DiskSymbol{k[0], k[1], k[2], k[3]});
        p.witness.push_back(w);
    }

    // Edges found by exact pairwise products rather than by following the
    // search tree; this doubles as a structural cross-check.
    for (size_t i = 0; i < p.disks.size(); ++i) {
        for (size_t j = i + 1; j < p.disks.size(); ++j) {
            if (p.disks[i] == -p.disks[j]) {
                continue;
            }
            if (minkowski2(p.disks[i], p.disks[j]) == 2) {
                p.tangencies.push_back({i, j, tangency_spinor(p.disks[i], p.disks[j])});
            }
        }
    }
    return p;
}

VerificationReport verify_packing(const Packing& p) {
    VerificationReport rep;
    bool norms = true, parity = true;
    for (const DiskSymbol& d : p.disks) {
        norms = norms && d.is_valid();
        parity = parity && (d.curv + d.cocurv) % 2 == 0;
    }
    rep.add("all symbols satisfy the norm invariant", norms);
    rep.add("all symbols have curvature parity 2|(A+A^c)", parity);

    bool bounded = true;
    for (const DiskSymbol& d : p.disks) {
        bounded = bounded && d.curv <= p.bound;
    }
    rep.add("all curvatures within bound", bounded);

    bool products = true, spinors = true;
    for (const TangencyEdge& e : p.tangencies) {
        const DiskSymbol& a = p.disks[e.a];
        const DiskSymbol& b = p.disks[e.b];
        bool tangent = a != b && a != -b && minkowski2(a, b) == 2;
        products = products && tangent;
        spinors = spinors && e.spinor.norm2() == a.curv + b.curv;
        if (tangent) {
            try {
                spinors = spinors && tangency_spinor(a, b) == e.spinor;
            } catch (const NonIntegralSpinorError&) {
                spinors = false;
            }
        }
    }
    rep.add("every tangency edge has Minkowski product 2", products);
    rep.add("every edge spinor is integral with norm^2 = curvature sum", spinors);

    bool descartes = true;
    for (const DescartesQuadruple& q : p.visited_quads) {
        descartes = descartes && q4(q) == 0;
    }
    rep.add("every visited configuration satisfies the Descartes relation", descartes);
    return rep;
}

std::vector<AdjacentSum> adjacent_sums_report(const Packing& p) {
    std::vector<AdjacentSum> out;
    out.reserve(p.tangencies.size());
    for (size_t i = 0; i < p.tangencies.size(); ++i) {
        const TangencyEdge& e = p.tangencies[i];
        Int ca = p.disks[e.a].curv;
        Int cb = p.disks[e.b].curv;
        Int small = boost::multiprecision::abs(e.spinor.m);
        Int large = boost::multiprecision::abs(e.spinor.n);
        if (small > large) {
            std::swap(small, large);
        }
        out.push_back({i, ca, cb, ca + cb, small, large});
    }
    return out;
}

}  // namespace apollo
