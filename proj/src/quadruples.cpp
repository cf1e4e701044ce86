#include "apollo/quadruples.hpp"

#include <algorithm>
#include <sstream>

#include "apollo/triples.hpp"

namespace apollo {

DescartesQuadruple DescartesQuadruple::sorted() const {
    DescartesQuadruple s = *this;
    std::sort(s.v.begin(), s.v.end());
    return s;
}

DescartesQuadruple GeoQuadruple::curvatures() const {
    return {{rows[0].curv, rows[1].curv, rows[2].curv, rows[3].curv}};
}

Int weight4(const DescartesQuadruple& v) {
    return v.v[0] + v.v[1] + v.v[2] + v.v[3];
}

Int q4(const DescartesQuadruple& v) {
    Int s = weight4(v);
    Int ss = 0;
    for (const Int& x : v.v) {
        ss += x * x;
    }
    return s * s - 2 * ss;
}

void validate_quadruple(const DescartesQuadruple& v) {
    if (gcd_all({v.v[0], v.v[1], v.v[2], v.v[3]}) != 1) {
        throw InvalidQuadrupleError("quadruple is not primitive (gcd != 1)");
    }
    if (q4(v) != 0) {
        throw InvalidQuadrupleError("quadruple fails the Descartes relation (q4 != 0)");
    }
    Int w = weight4(v);
    if (w <= 1) {
        std::ostringstream os;
        os << "weight " << w << " <= 1";
        throw InvalidQuadrupleError(os.str());
    }
}

namespace {

template <typename Value>
Value move_m(const std::array<Value, 4>& x, size_t i) {
    Value sum_others = x[(i + 1) % 4] + x[(i + 2) % 4] + x[(i + 3) % 4];
    return sum_others + sum_others - x[i];
}

}  // namespace

DescartesQuadruple apply_move(const DescartesQuadruple& v, const QuadMove& mv) {
    if (mv.slot < 1 || mv.slot > 4) {
        throw std::out_of_range("apply_move: slot out of range");
    }
    size_t i = static_cast<size_t>(mv.slot - 1);
    DescartesQuadruple r = v;
    if (mv.kind == QuadMoveKind::M) {
        r.v[i] = move_m(v.v, i);
    } else {
        Int old = v.v[i];
        for (size_t j = 0; j < 4; ++j) {
            r.v[j] = (j == i) ? Int(-old) : Int(v.v[j] + 2 * old);
        }
    }
    return r;
}

GeoQuadruple apply_move(const GeoQuadruple& g, const QuadMove& mv) {
    if (mv.slot < 1 || mv.slot > 4) {
        throw std::out_of_range("apply_move: slot out of range");
    }
    size_t i = static_cast<size_t>(mv.slot - 1);
    GeoQuadruple r = g;
    if (mv.kind == QuadMoveKind::M) {
        r.rows[i] = move_m(g.rows, i);
    } else {
        DiskSymbol old = g.rows[i];
        for (size_t j = 0; j < 4; ++j) {
            r.rows[j] = (j == i) ? -old : g.rows[j] + old + old;
        }
    }
    return r;
}

bool is_base_quadruple(const DescartesQuadruple& v) {
    DescartesQuadruple s = v.sorted();
    return s.v[0] == 0 && s.v[1] == 0 && s.v[2] == 1 && s.v[3] == 1;
}

QuadDescent descend4(const DescartesQuadruple& v) {
    validate_quadruple(v);
    QuadDescent d;
    d.trace.push_back(v);
    DescartesQuadruple cur = v;
    while (!is_base_quadruple(cur)) {
        size_t imin = 0, imax = 0;
        for (size_t i = 1; i < 4; ++i) {
            if (cur.v[i] < cur.v[imin]) {
                imin = i;
            }
            if (cur.v[i] > cur.v[imax]) {
                imax = i;
            }
        }
        QuadMove mv = (cur.v[imin] < 0)
                          ? QuadMove{QuadMoveKind::N, static_cast<int>(imin) + 1}
                          : QuadMove{QuadMoveKind::M, static_cast<int>(imax) + 1};
        DescartesQuadruple next = apply_move(cur, mv);
        if (weight4(next) >= weight4(cur)) {
            throw NonTerminationError("descend4: weight failed to decrease off the base quadruple");
        }
        d.chain.push_back(mv);
        d.trace.push_back(next);
        cur = next;
    }
    d.final = cur;
    return d;
}

GeoQuadruple base_geo(const DescartesQuadruple& pattern) {
    int zeros = 0, ones = 0;
    for (const Int& x : pattern.v) {
        if (x == 0) {
            ++zeros;
        } else if (x == 1) {
            ++ones;
        }
    }
    if (zeros != 2 || ones != 2) {
        throw BadPatternError("base_geo: pattern is not a permutation of (0,0,1,1)");
    }
    const DiskSymbol zero_rows[2] = {{-1, 0, 0, 2}, {1, 0, 0, 2}};
    const DiskSymbol one_rows[2] = {{0, 0, 1, -1}, {0, 2, 1, 3}};
    GeoQuadruple g;
    int seen_zero = 0, seen_one = 0;
    for (size_t i = 0; i < 4; ++i) {
        g.rows[i] = (pattern.v[i] == 0) ? zero_rows[seen_zero++] : one_rows[seen_one++];
    }
    return g;
}

GeoQuadruple geometrize(const DescartesQuadruple& v) {
    QuadDescent d = descend4(v);
    GeoQuadruple g = base_geo(d.final);
    for (auto it = d.chain.rbegin(); it != d.chain.rend(); ++it) {
        g = apply_move(g, *it);
    }
    if (g.curvatures() != v) {
        throw std::logic_error("geometrize: replay did not restore the input curvatures");
    }
    return g;
}

VerificationReport verify_geo(const GeoQuadruple& g) {
    VerificationReport rep;
    for (size_t i = 0; i < 4; ++i) {
        rep.add("row " + std::to_string(i + 1) + " norm invariant", g.rows[i].is_valid(),
                g.rows[i].is_valid() ? "" : to_string(g.rows[i]));
    }
    for (size_t i = 0; i < 4; ++i) {
        Int parity = g.rows[i].curv + g.rows[i].cocurv;
        rep.add("row " + std::to_string(i + 1) + " parity 2|(A+A^c)", parity % 2 == 0);
    }
    rep.add("Descartes relation q4 = 0", q4(g.curvatures()) == 0);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = i + 1; j < 4; ++j) {
            std::string edge = std::to_string(i + 1) + "-" + std::to_string(j + 1);
            Int prod = minkowski2(g.rows[i], g.rows[j]);
            bool tangent = prod == 2 && g.rows[i] != g.rows[j] && g.rows[i] != -g.rows[j];
            rep.add("tangency " + edge, tangent,
                    tangent ? "" : "minkowski2 = " + prod.str());
            Int sum = g.rows[i].curv + g.rows[j].curv;
            if (tangent) {
                try {
                    Spinor u = tangency_spinor(g.rows[i], g.rows[j]);
                    rep.add("spinor " + edge + " integral, norm^2 = curvature sum",
                            u.norm2() == sum);
                } catch (const NonIntegralSpinorError& e) {
                    rep.add("spinor " + edge + " integral, norm^2 = curvature sum", false,
                            e.what());
                }
            }
            bool representable = sum >= 0 && two_squares(sum).has_value();
            rep.add("curvature sum " + edge + " is a sum of two squares", representable,
                    representable ? "" : sum.str());
        }
    }
    return rep;
}

std::string to_string(const DescartesQuadruple& v) {
    std::ostringstream os;
    os << "(" << v.v[0] << "," << v.v[1] << "," << v.v[2] << "," << v.v[3] << ")";
    return os.str();
}

std::string to_string(const QuadMove& mv) {
    return (mv.kind == QuadMoveKind::M ? "M@" : "N@") + std::to_string(mv.slot);
}

}  // namespace apollo
