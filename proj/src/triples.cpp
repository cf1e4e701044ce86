#include "apollo/triples.hpp"

#include <algorithm>
#include <sstream>

namespace apollo {

CurvatureTriple CurvatureTriple::sorted() const {
    CurvatureTriple s = *this;
    std::sort(s.v.begin(), s.v.end());
    return s;
}

Int weight3(const CurvatureTriple& t) { return t.v[0] + t.v[1] + t.v[2]; }

Int q3(const CurvatureTriple& t) {
    return t.v[0] * t.v[1] + t.v[1] * t.v[2] + t.v[2] * t.v[0];
}

bool is_proper(const CurvatureTriple& t) {
    if (gcd_all({t.v[0], t.v[1], t.v[2]}) != 1) {
        return false;
    }
    if (weight3(t) <= 0) {
        return false;
    }
    return perfect_square(q3(t)).has_value();
}

Int inscribed_curvature(const CurvatureTriple& t) {
    if (!is_proper(t)) {
        throw NotProperError("inscribed_curvature: triple is not proper");
    }
    return *perfect_square(q3(t));
}

std::pair<Int, Int> descartes_completions(const CurvatureTriple& t) {
    if (!is_proper(t)) {
        throw NotProperError("descartes_completions: triple is not proper");
    }
    Int w = weight3(t);
    Int r = *perfect_square(q3(t));
    return {w - 2 * r, w + 2 * r};
}

CurvatureTriple self_invert3(const CurvatureTriple& t, int slot) {
    size_t i = static_cast<size_t>(slot - 1);
    if (slot < 1 || slot > 3) {
        throw std::out_of_range("self_invert3: slot out of range");
    }
    CurvatureTriple r = t;
    Int old = t.v[i];
    for (size_t j = 0; j < 3; ++j) {
        r.v[j] = (j == i) ? Int(-old) : Int(t.v[j] + 2 * old);
    }
    return r;
}

CurvatureTriple descartes_move3(const CurvatureTriple& t, int slot, int sign) {
    if (slot < 1 || slot > 3) {
        throw std::out_of_range("descartes_move3: slot out of range");
    }
    if (!is_proper(t)) {
        throw NotProperError("descartes_move3: triple is not proper");
    }
    Int w = weight3(t);
    Int r = *perfect_square(q3(t));
    CurvatureTriple out = t;
    out.v[static_cast<size_t>(slot - 1)] = (sign >= 0) ? Int(w + 2 * r) : Int(w - 2 * r);
    return out;
}

void validate_triple(const CurvatureTriple& t) {
    if (gcd_all({t.v[0], t.v[1], t.v[2]}) != 1) {
        throw InvalidTripleError("triple is not primitive (gcd != 1)");
    }
    if (weight3(t) <= 0) {
        throw InvalidTripleError("triple has non-positive weight");
    }
    if (!perfect_square(q3(t))) {
        throw InvalidTripleError("q3 is not a perfect square (no integral completion)");
    }
    int negatives = 0;
    for (const Int& x : t.v) {
        if (x < 0) {
            ++negatives;
        }
    }
    if (negatives >= 2) {
        throw InvalidTripleError("more than one negative entry (not realizable)");
    }
}

bool is_base_triple(const CurvatureTriple& t) {
    CurvatureTriple s = t.sorted();
    return s.v[0] == 0 && s.v[1] == 0 && s.v[2] == 1;
}

TriStep descend_step3(const CurvatureTriple& t) {
    validate_triple(t);
    for (size_t i = 0; i < 3; ++i) {
        if (t.v[i] < 0) {
            int slot = static_cast<int>(i) + 1;
            return {TriMove{TriMoveKind::SelfInvert, slot, 0}, self_invert3(t, slot)};
        }
    }
    size_t imax = 0;
    for (size_t i = 1; i < 3; ++i) {
        if (t.v[i] > t.v[imax]) {
            imax = i;
        }
    }
    int slot = static_cast<int>(imax) + 1;
    return {TriMove{TriMoveKind::DescartesReplace, slot, -1},
            descartes_move3(t, slot, -1)};
}

TriDescent descend3(const CurvatureTriple& t) {
    validate_triple(t);
    TriDescent d;
    d.trace.push_back(t);
    CurvatureTriple cur = t;
    while (!is_base_triple(cur)) {
        TriStep step = descend_step3(cur);
        if (weight3(step.result) >= weight3(cur)) {
            throw NonTerminationError("descend3: weight failed to decrease off the base triple");
        }
        d.chain.push_back(step.move);
        d.trace.push_back(step.result);
        cur = step.result;
    }
    return d;
}

std::string to_string(const CurvatureTriple& t) {
    std::ostringstream os;
    os << "(" << t.v[0] << "," << t.v[1] << "," << t.v[2] << ")";
    return os.str();
}

}  // namespace apollo
