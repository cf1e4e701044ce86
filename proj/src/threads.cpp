#include "apollo/threads.hpp"

#include <algorithm>

namespace apollo {

std::vector<RootQuadruple> root_atlas(const Int& max_outer) {
    if (max_outer < 0) {
        throw std::invalid_argument("root_atlas: max_outer must be non-negative");
    }
    std::vector<RootQuadruple> out;
    out.push_back({DescartesQuadruple{{0, 0, 1, 1}}});
    for (Int a = -1; a >= -max_outer; --a) {
        Int bound = a * a - a;  // family-A extreme (-n, n+1, n^2+n)
        for (Int b = -a; b <= bound; ++b) {
            for (Int c = b; c <= bound; ++c) {
                Int q = a * b + b * c + c * a;
                if (q < 0) {
                    continue;
                }
                auto r = perfect_square(q);
                if (!r) {
                    continue;
                }
                Int d = a + b + c - 2 * *r;  // smaller completion
                if (d < c) {
                    continue;  // (a,b,c) would not be the minimal three
                }
                DescartesQuadruple quad{{a, b, c, d}};
                if (gcd_all({a, b, c, d}) != 1 || weight4(quad) <= 1) {
                    continue;
                }
                descend4(quad);  // termination cross-check; throws if not in the set
                out.push_back({quad});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootQuadruple reduce_to_root(const DescartesQuadruple& v) {
    validate_quadruple(v);
    DescartesQuadruple cur = v;
    while (true) {
        size_t imax = 0;
        for (size_t i = 1; i < 4; ++i) {
            if (cur.v[i] > cur.v[imax]) {
                imax = i;
            }
        }
        DescartesQuadruple next =
            apply_move(cur, QuadMove{QuadMoveKind::M, static_cast<int>(imax) + 1});
        if (weight4(next) >= weight4(cur)) {
            break;
        }
        cur = next;
    }
    return {cur.sorted()};
}

size_t DescentDigraph::index_of(const CurvatureTriple& sorted_triple) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), sorted_triple,
                               [](const CurvatureTriple& a, const CurvatureTriple& b) {
                                   return a.v < b.v;
                               });
    if (it == vertices.end() || !(*it == sorted_triple)) {
        throw std::out_of_range("DescentDigraph: triple is not a vertex");
    }
    return static_cast<size_t>(it - vertices.begin());
}

DescentDigraph principal_descent_digraph(const Int& max_outer) {
    std::vector<RootQuadruple> atlas = root_atlas(max_outer);

    std::set<std::array<Int, 3>> vertex_set;
    std::set<std::array<Int, 3>> principal_set;
    std::set<std::tuple<std::array<Int, 3>, std::array<Int, 3>, TriMoveKind>> edge_set;

    for (const RootQuadruple& root : atlas) {
        CurvatureTriple start = root.principal();
        principal_set.insert(start.sorted().v);
        TriDescent d = descend3(start);
        for (size_t i = 0; i < d.trace.size(); ++i) {
            vertex_set.insert(d.trace[i].sorted().v);
            if (i + 1 < d.trace.size()) {
                edge_set.insert({d.trace[i].sorted().v, d.trace[i + 1].sorted().v,
                                 d.chain[i].kind});
            }
        }
    }

    DescentDigraph g;
    for (const auto& v : vertex_set) {
        g.vertices.push_back(CurvatureTriple{v});
    }
    for (const auto& [from, to, kind] : edge_set) {
        g.edges.push_back({g.index_of(CurvatureTriple{from}),
                           g.index_of(CurvatureTriple{to}), kind});
    }
    for (const auto& p : principal_set) {
        g.principal.insert(g.index_of(CurvatureTriple{p}));
    }
    return g;
}

ThreadFamily parse_family(const std::string& s) {
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'G') {
        return static_cast<ThreadFamily>(s[0] - 'A');
    }
    throw UnknownFamilyError("unknown thread family: " + s);
}

std::string to_string(ThreadFamily f) {
    return std::string(1, static_cast<char>('A' + static_cast<int>(f)));
}

namespace {

ThreadTriple finish(CurvatureTriple t, Int dminus, Int dplus) {
    auto completions = descartes_completions(t);
    if (completions != std::make_pair(dminus, dplus)) {
        throw std::logic_error("thread_triple: family fourth-disk formula mismatch");
    }
    return {std::move(t), std::move(completions)};
}

}  // namespace

ThreadTriple thread_triple(ThreadFamily f, long n) {
    if (n < 1) {
        throw std::invalid_argument("thread_triple: index must be at least 1");
    }
    Int k = n;
    switch (f) {
        case ThreadFamily::A:
            return finish({{-k, k + 1, k * (k + 1)}}, k * k + k + 1, k * k + k + 1);
        case ThreadFamily::B:
            return finish({{-(2 * k - 1), 2 * k + 1, 2 * k * k}}, 2 * k * k,
                          2 * k * k + 4);
        case ThreadFamily::C:
            return finish({{-(5 * k - 3), 5 * k + 2, 5 * k * k - k - 1}},
                          5 * k * k - k + 2, 5 * k * k - k + 6);
        case ThreadFamily::D:
            return finish({{-4 * k, 4 * k + 4, (2 * k + 1) * (2 * k + 1)}},
                          (2 * k + 1) * (2 * k + 1), (2 * k + 1) * (2 * k + 1) + 8);
        case ThreadFamily::E:
            return finish({{-(5 * k - 4), 5 * k + 1, (5 * k - 3) * k}},
                          5 * k * k - 3 * k + 1, 5 * k * k - 3 * k + 9);
        case ThreadFamily::F:
            return fibonacci_triple(n);
        case ThreadFamily::G:
            return finish({{-(4 * k - 2), 4 * k + 2, 4 * k * k - 1}}, 4 * k * k + 3,
                          4 * k * k + 3);
    }
    throw UnknownFamilyError("thread_triple: unknown family");
}

ThreadTriple fibonacci_triple(long n) {
    if (n < 1) {
        throw std::invalid_argument("fibonacci_triple: index must be at least 1");
    }
    CurvatureTriple t{{-fibonacci(2 * n), fibonacci(2 * n + 1), fibonacci(2 * n + 2)}};
    Int mid = 2 * fibonacci(2 * n + 1);
    return finish(std::move(t), mid - 2, mid + 2);
}

FibonacciPoint fibonacci_tangency_point(long n) {
    if (n < 1) {
        throw std::invalid_argument("fibonacci_tangency_point: index must be at least 1");
    }
    Int fm = fibonacci(n - 1);
    Int fn = fibonacci(n);
    Int den = fibonacci(2 * n + 1);
    RatPoint p{make_rat(-fm * fm, den), make_rat(2 * fn * fn, den)};
    Rat dx = p.x + 1;
    Rat dy = p.y - 1;
    return {p, dx * dx + dy * dy == 1};
}

}  // namespace apollo
