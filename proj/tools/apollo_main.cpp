// Command-line front door: descent traces, hyper-integral placement,
// Apollonian completion with JSON/SVG output, root atlas and thread listings,
// and reflection-group diagnostics.
//
// Exit codes: 0 success, 1 invalid input (the message names the violated
// condition), 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apollo/groups.hpp"
#include "apollo/json_io.hpp"
#include "apollo/packing.hpp"
#include "apollo/render.hpp"
#include "apollo/threads.hpp"

namespace {

using namespace apollo;

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty()) {
            throw std::invalid_argument("empty entry in integer list '" + text + "'");
        }
        out.emplace_back(item);
    }
    return out;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(Int(text));
    }
    Int den(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return make_rat(Int(text.substr(0, slash)), den);
}

CurvatureTriple parse_triple(const std::string& text) {
    auto xs = parse_int_list(text);
    if (xs.size() != 3) {
        throw std::invalid_argument("expected three comma-separated integers");
    }
    return {{xs[0], xs[1], xs[2]}};
}

DescartesQuadruple parse_quad(const std::string& text) {
    auto xs = parse_int_list(text);
    if (xs.size() != 4) {
        throw std::invalid_argument("expected four comma-separated integers");
    }
    return {{xs[0], xs[1], xs[2], xs[3]}};
}

RatRect parse_region(const std::string& text) {
    std::vector<Rat> xs;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        xs.push_back(parse_rat(item));
    }
    if (xs.size() != 4) {
        throw std::invalid_argument("region wants x0,y0,x1,y1");
    }
    RatRect r{xs[0], xs[1], xs[2], xs[3]};
    if (!r.valid()) {
        throw std::invalid_argument("region corners are not ordered");
    }
    return r;
}

std::string move_letter(const TriMove& mv) {
    return mv.kind == TriMoveKind::SelfInvert ? "S" : "D";
}

int cmd_descend_triple(const CurvatureTriple& t, bool as_json) {
    TriDescent d = descend3(t);
    if (as_json) {
        json moves = json::array();
        for (const TriMove& mv : d.chain) {
            json m{{"kind", move_letter(mv)}, {"slot", mv.slot}};
            if (mv.kind == TriMoveKind::DescartesReplace) {
                m["sign"] = mv.sign;
            }
            moves.push_back(m);
        }
        json trace = json::array(), sorted = json::array();
        for (const CurvatureTriple& x : d.trace) {
            trace.push_back(to_json(x));
            sorted.push_back(to_json(x.sorted()));
        }
        std::cout << json{{"trace", trace}, {"sorted_trace", sorted}, {"moves", moves}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    for (size_t i = 0; i < d.trace.size(); ++i) {
        std::cout << to_string(d.trace[i]) << "  sorted "
                  << to_string(d.trace[i].sorted());
        if (i < d.chain.size()) {
            std::cout << "  -> " << move_letter(d.chain[i]) << "@" << d.chain[i].slot;
        }
        std::cout << "\n";
    }
    std::cout << "moves:";
    for (const TriMove& mv : d.chain) {
        std::cout << " " << move_letter(mv);
    }
    std::cout << "\n";
    return 0;
}

int cmd_descend_quad(const DescartesQuadruple& v, bool as_json) {
    QuadDescent d = descend4(v);
    if (as_json) {
        json trace = json::array(), sorted = json::array();
        for (const DescartesQuadruple& x : d.trace) {
            trace.push_back(to_json(x));
            sorted.push_back(to_json(x.sorted()));
        }
        std::cout << json{{"trace", trace},
                          {"sorted_trace", sorted},
                          {"chain", to_json(d.chain)},
                          {"final", to_json(d.final)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    for (size_t i = 0; i < d.trace.size(); ++i) {
        std::cout << to_string(d.trace[i]) << "  sorted "
                  << to_string(d.trace[i].sorted());
        if (i < d.chain.size()) {
            std::cout << "  -> " << to_string(d.chain[i]);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_geometrize(const DescartesQuadruple& v, bool as_json) {
    GeoQuadruple g = geometrize(v);
    if (as_json) {
        std::cout << to_json(g).dump(2) << "\n";
        return 0;
    }
    std::cout << "xdot ydot curv cocurv\n";
    for (const DiskSymbol& d : g.rows) {
        std::cout << d.xdot << " " << d.ydot << " " << d.curv << " " << d.cocurv << "\n";
    }
    return 0;
}

RatRect default_viewport(const Packing& p) {
    bool first = true;
    RatRect box{0, 0, 0, 0};
    for (const DiskSymbol& d : p.disks) {
        if (d.curv == 0) {
            continue;
        }
        Rat cx = make_rat(d.xdot, d.curv);
        Rat cy = make_rat(d.ydot, d.curv);
        Rat r = boost::multiprecision::abs(make_rat(1, d.curv));
        RatRect b{cx - r, cy - r, cx + r, cy + r};
        if (first) {
            box = b;
            first = false;
        } else {
            box.x0 = std::min(box.x0, b.x0);
            box.y0 = std::min(box.y0, b.y0);
            box.x1 = std::max(box.x1, b.x1);
            box.y1 = std::max(box.y1, b.y1);
        }
    }
    if (first) {
        return {-1, -1, 1, 1};
    }
    Rat margin = (box.x1 - box.x0) / 50;
    return {box.x0 - margin, box.y0 - margin, box.x1 + margin, box.y1 + margin};
}

int cmd_complete(const DescartesQuadruple& v, const Int& max_curv,
                 const std::optional<RatRect>& region, const std::string& out_file,
                 const std::optional<RatRect>& viewport, long width, bool spinors,
                 bool as_json) {
    GeoQuadruple g = geometrize(v);
    Packing p = complete(g, max_curv, region);
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file " + out_file);
        }
        if (out_file.size() >= 4 && out_file.substr(out_file.size() - 4) == ".svg") {
            RenderOptions opts;
            opts.viewport = viewport ? *viewport
                                     : (region ? *region : default_viewport(p));
            opts.pixel_width = width;
            opts.draw_spinors = spinors;
            out << to_svg(p, opts);
        } else {
            out << to_json(p).dump(2) << "\n";
        }
    }
    if (as_json) {
        std::cout << to_json(p).dump(2) << "\n";
    } else {
        std::cout << "disks: " << p.disks.size()
                  << "  tangencies: " << p.tangencies.size()
                  << "  configurations: " << p.visited_quads.size() << "\n";
    }
    return 0;
}

int cmd_verify(const DescartesQuadruple& v, const Int& max_curv,
               const std::optional<RatRect>& region, bool as_json) {
    GeoQuadruple g = geometrize(v);
    VerificationReport geo = verify_geo(g);
    Packing p = complete(g, max_curv, region);
    VerificationReport pack = verify_packing(p);
    bool ok = geo.all_ok() && pack.all_ok();
    if (as_json) {
        json checks = json::array();
        for (const auto* rep : {&geo, &pack}) {
            for (const CheckResult& c : rep->checks) {
                checks.push_back(json{{"name", c.name}, {"ok", c.ok}});
            }
        }
        std::cout << json{{"ok", ok}, {"checks", checks}}.dump(2) << "\n";
    } else {
        for (const auto* rep : {&geo, &pack}) {
            for (const CheckResult& c : rep->checks) {
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            }
        }
        std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_atlas(const Int& max_outer, bool as_json) {
    auto atlas = root_atlas(max_outer);
    if (as_json) {
        json out = json::array();
        for (const RootQuadruple& r : atlas) {
            out.push_back(to_json(r.quad));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const RootQuadruple& r : atlas) {
        std::cout << to_string(r.quad) << "\n";
    }
    std::cout << atlas.size() << " root quadruples\n";
    return 0;
}

void print_thread_line(long n, const ThreadTriple& t, bool as_json, json* arr) {
    bool proper = is_proper(t.triple);
    if (as_json) {
        json entry{{"n", n},
                   {"triple", to_json(t.triple)},
                   {"fourth", json::array({json_int(t.fourth.first),
                                           json_int(t.fourth.second)})},
                   {"proper", proper}};
        arr->push_back(entry);
    } else {
        std::cout << n << "  " << to_string(t.triple) << "  fourth " << t.fourth.first
                  << "," << t.fourth.second << "  " << (proper ? "proper" : "IMPROPER")
                  << "\n";
    }
}

int cmd_threads(const std::string& family, long from, long to, bool as_json) {
    ThreadFamily f = parse_family(family);
    json arr = json::array();
    for (long n = from; n <= to; ++n) {
        print_thread_line(n, thread_triple(f, n), as_json, &arr);
    }
    if (as_json) {
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_fib(long from, long to, bool as_json) {
    json arr = json::array();
    for (long n = from; n <= to; ++n) {
        ThreadTriple t = fibonacci_triple(n);
        FibonacciPoint pt = fibonacci_tangency_point(n);
        if (as_json) {
            json entry{{"n", n},
                       {"triple", to_json(t.triple)},
                       {"fourth", json::array({json_int(t.fourth.first),
                                               json_int(t.fourth.second)})},
                       {"proper", is_proper(t.triple)},
                       {"point", json::array({pt.p.x.str(), pt.p.y.str()})},
                       {"on_circle", pt.on_circle}};
            arr.push_back(entry);
        } else {
            std::cout << n << "  " << to_string(t.triple) << "  fourth "
                      << t.fourth.first << "," << t.fourth.second << "  "
                      << (is_proper(t.triple) ? "proper" : "IMPROPER") << "  P=("
                      << pt.p.x << "," << pt.p.y << ") "
                      << (pt.on_circle ? "on circle" : "OFF CIRCLE") << "\n";
        }
    }
    if (as_json) {
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_group(long dim, const std::string& family, long depth, bool as_json) {
    if (dim < 2) {
        throw std::invalid_argument("dimension must be at least 2");
    }
    GroupFamily f;
    if (family == "kal") {
        f = GroupFamily::Kal;
    } else if (family == "apo") {
        f = GroupFamily::Apo;
    } else if (family == "des") {
        f = GroupFamily::Des;
    } else {
        throw std::invalid_argument("unknown group family '" + family + "'");
    }
    PropertyReport rep = check_generator_properties(static_cast<size_t>(dim));
    auto spheres = cayley_sphere_sizes({static_cast<size_t>(dim), f},
                                       static_cast<size_t>(depth));
    if (as_json) {
        std::cout << json{{"dim", dim},
                          {"family", family},
                          {"spheres", spheres},
                          {"properties",
                           json{{"involutions", rep.involutions},
                                {"orthogonal", rep.orthogonal},
                                {"det_minus_one", rep.determinant_minus_one},
                                {"cross_commutation", rep.cross_commutation},
                                {"transpose_duality", rep.transpose_duality},
                                {"apo_checked", rep.apo_checked}}}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "involutions: " << (rep.involutions ? "ok" : "FAIL") << "\n";
    std::cout << "orthogonality X^T G X = G: " << (rep.orthogonal ? "ok" : "FAIL")
              << "\n";
    std::cout << "determinant -1: " << (rep.determinant_minus_one ? "ok" : "FAIL")
              << "\n";
    if (rep.apo_checked) {
        std::cout << "cross-commutation [M_i,N_j] = 0 (i != j): "
                  << (rep.cross_commutation ? "ok" : "FAIL") << "\n";
        std::cout << "transpose duality N_i = M_i^T: "
                  << (rep.transpose_duality ? "holds" : "does not hold") << "\n";
    } else {
        std::cout << "Descartes-move generators undefined at dimension 3\n";
    }
    std::cout << "sphere sizes:";
    for (size_t s : spheres) {
        std::cout << " " << s;
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for integral Descartes configurations and "
                 "Apollonian packings"};
    app.require_subcommand(1);

    std::string triple_arg, quad_arg, region_arg, out_arg, viewport_arg, family_arg;
    std::string max_curv_arg, max_outer_arg;
    bool json_flag = false, spinors_flag = false;
    long from_arg = 1, to_arg = 10, depth_arg = 3, dim_arg = 4, width_arg = 800;

    auto* descend = app.add_subcommand("descend", "Descend a triple or quadruple to its base");
    descend->add_option("--triple", triple_arg, "a,b,c");
    descend->add_option("--quad", quad_arg, "a,b,c,d");
    descend->add_flag("--json", json_flag);

    auto* geometrize_cmd = app.add_subcommand("geometrize", "Place a quadruple with integral symbols and spinors");
    geometrize_cmd->add_option("--quad", quad_arg, "a,b,c,d")->required();
    geometrize_cmd->add_flag("--json", json_flag);

    auto* complete_cmd = app.add_subcommand("complete", "Apollonian completion under a curvature bound");
    complete_cmd->add_option("--quad", quad_arg, "a,b,c,d")->required();
    complete_cmd->add_option("--max-curv", max_curv_arg, "curvature bound")->required();
    complete_cmd->add_option("--region", region_arg, "x0,y0,x1,y1");
    complete_cmd->add_option("--out", out_arg, "output file (.json or .svg)");
    complete_cmd->add_option("--viewport", viewport_arg, "x0,y0,x1,y1 for SVG output");
    complete_cmd->add_option("--width", width_arg, "SVG pixel width");
    complete_cmd->add_flag("--spinors", spinors_flag, "draw spinor arrows in SVG");
    complete_cmd->add_flag("--json", json_flag);

    auto* verify_cmd = app.add_subcommand("verify", "Geometrize, complete and verify every invariant");
    verify_cmd->add_option("--quad", quad_arg, "a,b,c,d")->required();
    verify_cmd->add_option("--max-curv", max_curv_arg, "curvature bound")->required();
    verify_cmd->add_option("--region", region_arg, "x0,y0,x1,y1");
    verify_cmd->add_flag("--json", json_flag);

    auto* atlas_cmd = app.add_subcommand("atlas", "Root quadruples with outer curvature down to -N");
    atlas_cmd->add_option("--max-outer", max_outer_arg, "outer curvature bound")->required();
    atlas_cmd->add_flag("--json", json_flag);

    auto* threads_cmd = app.add_subcommand("threads", "Evaluate a thread family");
    threads_cmd->add_option("--family", family_arg, "A..G")->required();
    threads_cmd->add_option("--from", from_arg, "first index");
    threads_cmd->add_option("--to", to_arg, "last index");
    threads_cmd->add_flag("--json", json_flag);

    auto* fib_cmd = app.add_subcommand("fib", "Fibonacci thread and tangency points");
    fib_cmd->add_option("--from", from_arg, "first index");
    fib_cmd->add_option("--to", to_arg, "last index");
    fib_cmd->add_flag("--json", json_flag);

    auto* group_cmd = app.add_subcommand("group", "Generator properties and Cayley sphere sizes");
    group_cmd->add_option("--dim", dim_arg, "matrix dimension m")->required();
    group_cmd->add_option("--family", family_arg, "kal|apo|des")->required();
    group_cmd->add_option("--depth", depth_arg, "Cayley ball radius");
    group_cmd->add_flag("--json", json_flag);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<RatRect> region;
        if (!region_arg.empty()) {
            region = parse_region(region_arg);
        }
        std::optional<RatRect> viewport;
        if (!viewport_arg.empty()) {
            viewport = parse_region(viewport_arg);
        }
        if (descend->parsed()) {
            if (!triple_arg.empty() == !quad_arg.empty()) {
                throw std::invalid_argument("descend wants exactly one of --triple / --quad");
            }
            return triple_arg.empty() ? cmd_descend_quad(parse_quad(quad_arg), json_flag)
                                      : cmd_descend_triple(parse_triple(triple_arg), json_flag);
        }
        if (geometrize_cmd->parsed()) {
            return cmd_geometrize(parse_quad(quad_arg), json_flag);
        }
        if (complete_cmd->parsed()) {
            return cmd_complete(parse_quad(quad_arg), Int(max_curv_arg), region, out_arg,
                                viewport, width_arg, spinors_flag, json_flag);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(parse_quad(quad_arg), Int(max_curv_arg), region, json_flag);
        }
        if (atlas_cmd->parsed()) {
            return cmd_atlas(Int(max_outer_arg), json_flag);
        }
        if (threads_cmd->parsed()) {
            return cmd_threads(family_arg, from_arg, to_arg, json_flag);
        }
        if (fib_cmd->parsed()) {
            return cmd_fib(from_arg, to_arg, json_flag);
        }
        if (group_cmd->parsed()) {
            return cmd_group(dim_arg, family_arg, depth_arg, json_flag);
        }
    } catch (const VerificationFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
