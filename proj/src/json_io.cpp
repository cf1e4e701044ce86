#include "apollo/json_io.hpp"

#include <limits>

namespace apollo {

long long json_int(const Int& v) {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max()) {
        throw std::overflow_error("json_int: value exceeds 64 bits");
    }
    return v.convert_to<long long>();
}

json to_json(const DiskSymbol& d) {
    return json{{"xdot", json_int(d.xdot)},
                {"ydot", json_int(d.ydot)},
                {"curv", json_int(d.curv)},
                {"cocurv", json_int(d.cocurv)}};
}

DiskSymbol disk_from_json(const json& j) {
    return make_disk(Int(j.at("xdot").get<long long>()),
                     Int(j.at("ydot").get<long long>()),
                     Int(j.at("curv").get<long long>()),
                     Int(j.at("cocurv").get<long long>()));
}

json to_json(const Spinor& u) {
    return json::array({json_int(u.m), json_int(u.n)});
}

json to_json(const CurvatureTriple& t) {
    return json::array({json_int(t.v[0]), json_int(t.v[1]), json_int(t.v[2])});
}

json to_json(const DescartesQuadruple& v) {
    return json::array(
        {json_int(v.v[0]), json_int(v.v[1]), json_int(v.v[2]), json_int(v.v[3])});
}

json to_json(const GeoQuadruple& g) {
    json disks = json::array();
    for (const DiskSymbol& d : g.rows) {
        disks.push_back(to_json(d));
    }
    return json{{"disks", disks}};
}

json to_json(const QuadMove& mv) {
    return json{{"kind", mv.kind == QuadMoveKind::M ? "M" : "N"}, {"slot", mv.slot}};
}

json to_json(const MoveChain& chain) {
    json out = json::array();
    for (const QuadMove& mv : chain) {
        out.push_back(to_json(mv));
    }
    return out;
}

json to_json(const Packing& p) {
    json root = json::array();
    for (const DiskSymbol& d : p.root.rows) {
        root.push_back(to_json(d));
    }
    json disks = json::array();
    for (const DiskSymbol& d : p.disks) {
        disks.push_back(to_json(d));
    }
    json tangencies = json::array();
    for (const TangencyEdge& e : p.tangencies) {
        tangencies.push_back(json{{"a", e.a}, {"b", e.b}, {"spinor", to_json(e.spinor)}});
    }
    return json{{"root", root},
                {"bound", json_int(p.bound)},
                {"disks", disks},
                {"tangencies", tangencies}};
}

DescartesQuadruple quad_from_json(const json& j) {
    const json& arr = j.is_object() ? j.at("quad") : j;
    if (!arr.is_array() || arr.size() != 4) {
        throw std::invalid_argument("quad_from_json: expected an array of four integers");
    }
    DescartesQuadruple v;
    for (size_t i = 0; i < 4; ++i) {
        v.v[i] = Int(arr[i].get<long long>());
    }
    return v;
}

}  // namespace apollo
