#pragma once

// File formats and atomic writes. Everything emitted here is deterministic:
// fixed key order, canonical sorting, no timestamps.
//
//   field.json      { "e": int, "modulus": int, "alpha": int }
//   arc.json        { "q", "d", "nucleus": [3 ints], "points": [[3 ints]...] }
//   partition.json  { "q", "d", "nucleus", "subgroups": [[ints]], "arcs": [arc...] }
//   code_*.json     { "q", "length", "gen": [[ints]...] }
//   design_*.json   { "t", "v", "k", "lambda", "blocks": [[ints]...] }
//   wd_*.csv        weight,count rows sorted by weight

#include <filesystem>
#include <fstream>
#include <sstream>

#include "design.hpp"
#include "json.hpp"

namespace maxarc {

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_to_json(const Tower& t) {
    ordered_json j;
    j["e"] = t.field().degree();
    j["modulus"] = t.field().modulus();
    j["alpha"] = t.alpha();
    return j;
}

inline ordered_json triple_to_json(const std::array<fe, 3>& c) { return ordered_json::array({c[0], c[1], c[2]}); }

inline std::array<fe, 3> triple_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a coordinate triple");
    return {j[0].get<fe>(), j[1].get<fe>(), j[2].get<fe>()};
}

inline ordered_json arc_to_json(const Plane& pl, const MaximalArc& arc) {
    auto pts = arc.points;
    pl.sort_points(pts);
    ordered_json j;
    j["q"] = arc.q;
    j["d"] = arc.degree;
    j["nucleus"] = triple_to_json(arc.nucleus.c);
    auto& arr = j["points"] = ordered_json::array();
    for (const Point& p : pts) arr.push_back(triple_to_json(p.c));
    return j;
}

inline MaximalArc arc_from_json(const Plane& pl, const ordered_json& j) {
    MaximalArc arc;
    arc.q = j.at("q").get<std::uint64_t>();
    arc.degree = j.at("d").get<std::uint64_t>();
    if (arc.q != pl.q()) throw std::invalid_argument("arc file: q does not match the requested parameters");
    auto check_point = [&](const std::array<fe, 3>& c) {
        for (fe v : c)
            if (v >= pl.tower().field().size() || !pl.tower().gfq().contains(v))
                throw std::invalid_argument("arc file: coordinate outside GF(q)");
        return pl.normalize_point(c[0], c[1], c[2]);
    };
    arc.nucleus = check_point(triple_from_json(j.at("nucleus")));
    for (const auto& pj : j.at("points")) arc.points.push_back(check_point(triple_from_json(pj)));
    return arc;
}

inline ordered_json partition_to_json(const Plane& pl, const ArcPartition& part) {
    ordered_json j;
    j["q"] = part.q;
    j["d"] = part.degree;
    j["nucleus"] = triple_to_json(part.nucleus.c);
    auto& subs = j["subgroups"] = ordered_json::array();
    for (const auto& H : part.subgroups) subs.push_back(H);
    auto& arcs = j["arcs"] = ordered_json::array();
    for (const auto& a : part.arcs) arcs.push_back(arc_to_json(pl, a));
    return j;
}

inline ArcPartition partition_from_json(const Plane& pl, const ordered_json& j) {
    ArcPartition part;
    part.q = j.at("q").get<std::uint64_t>();
    part.degree = j.at("d").get<std::uint64_t>();
    if (part.q != pl.q()) throw std::invalid_argument("partition file: q does not match the requested parameters");
    part.nucleus = pl.normalize_point(j.at("nucleus")[0].get<fe>(), j.at("nucleus")[1].get<fe>(),
                                      j.at("nucleus")[2].get<fe>());
    for (const auto& hj : j.at("subgroups")) part.subgroups.push_back(hj.get<std::vector<fe>>());
    for (const auto& aj : j.at("arcs")) part.arcs.push_back(arc_from_json(pl, aj));
    return part;
}

inline ordered_json code_to_json(const LinearCode& c) {
    ordered_json j;
    j["q"] = c.q;
    j["length"] = c.length;
    auto& gen = j["gen"] = ordered_json::array();
    for (const auto& row : c.gen) gen.push_back(row);
    return j;
}

inline LinearCode code_from_json(const Tower& t, const ordered_json& j) {
    LinearCode c;
    c.tower = &t;
    c.q = j.at("q").get<std::uint64_t>();
    c.length = j.at("length").get<std::size_t>();
    if (c.q != t.q()) throw std::invalid_argument("code file: q does not match the requested parameters");
    for (const auto& rj : j.at("gen")) {
        auto row = rj.get<std::vector<fe>>();
        if (row.size() != c.length) throw std::invalid_argument("code file: row length mismatch");
        for (fe v : row)
            if (v >= t.field().size() || !t.gfq().contains(v))
                throw std::invalid_argument("code file: entry outside GF(q)");
        c.gen.push_back(std::move(row));
    }
    return c;
}

inline ordered_json design_to_json(const Design& dz, unsigned t, std::uint64_t lambda) {
    ordered_json j;
    j["t"] = t;
    j["v"] = dz.v;
    j["k"] = dz.k;
    j["lambda"] = lambda;
    auto& blocks = j["blocks"] = ordered_json::array();
    for (const auto& b : dz.blocks) blocks.push_back(b);
    return j;
}

inline std::string weight_dist_csv(const WeightDist& wd) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, cnt] : wd) os << w << "," << cnt.get_str() << "\n";
    return os.str();
}

inline void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << text;
    }
    std::filesystem::rename(tmp, path);
}

inline void write_json_atomic(const std::filesystem::path& path, const ordered_json& j) {
    write_text_atomic(path, j.dump(2) + "\n");
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline ordered_json read_json(const std::filesystem::path& path) {
    return ordered_json::parse(read_text(path));
}

}  // namespace maxarc
