#include "terfold/json_io.hpp"

#include <algorithm>

namespace terfold {

json to_json(EPoint p) { return json::array({p.a, p.b}); }

EPoint epoint_from_json(const json& j) {
    return {j.at(0).get<int64_t>(), j.at(1).get<int64_t>()};
}

json to_json(const HexWindow& w) {
    return {{"center", to_json(w.center)}, {"radius", w.radius}};
}

HexWindow window_from_json(const json& j) {
    return {epoint_from_json(j.at("center")), j.at("radius").get<int64_t>()};
}

json foldseq_json(const FoldSeq& s, const std::string& lambda) {
    json j{{"signs", s.str()}, {"origin_index", s.origin_index}};
    if (!lambda.empty()) j["lambda"] = lambda;
    return j;
}

FoldSeq foldseq_from_json(const json& j) {
    return FoldSeq::parse(j.at("signs").get<std::string>(),
                          j.value("origin_index", (int64_t)1));
}

json to_json(const TCurve& c) {
    return {{"origin", to_json(c.origin)},
            {"dir", c.dir0},
            {"turns", c.turns.str()},
            {"scale_exp", c.scale_exp}};
}

TCurve tcurve_from_json(const json& j) {
    TCurve c;
    c.origin = epoint_from_json(j.at("origin"));
    c.dir0 = j.at("dir").get<int>();
    c.turns = FoldSeq::parse(j.at("turns").get<std::string>());
    c.scale_exp = j.value("scale_exp", 0);
    return c;
}

json to_json(const FrontierPath& p) {
    json verts = json::array();
    for (EPoint v : p.vertices) verts.push_back(to_json(v));
    std::string angles;
    for (int8_t a : p.angles) angles.push_back(a > 0 ? '+' : '-');
    return {{"side", std::string(1, p.side)},
            {"vertices", verts},
            {"angles", angles},
            {"split_index", p.split_index}};
}

json to_json(const FrontierLawReport& r) {
    return {{"pass", r.pass},
            {"counts_ok", r.counts_ok},
            {"intersection_ok", r.intersection_ok},
            {"anchors_ok", r.anchors_ok},
            {"sign_law_ok", r.sign_law_ok},
            {"membership_ok", r.membership_ok},
            {"first_failure", r.first_failure}};
}

json to_json(const ResidueScanResult& r) {
    json levels = json::array();
    for (const auto& lvl : r.levels)
        levels.push_back({{"k", lvl.k}, {"residues", lvl.residues}});
    return {{"levels", levels}, {"found_all", r.found_all}, {"nested", r.nested}};
}

json to_json(const std::vector<ResidueLevel>& levels) {
    json out = json::array();
    for (const auto& lvl : levels) {
        json cands = json::array();
        for (const auto& c : lvl.admissible)
            cands.push_back({{"h", c.h},
                             {"eps", (int)c.eps},
                             {"n_plus", c.n_plus},
                             {"n_minus", c.n_minus}});
        out.push_back({{"k", lvl.k},
                       {"constrained", lvl.constrained},
                       {"admissible", cands}});
    }
    return out;
}

json to_json(const ExtractResult& r) {
    return {{"lambda", r.lambda.str()},
            {"chain", r.chain},
            {"levels_determined", r.levels_determined},
            {"trace", to_json(r.trace)}};
}

json to_json(const ClassifyWindowResult& r) {
    const char* v = r.verdict == WindowCase::CaseA     ? "CaseA"
                    : r.verdict == WindowCase::CaseB   ? "CaseB"
                                                       : "Undetermined";
    json j{{"verdict", v}, {"note", r.note}};
    if (r.center) j["center"] = *r.center;
    if (!r.centers.empty()) j["centers"] = r.centers;
    return j;
}

json to_json(const ValidateReport& r) {
    json by_level = json::object();
    for (const auto& [lvl, n] : r.curves_by_level)
        by_level[std::to_string(lvl)] = n;
    return {{"covering_ok", r.covering_ok},
            {"property_P", r.property_P},
            {"parity", r.parity},
            {"links_ok", r.links_ok},
            {"edge_count", r.edge_count},
            {"curves_by_level", by_level},
            {"unresolved_by_level", r.unresolved_by_level},
            {"pass", r.pass()}};
}

json to_json(const LevelLatticeReport& r) {
    return {{"consistent", r.consistent},
            {"levels_checked", r.levels_checked},
            {"curves_checked", r.curves_checked},
            {"skipped_short", r.skipped_short},
            {"failure", r.failure}};
}

json to_json(const CaseTag& t) {
    return {{"case", t.name()}, {"lower_bound", t.lower_bound}, {"detail", t.detail}};
}

json to_json(const SymmetryReport& r) {
    return {{"rotation_checked", r.rotation_checked},
            {"rotation_ok", r.rotation_ok},
            {"central_checked", r.central_checked},
            {"central_ok", r.central_ok},
            {"segments_compared", r.segments_compared},
            {"links_compared", r.links_compared},
            {"note", r.note}};
}

json to_json(const LisoResult& r) {
    json j{{"scanned", r.scanned}};
    if (r.found)
        j["witness"] = to_json(r.witness);
    else
        j["witness"] = nullptr;
    return j;
}

json to_json(const LisoSelfReport& r) {
    return {{"samples", r.samples},
            {"successes", r.successes},
            {"all_ok", r.all_ok},
            {"seed", r.seed}};
}

static json edge_to_json(const EdgeKey& e) {
    return json::array({e.base.a, e.base.b, e.axis});
}

static EdgeKey edge_from_json(const json& j) {
    return {{j.at(0).get<int64_t>(), j.at(1).get<int64_t>()}, j.at(2).get<int>()};
}

json patch_to_json(const CoveringPatch& patch) {
    json j;
    j["format"] = "terfold-patch-v1";
    j["window"] = to_json(patch.window);
    j["level"] = patch.level;
    j["lambda"] = patch.lambda.str();
    j["orientation"] = patch.orientation == EField::E1 ? "E1" : "E2";
    json chain = json::array();
    for (EPoint p : patch.chain.points) chain.push_back(to_json(p));
    j["chain"] = chain;
    if (patch.star)
        j["star"] = {{"point", to_json(patch.star->first)},
                     {"mode", std::string(1, patch.star->second)}};
    if (patch.center2) j["center2"] = to_json(*patch.center2);
    j["unresolved_by_level"] = patch.unresolved_by_level;

    std::vector<EdgeKey> keys;
    keys.reserve(patch.segments.size());
    for (const auto& [e, s] : patch.segments) keys.push_back(e);
    std::sort(keys.begin(), keys.end());
    json segs = json::array();
    for (const EdgeKey& e : keys) {
        const Segment& s = patch.segments.at(e);
        json row{{"e", edge_to_json(e)}, {"dir", s.dir}, {"curve", s.curve_id}};
        if (s.prev) row["prev"] = edge_to_json(*s.prev);
        if (s.next) row["next"] = edge_to_json(*s.next);
        segs.push_back(std::move(row));
    }
    j["segments"] = std::move(segs);

    json curves = json::array();
    for (const auto& [id, c] : patch.curves) {
        curves.push_back({{"id", id},
                          {"start", to_json(c.start)},
                          {"end", to_json(c.end)},
                          {"first_edge", edge_to_json(c.first_edge)},
                          {"last_edge", edge_to_json(c.last_edge)},
                          {"first_dir", c.first_dir},
                          {"last_dir", c.last_dir},
                          {"nsegs", c.nsegs},
                          {"level", c.level}});
    }
    j["curves"] = std::move(curves);
    return j;
}

CoveringPatch patch_from_json(const json& j) {
    if (j.value("format", "") != std::string("terfold-patch-v1"))
        throw std::invalid_argument("not a terfold patch dump");
    CoveringPatch patch;
    patch.window = window_from_json(j.at("window"));
    patch.level = j.at("level").get<int>();
    patch.lambda = Lambda::parse(j.at("lambda").get<std::string>());
    patch.orientation =
        j.at("orientation").get<std::string>() == "E1" ? EField::E1 : EField::E2;
    for (const auto& p : j.at("chain")) patch.chain.points.push_back(epoint_from_json(p));
    if (j.contains("star"))
        patch.star = std::make_pair(epoint_from_json(j.at("star").at("point")),
                                    j.at("star").at("mode").get<std::string>().at(0));
    if (j.contains("center2")) patch.center2 = epoint_from_json(j.at("center2"));
    patch.unresolved_by_level =
        j.value("unresolved_by_level", std::vector<int64_t>{});

    for (const auto& row : j.at("segments")) {
        Segment s;
        s.dir = row.at("dir").get<int>();
        s.curve_id = row.at("curve").get<int32_t>();
        if (row.contains("prev")) s.prev = edge_from_json(row.at("prev"));
        if (row.contains("next")) s.next = edge_from_json(row.at("next"));
        patch.segments.emplace(edge_from_json(row.at("e")), s);
    }
    for (const auto& row : j.at("curves")) {
        CurveInfo c;
        c.id = row.at("id").get<int32_t>();
        c.start = epoint_from_json(row.at("start"));
        c.end = epoint_from_json(row.at("end"));
        c.first_edge = edge_from_json(row.at("first_edge"));
        c.last_edge = edge_from_json(row.at("last_edge"));
        c.first_dir = row.at("first_dir").get<int>();
        c.last_dir = row.at("last_dir").get<int>();
        c.nsegs = row.at("nsegs").get<int64_t>();
        c.level = row.at("level").get<int>();
        patch.curves.emplace(c.id, c);
    }
    return patch;
}

}  // namespace terfold
