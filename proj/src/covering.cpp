#include "terfold/covering.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace terfold {

bool XChain::valid() const {
    if (points.empty()) return false;
    for (size_t k = 0; k + 1 < points.size(); ++k)
        if (!divisible_by_theta_pow(points[k + 1] - points[k], (int)k)) return false;
    return true;
}

bool XChain::constant() const {
    for (size_t k = 1; k < points.size(); ++k)
        if (points[k] != points[0]) return false;
    return !points.empty();
}

XChain XChain::constant_at(EPoint x, int level) {
    XChain c;
    c.points.assign((size_t)level + 1, x);
    return c;
}

XChain XChain::parse(const std::string& s) {
    XChain c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        size_t comma = item.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("chain entries must be 'a,b'");
        c.points.push_back(EPoint{std::stoll(item.substr(0, comma)),
                                  std::stoll(item.substr(comma + 1))});
    }
    return c;
}

std::string XChain::str() const {
    std::string out;
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(points[i].a) + "," + std::to_string(points[i].b);
    }
    return out;
}

static RootThree level_diameter_bound(int level) {
    return level == 0 ? RootThree{1, 0} : rho(level);
}

int64_t CoveringPatch::margin() const {
    return hex_margin(level_diameter_bound(level));
}

EPoint CoveringPatch::seg_tail(const EdgeKey& e) const {
    const Segment& s = segments.at(e);
    return s.dir < 3 ? e.base : e.base + dir_unit(e.axis);
}

std::vector<OrientedEdge> CoveringPatch::walk(int32_t curve_id) const {
    const CurveInfo& c = curves.at(curve_id);
    std::vector<OrientedEdge> out;
    out.reserve((size_t)c.nsegs);
    EdgeKey cur = c.first_edge;
    for (int64_t i = 0; i < c.nsegs; ++i) {
        const Segment& s = segments.at(cur);
        out.push_back({seg_tail(cur), s.dir});
        if (i + 1 < c.nsegs) cur = s.next.value();
    }
    return out;
}

std::vector<EPoint> CoveringPatch::curve_vertices(int32_t curve_id) const {
    auto w = walk(curve_id);
    std::vector<EPoint> vs;
    vs.reserve(w.size() + 1);
    for (const auto& e : w) vs.push_back(e.tail);
    vs.push_back(w.back().head());
    return vs;
}

FoldSeq CoveringPatch::curve_turns(int32_t curve_id) const {
    auto w = walk(curve_id);
    FoldSeq out;
    out.origin_index = 1;
    out.signs.reserve(w.size() - 1);
    for (size_t i = 1; i < w.size(); ++i) {
        int t = ((w[i].dir - w[i - 1].dir) % 6 + 6) % 6;
        if (t == 2)
            out.signs.push_back(+1);
        else if (t == 4)
            out.signs.push_back(-1);
        else
            throw std::logic_error("curve walk has a non +-2 turn");
    }
    return out;
}

namespace {

struct StartIndex {
    std::unordered_map<EPoint, std::vector<int32_t>, EPointHash> map;

    void add(EPoint p, int32_t id) { map[p].push_back(id); }
    void remove(EPoint p, int32_t id) {
        auto it = map.find(p);
        if (it == map.end()) return;
        auto& v = it->second;
        v.erase(std::remove(v.begin(), v.end(), id), v.end());
    }
};

}  // namespace

CoveringPatch build_patch(const Lambda& lambda, const XChain& chain,
                          EField orientation, HexWindow window) {
    const int N = (int)lambda.size();
    if ((int)chain.points.size() != N + 1)
        throw BadChain("chain must have level+1 entries");
    if (!chain.valid()) throw BadChain("chain violates x_{k+1} in V_k(x_k)");
    if (window.radius < 3) throw WindowTooSmall("window radius must be >= 3");

    CoveringPatch patch;
    patch.window = window;
    patch.level = N;
    patch.lambda = lambda;
    patch.orientation = orientation;
    patch.chain = chain;
    patch.unresolved_by_level.assign((size_t)N + 1, 0);
    if (patch.guaranteed_radius() < 1)
        throw WindowTooSmall("margin for this level consumes the window");

    StartIndex starts;
    int32_t next_id = 0;
    window.for_each_edge([&](EdgeKey e) {
        OrientedEdge oe = orient_edge(e, orientation);
        const int32_t id = next_id++;
        patch.segments.emplace(e, Segment{oe.dir, id, std::nullopt, std::nullopt});
        patch.curves.emplace(
            id, CurveInfo{id, oe.tail, oe.head(), e, e, oe.dir, oe.dir, 1, 0});
        starts.add(oe.tail, id);
    });

    for (int k = 1; k <= N; ++k) {
        const int8_t lam = lambda.at1((size_t)k);
        const EPoint base = chain.points[(size_t)k];
        const EPoint th = theta_pow(k);
        const double reach =
            ((double)window.radius +
             std::sqrt((double)(base - window.center).norm_sq())) /
            std::pow(std::sqrt(3.0), k);
        const int64_t bound = (int64_t)std::ceil(1.16 * reach) + 2;

        // Find the successor curve of `c` under the junction rotation `rot`.
        auto successor = [&](const CurveInfo& c, int rot) -> CurveInfo* {
            const Dir6 want = rotate(c.last_dir, rot);
            auto it = starts.map.find(c.end);
            if (it == starts.map.end()) return nullptr;
            for (int32_t id : it->second) {
                CurveInfo& cand = patch.curves.at(id);
                if (cand.level == k - 1 && cand.first_dir == want) return &cand;
            }
            return nullptr;
        };

        for (int64_t i = -bound; i <= bound; ++i) {
            for (int64_t j = -bound; j <= bound; ++j) {
                const EPoint y = base + th * EPoint{i, j};
                if (!window.contains(y)) continue;
                auto it = starts.map.find(y);
                if (it == starts.map.end()) continue;
                std::vector<int32_t> ids = it->second;
                std::sort(ids.begin(), ids.end());
                for (int32_t aid : ids) {
                    CurveInfo& A = patch.curves.at(aid);
                    if (A.level != k - 1) continue;
                    CurveInfo* B = successor(A, lam > 0 ? 2 : -2);
                    CurveInfo* C = B ? successor(*B, lam > 0 ? -2 : 2) : nullptr;
                    if (!B || !C) {
                        ++patch.unresolved_by_level[(size_t)k];
                        continue;
                    }
                    assert(C->id != A.id && B->id != A.id && C->id != B->id);
                    // Relabel B and C before rewiring.
                    for (CurveInfo* part : {B, C}) {
                        EdgeKey cur = part->first_edge;
                        for (int64_t s = 0; s < part->nsegs; ++s) {
                            Segment& seg = patch.segments.at(cur);
                            seg.curve_id = A.id;
                            if (s + 1 < part->nsegs) cur = seg.next.value();
                        }
                    }
                    patch.segments.at(A.last_edge).next = B->first_edge;
                    patch.segments.at(B->first_edge).prev = A.last_edge;
                    patch.segments.at(B->last_edge).next = C->first_edge;
                    patch.segments.at(C->first_edge).prev = B->last_edge;
                    A.end = C->end;
                    A.last_edge = C->last_edge;
                    A.last_dir = C->last_dir;
                    A.nsegs += B->nsegs + C->nsegs;
                    A.level = k;
                    starts.remove(B->start, B->id);
                    starts.remove(C->start, C->id);
                    patch.curves.erase(B->id);
                    patch.curves.erase(C->id);
                }
            }
        }
    }
    return patch;
}

void star_connect(CoveringPatch& patch, char mode) {
    if (mode != '+' && mode != '-')
        throw std::invalid_argument("star mode must be '+' or '-'");
    if (!patch.chain.constant())
        throw NoStarPoint("chain is not constant for all stored entries");
    const EPoint x = patch.chain.points.front();
    std::vector<int32_t> ins, outs;
    for (const auto& [id, c] : patch.curves) {
        if (c.level != patch.level) continue;
        if (c.end == x) ins.push_back(id);
        if (c.start == x) outs.push_back(id);
    }
    if (ins.size() != 3 || outs.size() != 3)
        throw NoStarPoint("star point does not carry 3 incoming and 3 outgoing ends");
    for (int32_t in_id : ins) {
        CurveInfo& in = patch.curves.at(in_id);
        const Dir6 want = rotate(in.last_dir, mode == '+' ? 2 : -2);
        int32_t out_id = -1;
        for (int32_t id : outs) {
            if (patch.curves.count(id) && patch.curves.at(id).first_dir == want)
                out_id = id;
        }
        if (out_id < 0) throw NoStarPoint("no outgoing end matches the pairing rule");
        CurveInfo& out = patch.curves.at(out_id);
        EdgeKey cur = out.first_edge;
        for (int64_t s = 0; s < out.nsegs; ++s) {
            Segment& seg = patch.segments.at(cur);
            seg.curve_id = in.id;
            if (s + 1 < out.nsegs) cur = seg.next.value();
        }
        patch.segments.at(in.last_edge).next = out.first_edge;
        patch.segments.at(out.first_edge).prev = in.last_edge;
        in.end = out.end;
        in.last_edge = out.last_edge;
        in.last_dir = out.last_dir;
        in.nsegs += out.nsegs;
        patch.curves.erase(out_id);
    }
    patch.star = std::make_pair(x, mode);
}

ValidateReport validate(const CoveringPatch& patch) {
    ValidateReport rep;
    rep.unresolved_by_level = patch.unresolved_by_level;
    rep.edge_count = (int64_t)patch.segments.size();

    // Every window side present exactly once (map keys are unique).
    int64_t missing = 0, expected = 0;
    patch.window.for_each_edge([&](EdgeKey e) {
        ++expected;
        if (!patch.segments.count(e)) ++missing;
    });
    rep.covering_ok = missing == 0 && expected == rep.edge_count;

    rep.property_P = true;
    rep.parity = -1;
    for (const auto& [e, s] : patch.segments) {
        const int par = s.dir % 2;
        if (rep.parity < 0) rep.parity = par;
        if (par != rep.parity) rep.property_P = false;
    }

    rep.links_ok = true;
    for (const auto& [e, s] : patch.segments) {
        if (!s.next) continue;
        auto it = patch.segments.find(*s.next);
        if (it == patch.segments.end()) {
            rep.links_ok = false;
            continue;
        }
        const Segment& nxt = it->second;
        if (!nxt.prev || !(*nxt.prev == e)) rep.links_ok = false;
        OrientedEdge cur_o{patch.seg_tail(e), s.dir};
        if (cur_o.head() != patch.seg_tail(*s.next)) rep.links_ok = false;
        const int t = ((nxt.dir - s.dir) % 6 + 6) % 6;
        if (t != 2 && t != 4) rep.links_ok = false;
    }
    for (const auto& [id, c] : patch.curves) {
        rep.curves_by_level[c.level] += 1;
        EdgeKey cur = c.first_edge;
        for (int64_t s = 0; s < c.nsegs; ++s) {
            auto it = patch.segments.find(cur);
            if (it == patch.segments.end() || it->second.curve_id != id) {
                rep.links_ok = false;
                break;
            }
            if (s + 1 < c.nsegs) {
                if (!it->second.next) {
                    rep.links_ok = false;
                    break;
                }
                cur = *it->second.next;
            } else if (!(cur == c.last_edge)) {
                rep.links_ok = false;
            }
        }
    }
    return rep;
}

LevelLatticeReport level_lattices(const CoveringPatch& patch, int k) {
    LevelLatticeReport rep;
    std::vector<const CurveInfo*> included;
    for (const auto& [id, c] : patch.curves) {
        if (c.nsegs >= 4)
            included.push_back(&c);
        else
            ++rep.skipped_short;
    }
    rep.curves_checked = (int64_t)included.size();
    if (included.empty()) {
        rep.consistent = true;
        return rep;
    }
    int min_level = included.front()->level;
    for (auto* c : included) min_level = std::min(min_level, c->level);
    rep.levels_checked = std::min(k, min_level);
    rep.consistent = true;
    for (auto* c : included) {
        // Derivation anchor congruent with the chain frame at every level.
        for (int j = 1; j <= rep.levels_checked; ++j) {
            if (!divisible_by_theta_pow(c->start - patch.chain.points[(size_t)j], j)) {
                rep.consistent = false;
                rep.failure = "curve " + std::to_string(c->id) +
                              " anchor disagrees with V_" + std::to_string(j);
                return rep;
            }
        }
        Lambda prefix;
        prefix.entries.assign(patch.lambda.entries.begin(),
                              patch.lambda.entries.begin() + c->level);
        if (!(patch.curve_turns(c->id).signs == gen_T(prefix).signs)) {
            rep.consistent = false;
            rep.failure =
                "curve " + std::to_string(c->id) + " turns are not T_(Lambda_level)";
            return rep;
        }
    }
    return rep;
}

std::string CaseTag::name() const {
    switch (kind) {
        case OneCurveCertified: return "OneCurveCertified";
        case ThreeStar: return "ThreeStar";
        case ThreeSeparated: return "ThreeSeparated";
        default: return "Unknown";
    }
}

Lambda LambdaRule::materialize(int n) const {
    Lambda out;
    switch (kind) {
        case Explicit:
            out = prefix;
            if ((int)out.entries.size() > n) out.entries.resize((size_t)n);
            break;
        case Alternating:
            for (int i = 0; i < n; ++i)
                out.entries.push_back(i % 2 == 0 ? first : (int8_t)-first);
            break;
        case Constant:
            out.entries.assign((size_t)n, first);
            break;
    }
    return out;
}

LambdaRule LambdaRule::parse(const std::string& s) {
    LambdaRule r;
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        r.kind = Explicit;
        r.prefix = Lambda::parse(s);
        return r;
    }
    const std::string head = s.substr(0, colon);
    const std::string sign = s.substr(colon + 1);
    if (sign != "+1" && sign != "-1" && sign != "+" && sign != "-")
        throw std::invalid_argument("rule sign must be +1 or -1");
    r.first = (sign[0] == '+') ? +1 : -1;
    if (head == "alternating")
        r.kind = Alternating;
    else if (head == "constant")
        r.kind = Constant;
    else
        throw std::invalid_argument("unknown lambda rule '" + head + "'");
    return r;
}

PSeq PSeqRule::materialize(int n) const {
    PSeq out;
    if (kind == ConstantRule)
        out.entries.assign((size_t)n, constant);
    else {
        out = seq;
        if ((int)out.entries.size() > n) out.entries.resize((size_t)n);
    }
    return out;
}

PSeqRule PSeqRule::parse(const std::string& s) {
    PSeqRule r;
    if (s.size() == 1) {
        r.kind = ConstantRule;
        r.constant = PSeq::parse(s).entries.at(0);
    } else {
        r.kind = Explicit;
        r.seq = PSeq::parse(s);
    }
    return r;
}

CaseTag classify(const LambdaRule& lambda, const std::optional<PSeqRule>& pseq,
                 const std::optional<XChain>& chain, int horizon) {
    if (horizon < 8) throw std::invalid_argument("horizon must be >= 8");
    CaseTag tag;
    if (chain) {
        if (!chain->valid()) throw BadChain("classify chain is invalid");
        if (chain->constant()) {
            tag.kind = CaseTag::ThreeStar;
            tag.lower_bound = 3;
            tag.detail = "chain constant for all stored entries";
            return tag;
        }
    }
    if (pseq) {
        if (pseq->infinite()) {
            if (pseq->constant == Mark::I)
                throw InconsistentInput(
                    "an all-I tail keeps every curve an initial part forever, so "
                    "the union of the nested curves cannot exhaust a complete curve");
            if (pseq->constant == Mark::S)
                throw InconsistentInput(
                    "an all-S tail keeps every curve a final part forever; same "
                    "contradiction as the all-I case");
        }
        const PSeq P = pseq->materialize(horizon);
        const Lambda lam = lambda.materialize(horizon + 4);
        const int Lp = (int)P.entries.size();
        auto lam_at = [&](int i) -> int {  // 1-based; 0 when unavailable
            return (i >= 1 && i <= (int)lam.size()) ? lam.at1((size_t)i) : 0;
        };

        // Eventually M with eventually alternating Lambda.
        int m = Lp;
        while (m > 0 && P.entries[(size_t)(m - 1)] == Mark::M) --m;
        bool alt_tail = lambda.infinite() ? (lambda.kind == LambdaRule::Alternating)
                                          : false;
        if (!lambda.infinite() && (int)lam.size() >= 2) {
            int a = (int)lam.size() - 1;  // smallest k with alternation from k on
            while (a >= 1 && lam_at(a + 1) == -lam_at(a)) --a;
            alt_tail = ((int)lam.size() - (a + 1)) >= 4;
        }
        if (Lp - m >= 4 && alt_tail) {
            tag.kind = CaseTag::ThreeSeparated;
            tag.lower_bound = 3;
            tag.detail = "P eventually M (from index " + std::to_string(m) +
                         ") with eventually alternating Lambda";
            return tag;
        }

        // The 8-periodic 1-curve certificate.
        int blocks = 0;
        bool cert = true;
        for (int n = 0; 8 * n + 3 < Lp; ++n) {
            const int l2 = lam_at(8 * n + 2), l4 = lam_at(8 * n + 4);
            if (l2 == 0 || l4 == 0) {
                cert = false;
                break;
            }
            const Mark want1 = l2 > 0 ? Mark::M : Mark::S;
            const Mark want3 = l4 > 0 ? Mark::S : Mark::M;
            if (P.entries[(size_t)(8 * n)] != Mark::I ||
                P.entries[(size_t)(8 * n + 1)] != want1 ||
                P.entries[(size_t)(8 * n + 2)] != Mark::I ||
                P.entries[(size_t)(8 * n + 3)] != want3) {
                cert = false;
                break;
            }
            ++blocks;
        }
        if (cert && blocks > 0) {
            tag.kind = CaseTag::OneCurveCertified;
            tag.lower_bound = 1;
            tag.detail = std::to_string(blocks) +
                         " certificate blocks: F_L(C_8n) and F_L(C_8n+2) stay disjoint";
            return tag;
        }
    }
    tag.kind = CaseTag::Unknown;
    tag.lower_bound = 1;
    tag.detail = "no finite certificate; every covering has at least 1 curve";
    return tag;
}

SymmetryReport symmetry_check(const CoveringPatch& patch,
                              std::optional<EPoint> center2_override) {
    SymmetryReport rep;
    const int64_t g = patch.guaranteed_radius();
    auto in_g = [&](EPoint z) { return hex_norm(z - patch.window.center) <= g; };

    if (patch.star) {
        rep.rotation_checked = true;
        rep.rotation_ok = true;
        const EPoint x = patch.star->first;
        auto rot = [&](EPoint z) { return x + (z - x) * dir_unit(2); };
        for (const auto& [e, s] : patch.segments) {
            const EPoint t = patch.seg_tail(e);
            const EPoint h = t + dir_unit(s.dir);
            const EPoint rt = rot(t), rh = rot(h);
            if (!in_g(t) || !in_g(h) || !in_g(rt) || !in_g(rh)) continue;
            ++rep.segments_compared;
            auto it = patch.segments.find(edge_key(rt, rotate(s.dir, 2)));
            if (it == patch.segments.end() || it->second.dir != rotate(s.dir, 2)) {
                rep.rotation_ok = false;
                continue;
            }
            if (s.next) {
                const EPoint nt = patch.seg_tail(*s.next);
                const Dir6 nd = patch.segments.at(*s.next).dir;
                const EPoint nh = nt + dir_unit(nd);
                if (in_g(nt) && in_g(nh) && in_g(rot(nt)) && in_g(rot(nh))) {
                    ++rep.links_compared;
                    const EdgeKey want = edge_key(rot(nt), rotate(nd, 2));
                    if (!it->second.next || !(*it->second.next == want))
                        rep.rotation_ok = false;
                }
            }
        }
    }

    std::optional<EPoint> c2 = center2_override ? center2_override : patch.center2;
    if (c2) {
        rep.central_checked = true;
        rep.central_ok = true;
        auto sym = [&](EPoint z) { return *c2 - z; };
        for (const auto& [e, s] : patch.segments) {
            const EPoint t = patch.seg_tail(e);
            const EPoint h = t + dir_unit(s.dir);
            const EPoint st = sym(t), sh = sym(h);
            if (!in_g(t) || !in_g(h) || !in_g(st) || !in_g(sh)) continue;
            ++rep.segments_compared;
            const EdgeKey image = edge_key(st, rotate(s.dir, 3));
            auto it = patch.segments.find(image);
            if (it == patch.segments.end()) {
                rep.central_ok = false;
                continue;
            }
            if (s.next) {
                const EPoint nt = patch.seg_tail(*s.next);
                const Dir6 nd = patch.segments.at(*s.next).dir;
                const EPoint nh = nt + dir_unit(nd);
                if (in_g(nt) && in_g(nh) && in_g(sym(nt)) && in_g(sym(nh))) {
                    ++rep.links_compared;
                    const EdgeKey nimage = edge_key(sym(nt), rotate(nd, 3));
                    const Segment& is = it->second;
                    const bool linked = (is.next && *is.next == nimage) ||
                                        (is.prev && *is.prev == nimage);
                    if (!linked) rep.central_ok = false;
                }
            }
        }
    }
    if (!rep.rotation_checked && !rep.central_checked)
        rep.note = "no symmetry claimed for this patch";
    return rep;
}

XChain centered_chain(const Lambda& lambda, EPoint edge_tail, Dir6 edge_dir) {
    const int N = (int)lambda.size();
    const TCurve K = realize(gen_T(lambda));
    const auto dirs = K.directions();
    const auto verts = K.vertices();
    const int64_t c = (pow3(N) - 1) / 2;  // middle segment, base-3 digits all 1
    const int r = rotate(edge_dir, -dirs[(size_t)c]);
    const EPoint rot = dir_unit(r);
    const EPoint shift = edge_tail - verts[(size_t)c] * rot;
    XChain chain;
    int64_t block = 1;
    for (int n = 0; n <= N; ++n) {
        const int64_t s = (c / block) * block;
        chain.points.push_back(verts[(size_t)s] * rot + shift);
        block *= 3;
    }
    return chain;
}

}  // namespace terfold
