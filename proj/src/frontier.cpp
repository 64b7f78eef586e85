#include "terfold/frontier.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace terfold {

using PointSet = std::unordered_set<EPoint, EPointHash>;

static PointSet vertex_set(const TCurve& c) {
    PointSet s;
    auto vs = c.vertices();
    s.reserve(vs.size() * 2);
    for (EPoint v : vs) s.insert(v);
    return s;
}

std::vector<EdgeKey> frontier_edges(const TCurve& c) {
    if (c.segment_count() < 3) throw TooShort("frontier needs >= 3 segments");
    PointSet on = vertex_set(c);
    std::vector<EdgeKey> out;
    for (EPoint v : on) {
        for (int axis = 0; axis < 3; ++axis) {
            EPoint w = v + dir_unit(axis);
            if (!on.count(w)) continue;
            auto [la, ra] = apexes(v, axis);
            if (on.count(la) + on.count(ra) == 1) out.push_back({v, axis});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Region region(const TCurve& c) {
    if (c.segment_count() < 3) throw TooShort("region needs >= 3 segments");
    PointSet on = vertex_set(c);
    Region reg;
    for (EPoint v : on) {
        if (on.count(v + dir_unit(0)) && on.count(v + dir_unit(1)))
            reg.triangles.push_back({v, true});
        if (on.count(v + dir_unit(0)) && on.count(v + dir_unit(5)))
            reg.triangles.push_back({v, false});
    }
    std::sort(reg.triangles.begin(), reg.triangles.end());
    // Boundary = sides incident to exactly one region triangle.
    std::unordered_map<EdgeKey, int, EdgeKeyHash> count;
    auto tri_edges = [](const TriKey& t, EdgeKey out[3]) {
        if (t.up) {
            out[0] = {t.p, 0};
            out[1] = {t.p, 1};
            out[2] = {t.p + dir_unit(0), 2};
        } else {
            EPoint q = t.p + dir_unit(5);
            out[0] = {t.p, 0};
            out[1] = {q, 1};
            out[2] = {q, 2};
        }
    };
    for (const TriKey& t : reg.triangles) {
        EdgeKey es[3];
        tri_edges(t, es);
        for (int i = 0; i < 3; ++i) ++count[es[i]];
    }
    for (const auto& [e, n] : count)
        if (n == 1) reg.boundary.push_back(e);
    std::sort(reg.boundary.begin(), reg.boundary.end());

    auto fe = frontier_edges(c);
    if (fe != reg.boundary)
        throw MismatchWithApexRule("region boundary disagrees with the apex rule");

    // Closed walk when every boundary vertex has exactly two boundary edges.
    std::unordered_map<EPoint, std::vector<EPoint>, EPointHash> adj;
    for (const EdgeKey& e : reg.boundary) {
        adj[e.base].push_back(e.other_end());
        adj[e.other_end()].push_back(e.base);
    }
    reg.simple = !adj.empty();
    for (const auto& [v, ns] : adj)
        if (ns.size() != 2) reg.simple = false;
    if (reg.simple) {
        EPoint start = reg.boundary.front().base;
        std::vector<EPoint> walk{start};
        EPoint prev = start;
        EPoint cur = adj[start][0];
        while (cur != start) {
            walk.push_back(cur);
            const auto& ns = adj[cur];
            EPoint nxt = (ns[0] == prev) ? ns[1] : ns[0];
            prev = cur;
            cur = nxt;
        }
        walk.push_back(start);
        // Doubled signed area shares its sign with the Euclidean embedding.
        int64_t area2 = 0;
        for (size_t i = 0; i + 1 < walk.size(); ++i)
            area2 += walk[i].a * walk[i + 1].b - walk[i + 1].a * walk[i].b;
        if (area2 < 0) std::reverse(walk.begin(), walk.end());
        reg.walk_ccw = std::move(walk);
    }
    return reg;
}

static std::vector<int8_t> path_angles(const std::vector<EPoint>& vs) {
    std::vector<int8_t> out;
    if (vs.size() < 3) return out;
    out.reserve(vs.size() - 2);
    for (size_t i = 1; i + 1 < vs.size(); ++i) {
        int d0 = dir_of(vs[i] - vs[i - 1]);
        int d1 = dir_of(vs[i + 1] - vs[i]);
        int t = ((d1 - d0) % 6 + 6) % 6;
        out.push_back((int8_t)(t <= 3 ? t : t - 6));
    }
    return out;
}

std::pair<FrontierPath, FrontierPath> split_LR(const TCurve& c) {
    Region reg = region(c);
    if (!reg.simple) throw NotSimple("frontier is not a simple cycle");
    const auto vs = c.vertices();
    const EPoint w = vs.front();
    const EPoint z = vs.back();
    if (w == z) throw NotSimple("curve endpoints coincide");
    auto& cyc = reg.walk_ccw;  // closed, ccw, first == last
    cyc.pop_back();
    auto find = [&](EPoint p) {
        for (size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == p) return (int64_t)i;
        return (int64_t)-1;
    };
    const int64_t iw = find(w), iz = find(z);
    if (iw < 0 || iz < 0) throw NotSimple("curve endpoints not on the boundary");
    const int64_t n = (int64_t)cyc.size();
    std::vector<EPoint> right, left;
    for (int64_t i = iw;; i = (i + 1) % n) {
        right.push_back(cyc[(size_t)i]);
        if (i == iz) break;
    }
    for (int64_t i = iz;; i = (i + 1) % n) {
        left.push_back(cyc[(size_t)i]);
        if (i == iw) break;
    }
    std::reverse(left.begin(), left.end());

    FrontierPath L{'L', std::move(left), {}, 0, w};
    FrontierPath R{'R', std::move(right), {}, 0, w};
    L.angles = path_angles(L.vertices);
    R.angles = path_angles(R.vertices);
    auto pow2_half = [](size_t edges) -> int64_t {
        // edges = 2^n for an n-folding source
        return (edges >= 2 && (edges & (edges - 1)) == 0) ? (int64_t)edges / 2 : 0;
    };
    L.split_index = pow2_half(L.edge_count());
    R.split_index = pow2_half(R.edge_count());
    return {std::move(L), std::move(R)};
}

DecomposeResult decompose(const TCurve& c, const Lambda& lambda) {
    const int n = (int)lambda.size();
    if (n < 1) throw TooShort("decompose needs n >= 1");
    auto [L, R] = split_LR(c);
    DecomposeResult out;
    out.split_index = (int64_t)1 << (n - 1);
    const auto vs = c.vertices();
    const int64_t third = pow3(n - 1);
    const EPoint x = vs[(size_t)third];       // initial point of C^M
    const EPoint y = vs[(size_t)(2 * third)]; // terminal point of C^M
    const bool plus = lambda.at1((size_t)n) > 0;
    out.l_split_vertex = plus ? y : x;
    out.r_split_vertex = plus ? x : y;
    out.verified = (int64_t)L.vertices.size() > out.split_index &&
                   (int64_t)R.vertices.size() > out.split_index &&
                   L.vertices[(size_t)out.split_index] == out.l_split_vertex &&
                   R.vertices[(size_t)out.split_index] == out.r_split_vertex;
    return out;
}

FrontierLawReport frontier_law_report(const TCurve& c, const Lambda& lambda) {
    FrontierLawReport rep;
    const int n = (int)lambda.size();
    auto [L, R] = split_LR(c);
    const int64_t edges = (int64_t)1 << n;
    rep.counts_ok =
        (int64_t)L.edge_count() == edges && (int64_t)R.edge_count() == edges;
    if (!rep.counts_ok) rep.first_failure = "edge counts differ from 2^n";

    // F_L cap F_R = {w, z}
    {
        PointSet lset(L.vertices.begin(), L.vertices.end());
        size_t shared = 0;
        bool extra = false;
        for (size_t i = 0; i < R.vertices.size(); ++i) {
            if (!lset.count(R.vertices[i])) continue;
            ++shared;
            if (i != 0 && i + 1 != R.vertices.size()) extra = true;
        }
        rep.intersection_ok = !extra && shared == 2;
        if (!rep.intersection_ok && rep.first_failure.empty())
            rep.first_failure = "F_L and F_R share interior vertices";
    }

    auto alpha = [&](int64_t i) { return (int)L.angles.at((size_t)(i - 1)); };
    auto beta = [&](int64_t i) { return (int)R.angles.at((size_t)(i - 1)); };
    rep.anchors_ok = rep.counts_ok && alpha(edges / 2) == -1 && beta(edges / 2) == +1;
    if (!rep.anchors_ok && rep.first_failure.empty())
        rep.first_failure = "midpoint signs are not -1/+1";

    rep.sign_law_ok = rep.counts_ok;
    for (int k = 0; rep.sign_law_ok && k <= n - 2; ++k) {
        const int64_t step = (int64_t)1 << (k + 1);
        int64_t i = 0;
        for (int64_t t = (int64_t)1 << k; t <= edges - 1; t += step, ++i) {
            const int expect = (i % 2 == 0 ? 1 : -1) * lambda.at1((size_t)(k + 2));
            if (alpha(t) != expect || beta(t) != expect) {
                rep.sign_law_ok = false;
                if (rep.first_failure.empty())
                    rep.first_failure = "sign law fails at k=" + std::to_string(k) +
                                        " index " + std::to_string(t);
                break;
            }
        }
    }

    rep.membership_ok = rep.counts_ok;
    for (int k = 1; rep.membership_ok && k <= n; ++k) {
        SublatticeFrame frame{L.anchor, k};
        for (int64_t i = 0; i <= edges; ++i) {
            const bool want = (i % ((int64_t)1 << k)) == 0;
            if (frame.contains(L.vertices[(size_t)i]) != want ||
                frame.contains(R.vertices[(size_t)i]) != want) {
                rep.membership_ok = false;
                if (rep.first_failure.empty())
                    rep.first_failure =
                        "V_k membership fails at k=" + std::to_string(k) +
                        " index " + std::to_string(i);
                break;
            }
        }
    }

    rep.pass = rep.counts_ok && rep.intersection_ok && rep.anchors_ok &&
               rep.sign_law_ok && rep.membership_ok;
    return rep;
}

ResidueScanResult frontier_residue_scan(const FrontierPath& path, int k_max) {
    ResidueScanResult out;
    const int64_t len = (int64_t)path.edge_count();
    for (int k = 0; k <= k_max; ++k) {
        ResidueScanResult::PerK lvl;
        lvl.k = k;
        const int64_t step = (int64_t)1 << k;
        for (int64_t r = 0; r < step; ++r) {
            bool ok = false;
            int prev_sign = 0;
            int64_t hits = 0;
            for (int64_t i = r; i <= len; i += step) {
                if (k >= 1 && !w_contains(path.anchor, k, path.vertices[(size_t)i])) {
                    ok = false;
                    break;
                }
                if (i >= 1 && i <= len - 1) {
                    const int s = path.angles[(size_t)(i - 1)];
                    if (prev_sign != 0 && s != -prev_sign) {
                        ok = false;
                        break;
                    }
                    prev_sign = s;
                    ++hits;
                }
                ok = true;
            }
            if (ok && hits >= 2) lvl.residues.push_back(r);
        }
        out.levels.push_back(std::move(lvl));
    }
    // The W-level residues are k >= 1; the k = 0 row is the plain
    // sign-alternation scan and does not gate found_all.
    out.found_all = true;
    for (const auto& lvl : out.levels)
        if (lvl.k >= 1 && lvl.residues.empty()) out.found_all = false;
    out.nested = out.found_all;
    if (out.found_all) {
        for (size_t a = 1; a < out.levels.size() && out.nested; ++a)
            for (size_t b = 1; b < a; ++b) {
                const int64_t mod = (int64_t)1 << out.levels[b].k;
                if (((out.levels[a].residues.front() % mod) + mod) % mod ==
                    out.levels[b].residues.front())
                    out.nested = false;
            }
    }
    return out;
}

}  // namespace terfold
