#include "terfold/tcurve.hpp"

#include <algorithm>
#include <cmath>

namespace terfold {

std::vector<Dir6> TCurve::directions() const {
    std::vector<Dir6> dirs;
    dirs.reserve(segment_count());
    Dir6 d = rotate(dir0, 0);
    dirs.push_back(d);
    for (int8_t a : turns.signs) {
        d = rotate(d, a > 0 ? 2 : -2);
        dirs.push_back(d);
    }
    return dirs;
}

std::vector<EPoint> TCurve::vertices() const {
    std::vector<EPoint> vs;
    vs.reserve(segment_count() + 1);
    const EPoint step = theta_pow(scale_exp);
    EPoint v = origin;
    vs.push_back(v);
    Dir6 d = rotate(dir0, 0);
    v = v + step * dir_unit(d);
    vs.push_back(v);
    for (int8_t a : turns.signs) {
        d = rotate(d, a > 0 ? 2 : -2);
        v = v + step * dir_unit(d);
        vs.push_back(v);
    }
    return vs;
}

EPoint TCurve::endpoint() const {
    const EPoint step = theta_pow(scale_exp);
    EPoint v = origin;
    Dir6 d = rotate(dir0, 0);
    v = v + step * dir_unit(d);
    for (int8_t a : turns.signs) {
        d = rotate(d, a > 0 ? 2 : -2);
        v = v + step * dir_unit(d);
    }
    return v;
}

EdgeSet TCurve::edge_set() const {
    EdgeSet out;
    out.reserve(segment_count() * 2);
    EPoint v = origin;
    Dir6 d = rotate(dir0, 0);
    out.insert(edge_key(v, d));
    v = v + dir_unit(d);
    for (int8_t a : turns.signs) {
        d = rotate(d, a > 0 ? 2 : -2);
        out.insert(edge_key(v, d));
        v = v + dir_unit(d);
    }
    return out;
}

TCurve realize(const FoldSeq& turns, EPoint origin, Dir6 dir0) {
    return TCurve{origin, rotate(dir0, 0), turns, 0};
}

std::optional<Collision> check_self_avoiding(const TCurve& c) {
    // Self-avoidance is scale invariant; walk the unit frame.
    std::unordered_set<uint64_t> seen;
    seen.reserve(c.segment_count() * 2);
    EPoint v = c.origin;
    Dir6 d = rotate(c.dir0, 0);
    const size_t nseg = c.segment_count();
    for (size_t i = 0; i < nseg; ++i) {
        if (i > 0) d = rotate(d, c.turns.signs[i - 1] > 0 ? 2 : -2);
        EdgeKey e = edge_key(v, d);
        uint64_t packed = ((uint64_t)(uint32_t)(int32_t)e.base.a << 34) ^
                          ((uint64_t)(uint32_t)(int32_t)e.base.b << 2) ^
                          (uint64_t)e.axis;
        if (!seen.insert(packed).second) return Collision{i, e};
        v = v + dir_unit(d);
    }
    return std::nullopt;
}

TCurve delta_curve(const TCurve& c, int h) {
    const int64_t nturns = (int64_t)c.turns.signs.size();
    if (h == 0 && nturns % 3 != 2)
        throw BadLength("delta_curve needs |turns| == 2 (mod 3) for bounded curves");
    if ((int64_t)c.segment_count() < h + 3)
        throw BadLength("curve too short for a complete group at this residue");
    // delta_seq validates h against the level-0 residue law.
    FoldSeq dturns = delta_seq(c.turns, h);
    // Position h itself is the junction into the dropped leading segments.
    if (h >= 1 && !dturns.signs.empty()) {
        dturns.signs.erase(dturns.signs.begin());
        ++dturns.origin_index;
    }
    const auto dirs = c.directions();
    const auto verts = c.vertices();
    const int8_t eps = c.turns.signs[(size_t)h];  // first intra-group turn
    TCurve out;
    out.origin = verts[(size_t)h];
    out.dir0 = rotate(dirs[(size_t)h], eps > 0 ? 0 : -1);
    out.turns = std::move(dturns);
    out.scale_exp = c.scale_exp + 1;
    // Drop trailing partial groups: keep floor((nseg - h) / 3) segments.
    const int64_t groups = ((int64_t)c.segment_count() - h) / 3;
    if ((int64_t)out.turns.signs.size() > groups - 1)
        out.turns.signs.resize((size_t)(groups - 1));
    return out;
}

// Monotone-chain hull; cross products share signs with the Euclidean embedding.
static std::vector<EPoint> convex_hull(std::vector<EPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross = [](EPoint o, EPoint p, EPoint q) {
        return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
    };
    std::vector<EPoint> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

int64_t diameter_sq(const std::vector<EPoint>& pts) {
    if (pts.empty()) return 0;
    auto hull = convex_hull(pts);
    int64_t best = 0;
    for (size_t i = 0; i < hull.size(); ++i)
        for (size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, (hull[j] - hull[i]).norm_sq());
    return best;
}

int64_t diameter_sq(const TCurve& c) { return diameter_sq(c.vertices()); }

RootThree rho(int n) {
    RootThree r{0, 1};  // rho_1 = sqrt(3)
    for (int i = 1; i < n; ++i) r = RootThree{3 * r.q + 1, r.p};
    return r;
}

bool le_rho_sq(int64_t d2, RootThree r) {
    // d2 <= (p^2 + 3 q^2) + 2pq sqrt(3)
    const int64_t A = r.p * r.p + 3 * r.q * r.q;
    const int64_t B = 2 * r.p * r.q;
    const int64_t diff = d2 - A;
    if (diff <= 0) return true;
    return diff * diff <= 3 * B * B;
}

bool eq_rho_sq(int64_t d2, RootThree r) {
    return 2 * r.p * r.q == 0 && d2 == r.p * r.p + 3 * r.q * r.q;
}

int64_t hex_margin(RootThree r) {
    // smallest t with sqrt(3) * t >= 2p + 2q sqrt(3),
    // i.e. t >= 2q and 3 (t - 2q)^2 >= 4 p^2.
    int64_t s = (int64_t)std::ceil(2.0 * (double)r.p / std::sqrt(3.0));
    while (3 * s * s < 4 * r.p * r.p) ++s;
    while (s > 0 && 3 * (s - 1) * (s - 1) >= 4 * r.p * r.p) --s;
    return 2 * r.q + s;
}

TrianglePlacement max_covered_triangle(const EdgeSet& edges) {
    TrianglePlacement none;
    if (edges.empty()) return none;
    int64_t min_a = INT64_MAX, max_a = INT64_MIN;
    int64_t min_b = INT64_MAX, max_b = INT64_MIN;
    int64_t min_ab = INT64_MAX, max_ab = INT64_MIN;
    auto feed = [&](EPoint p) {
        min_a = std::min(min_a, p.a), max_a = std::max(max_a, p.a);
        min_b = std::min(min_b, p.b), max_b = std::max(max_b, p.b);
        min_ab = std::min(min_ab, p.a + p.b), max_ab = std::max(max_ab, p.a + p.b);
    };
    for (const EdgeKey& e : edges) {
        feed(e.base);
        feed(e.other_end());
    }
    auto has = [&](int64_t a, int64_t b, int axis) {
        return edges.count(EdgeKey{{a, b}, axis}) != 0;
    };
    // Sides inside an upward k-triangle with lowest corner p, relative offsets.
    auto covers_up = [&](EPoint p, int64_t k) {
        for (int64_t i = 0; i < k; ++i)
            for (int64_t j = 0; j + i < k; ++j) {
                if (!has(p.a + i, p.b + j, 0)) return false;
                if (!has(p.a + i, p.b + j, 1)) return false;
                if (!has(p.a + i + 1, p.b + j, 2)) return false;
            }
        return true;
    };
    // Downward k-triangle with corners p, p + k*u_0, p + k*u_5.
    auto covers_down = [&](EPoint p, int64_t k) {
        for (int64_t y = -k; y <= 0; ++y) {
            for (int64_t x = -y; x < k; ++x)
                if (!has(p.a + x, p.b + y, 0)) return false;
            if (y < 0)
                for (int64_t x = -y; x <= k; ++x) {
                    if (!has(p.a + x, p.b + y, 1)) return false;
                    if (!has(p.a + x, p.b + y, 2)) return false;
                }
        }
        return true;
    };
    int64_t k_hi = std::min({max_a - min_a, max_b - min_b, max_ab - min_ab});
    // A k-triangle needs 3k(k+1)/2 sides.
    while (k_hi > 0 && 3 * k_hi * (k_hi + 1) / 2 > (int64_t)edges.size()) --k_hi;
    for (int64_t k = k_hi; k >= 1; --k) {
        for (int64_t a = min_a; a + k <= max_a; ++a)
            for (int64_t b = min_b; b + k <= max_b; ++b) {
                if (a + b < min_ab || a + b + k > max_ab) continue;
                if (covers_up({a, b}, k)) return {k, {a, b}, true};
            }
        for (int64_t a = min_a; a + k <= max_a; ++a)
            for (int64_t b = min_b + k; b <= max_b; ++b) {
                if (a + b < min_ab || a + b + k > max_ab) continue;
                if (covers_down({a, b}, k)) return {k, {a, b}, false};
            }
    }
    return none;
}

}  // namespace terfold
