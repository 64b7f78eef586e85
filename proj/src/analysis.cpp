#include "terfold/analysis.hpp"

#include <algorithm>
#include <random>

namespace terfold {

PatchCode patch_code_radius(const CoveringPatch& patch, EPoint center,
                            int64_t radius) {
    if (hex_norm(center - patch.window.center) + radius > patch.guaranteed_radius())
        throw OutOfRegion("hexagon leaves the guaranteed-complete region");
    PatchCode code;
    if (radius <= 0) return code;
    auto inside = [&](EPoint z) { return hex_norm(z - center) < radius; };
    HexWindow closed{center, radius - 1};
    closed.for_each_edge([&](EdgeKey e) {
        const Segment& s = patch.segments.at(e);
        const EPoint rel = e.base - center;
        code.segs.push_back({rel.a, rel.b, (int64_t)e.axis, (int64_t)s.dir});
        if (s.next) {
            const EdgeKey& f = *s.next;
            if (inside(f.base) && inside(f.other_end())) {
                const EPoint rf = f.base - center;
                code.links.push_back(
                    {rel.a, rel.b, (int64_t)e.axis, rf.a, rf.b, (int64_t)f.axis});
            }
        }
    });
    std::sort(code.segs.begin(), code.segs.end());
    std::sort(code.links.begin(), code.links.end());
    return code;
}

PatchCode patch_code(const CoveringPatch& patch, EPoint center, int n) {
    return patch_code_radius(patch, center, pow3(n));
}

LisoResult liso_search(const CoveringPatch& a, EPoint x, const CoveringPatch& b,
                       EPoint y, int n) {
    const int64_t r = pow3(n);
    const int64_t scan = 5 * r;
    if (hex_norm(x - a.window.center) + r > a.guaranteed_radius())
        throw RegionTooSmall("H(x, 3^n) leaves patch A's guaranteed region");
    if (hex_norm(y - b.window.center) + scan + r > b.guaranteed_radius())
        throw RegionTooSmall("H(y, 5*3^n + 3^n) leaves patch B's guaranteed region");
    const PatchCode target = patch_code_radius(a, x, r);
    LisoResult res;
    for (int64_t ring = 0; ring <= scan; ++ring) {
        for (int64_t da = -ring; da <= ring; ++da) {
            int64_t lo = std::max(-ring, -ring - da);
            int64_t hi = std::min(ring, ring - da);
            for (int64_t db = lo; db <= hi; ++db) {
                if (hex_norm({da, db}) != ring) continue;
                const EPoint z = y + EPoint{da, db};
                ++res.scanned;
                if (patch_code_radius(b, z, r) == target) {
                    res.found = true;
                    res.witness = z;
                    return res;
                }
            }
        }
    }
    return res;
}

LisoSelfReport lisop_self(const CoveringPatch& patch, int n, int samples,
                          uint64_t seed) {
    LisoSelfReport rep;
    rep.seed = seed;
    const int64_t r = pow3(n);
    const int64_t rx = patch.guaranteed_radius() - r;
    const int64_t ry = patch.guaranteed_radius() - 6 * r;
    if (rx < 0 || ry < 0) throw RegionTooSmall("patch too small for sampling");
    std::mt19937_64 rng(seed);
    auto sample_hex = [&](int64_t rad) {
        while (true) {
            int64_t a = (int64_t)(rng() % (uint64_t)(2 * rad + 1)) - rad;
            int64_t b = (int64_t)(rng() % (uint64_t)(2 * rad + 1)) - rad;
            if (hex_norm({a, b}) <= rad) return patch.window.center + EPoint{a, b};
        }
    };
    for (int i = 0; i < samples; ++i) {
        const EPoint x = sample_hex(rx);
        const EPoint y = sample_hex(ry);
        ++rep.samples;
        if (liso_search(patch, x, patch, y, n).found) ++rep.successes;
    }
    rep.all_ok = rep.successes == rep.samples;
    return rep;
}

}  // namespace terfold
