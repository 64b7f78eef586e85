#include "terfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace terfold {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct XY {
    double x, y;
};

XY embed(EPoint p) {
    // y grows upward in lattice terms; SVG y points down.
    return {(double)p.a + 0.5 * (double)p.b, -0.8660254037844386 * (double)p.b};
}

std::string fmt(double v) {
    if (std::fabs(v) < 5e-5) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// Polyline with corners rounded by quadratic arcs of radius r.
std::string rounded_path(const std::vector<EPoint>& vs, double r) {
    if (vs.size() < 2) return {};
    std::vector<XY> p;
    p.reserve(vs.size());
    for (EPoint v : vs) p.push_back(embed(v));
    auto lerp = [](XY a, XY b, double t) {
        return XY{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
    };
    auto dist = [](XY a, XY b) { return std::hypot(b.x - a.x, b.y - a.y); };
    std::string d = "M " + fmt(p[0].x) + " " + fmt(p[0].y);
    for (size_t i = 1; i + 1 < p.size(); ++i) {
        const double tin = r / dist(p[i - 1], p[i]);
        const double tout = r / dist(p[i], p[i + 1]);
        XY a = lerp(p[i], p[i - 1], tin);
        XY b = lerp(p[i], p[i + 1], tout);
        d += " L " + fmt(a.x) + " " + fmt(a.y);
        d += " Q " + fmt(p[i].x) + " " + fmt(p[i].y) + " " + fmt(b.x) + " " + fmt(b.y);
    }
    d += " L " + fmt(p.back().x) + " " + fmt(p.back().y);
    return d;
}

struct Bounds {
    double minx = 1e30, miny = 1e30, maxx = -1e30, maxy = -1e30;
    void feed(EPoint p) {
        XY q = embed(p);
        minx = std::min(minx, q.x), maxx = std::max(maxx, q.x);
        miny = std::min(miny, q.y), maxy = std::max(maxy, q.y);
    }
    bool empty() const { return minx > maxx; }
};

std::string document(const std::vector<std::pair<std::vector<EPoint>, int>>& walks,
                     const RenderOptions& opts, double edge_len) {
    Bounds bb;
    for (const auto& [vs, color] : walks)
        for (EPoint v : vs) bb.feed(v);
    if (bb.empty()) bb = {0, 0, 1, 1};
    const double pad = 1.0;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
           fmt(bb.minx - pad) + " " + fmt(bb.miny - pad) + " " +
           fmt(bb.maxx - bb.minx + 2 * pad) + " " + fmt(bb.maxy - bb.miny + 2 * pad) +
           "\">\n";
    if (opts.lattice_underlay && !walks.empty()) {
        out += "<g stroke=\"#dddddd\" stroke-width=\"" +
               fmt(opts.stroke_width * 0.3) + "\">\n";
        // Unit lattice sides across the bounding box.
        int64_t alo = (int64_t)std::floor(bb.minx - pad) - 2;
        int64_t ahi = (int64_t)std::ceil(bb.maxx + pad) + 2;
        int64_t blo = (int64_t)std::floor((bb.miny - pad) / -0.8660254) - 2;
        int64_t bhi = (int64_t)std::ceil((bb.maxy + pad) / -0.8660254) + 2;
        if (blo > bhi) std::swap(blo, bhi);
        for (int64_t a = alo; a <= ahi; ++a)
            for (int64_t b = blo; b <= bhi; ++b)
                for (int axis = 0; axis < 3; ++axis) {
                    XY p = embed({a, b});
                    XY q = embed(EPoint{a, b} + dir_unit(axis));
                    out += "<line x1=\"" + fmt(p.x) + "\" y1=\"" + fmt(p.y) +
                           "\" x2=\"" + fmt(q.x) + "\" y2=\"" + fmt(q.y) + "\"/>\n";
                }
        out += "</g>\n";
    }
    for (const auto& [vs, color] : walks) {
        out += "<path d=\"" + rounded_path(vs, opts.corner_ratio * edge_len) +
               "\" fill=\"none\" stroke=\"" +
               kPalette[color % (int)(sizeof(kPalette) / sizeof(kPalette[0]))] +
               "\" stroke-width=\"" + fmt(opts.stroke_width) +
               "\" stroke-linecap=\"round\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string render_svg(const std::vector<TCurve>& curves, const RenderOptions& opts) {
    std::vector<std::pair<std::vector<EPoint>, int>> walks;
    double edge_len = 1.0;
    int color = 0;
    for (const TCurve& c : curves) {
        walks.emplace_back(c.vertices(), color++);
        edge_len = std::pow(std::sqrt(3.0), c.scale_exp);
    }
    return document(walks, opts, edge_len);
}

std::string render_patch_svg(const CoveringPatch& patch, const RenderOptions& opts) {
    std::vector<int32_t> ids;
    if (patch.star) {
        for (const auto& [id, c] : patch.curves) {
            auto vs = patch.curve_vertices(id);
            for (EPoint v : vs)
                if (v == patch.star->first) {
                    ids.push_back(id);
                    break;
                }
        }
    } else {
        std::vector<std::pair<int64_t, int32_t>> ranked;
        for (const auto& [id, c] : patch.curves) {
            if (c.level != patch.level) continue;
            int64_t best = INT64_MAX;
            for (EPoint v : patch.curve_vertices(id))
                best = std::min(best, hex_norm(v - patch.window.center));
            ranked.emplace_back(best, id);
        }
        std::sort(ranked.begin(), ranked.end());
        const size_t want =
            opts.top_curves > 0 ? (size_t)opts.top_curves : ranked.size();
        for (size_t i = 0; i < ranked.size() && i < want; ++i)
            ids.push_back(ranked[i].second);
    }
    std::vector<std::pair<std::vector<EPoint>, int>> walks;
    int color = 0;
    for (int32_t id : ids) walks.emplace_back(patch.curve_vertices(id), color++);
    return document(walks, opts, 1.0);
}

}  // namespace terfold
