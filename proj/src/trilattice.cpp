#include "terfold/trilattice.hpp"

namespace terfold {

EPoint theta_pow(int e) {
    EPoint r{1, 0};
    for (int i = 0; i < e; ++i) r = r * kTheta;
    return r;
}

std::optional<EPoint> div_theta(EPoint z) {
    // z * (2 - w) = (2a + b) + (b - a) w; divisible by theta iff both
    // components are multiples of 3 (equivalently a == b mod 3).
    int64_t ra = 2 * z.a + z.b;
    int64_t rb = z.b - z.a;
    if (ra % 3 != 0 || rb % 3 != 0) return std::nullopt;
    return EPoint{ra / 3, rb / 3};
}

bool divisible_by_theta_pow(EPoint z, int level) {
    for (int i = 0; i < level; ++i) {
        auto q = div_theta(z);
        if (!q) return false;
        z = *q;
    }
    return true;
}

void HexWindow::for_each_point(const std::function<void(EPoint)>& fn) const {
    for (int64_t a = -radius; a <= radius; ++a) {
        int64_t lo = std::max(-radius, -radius - a);
        int64_t hi = std::min(radius, radius - a);
        for (int64_t b = lo; b <= hi; ++b) fn(center + EPoint{a, b});
    }
}

void HexWindow::for_each_edge(const std::function<void(EdgeKey)>& fn) const {
    for_each_point([&](EPoint p) {
        for (int axis = 0; axis < 3; ++axis) {
            if (contains(p + dir_unit(axis))) fn(EdgeKey{p, axis});
        }
    });
}

std::vector<EPoint> HexWindow::points() const {
    std::vector<EPoint> out;
    out.reserve((size_t)(1 + 3 * radius * (radius + 1)));
    for_each_point([&](EPoint p) { out.push_back(p); });
    return out;
}

std::vector<EdgeKey> HexWindow::edges() const {
    std::vector<EdgeKey> out;
    out.reserve((size_t)(9 * radius * (radius + 1) / 2 + 3));
    for_each_edge([&](EdgeKey e) { out.push_back(e); });
    return out;
}

}  // namespace terfold
