#pragma once

// Exact arithmetic on the triangular lattice.
//
// Points are integer pairs (a, b) representing a + b*w with w = e^{i*pi/3},
// reduced by w^2 = w - 1.  All geometry in the library is integer-exact;
// floating point only appears in the SVG renderer.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace terfold {

struct EPoint {
    int64_t a = 0;
    int64_t b = 0;

    friend EPoint operator+(EPoint p, EPoint q) { return {p.a + q.a, p.b + q.b}; }
    friend EPoint operator-(EPoint p, EPoint q) { return {p.a - q.a, p.b - q.b}; }
    EPoint operator-() const { return {-a, -b}; }
    // (a+bw)(c+dw) with w^2 = w - 1.
    friend EPoint operator*(EPoint p, EPoint q) {
        return {p.a * q.a - p.b * q.b, p.a * q.b + p.b * q.a + p.b * q.b};
    }
    friend bool operator==(EPoint p, EPoint q) { return p.a == q.a && p.b == q.b; }
    friend bool operator!=(EPoint p, EPoint q) { return !(p == q); }
    friend bool operator<(EPoint p, EPoint q) {
        return p.a != q.a ? p.a < q.a : p.b < q.b;
    }

    // Squared Euclidean length N(a+bw) = a^2 + ab + b^2 (unit triangle side = 1).
    int64_t norm_sq() const { return a * a + a * b + b * b; }
};

// theta = 1 + w generates the index-3 sublattice chain; theta^2 = 3w,
// theta * (2 - w) = 3.
inline constexpr EPoint kTheta{1, 1};
inline constexpr EPoint kThetaConj{2, -1};  // conj(theta) = theta * u_5

// Directions: u_k = e^{ik*pi/3}, k in 0..5, u_{k+3} = -u_k.
using Dir6 = int;

inline constexpr std::array<EPoint, 6> kUnits = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

inline EPoint dir_unit(Dir6 d) { return kUnits[((d % 6) + 6) % 6]; }

inline Dir6 rotate(Dir6 d, int t) { return (((d + t) % 6) + 6) % 6; }

// Direction index of a unit vector; -1 if not a unit.
inline int dir_of(EPoint v) {
    for (int k = 0; k < 6; ++k)
        if (kUnits[k] == v) return k;
    return -1;
}

EPoint theta_pow(int e);

// Exact division by theta: (z * (2-w)) / 3 when integral.
std::optional<EPoint> div_theta(EPoint z);
bool divisible_by_theta_pow(EPoint z, int level);

// max(|a|, |b|, |a+b|): the hexagonal norm whose radius-k ball is the hexagon
// H(0,k) with corners k*u_j and sides made of k unit edges.
inline int64_t hex_norm(EPoint p) {
    int64_t s = std::abs(p.a + p.b);
    int64_t m = std::abs(p.a) > std::abs(p.b) ? std::abs(p.a) : std::abs(p.b);
    return s > m ? s : m;
}

// Canonical nonoriented lattice side {base, base + u_axis}, axis in {0,1,2}.
struct EdgeKey {
    EPoint base;
    int axis = 0;

    friend bool operator==(const EdgeKey& x, const EdgeKey& y) {
        return x.base == y.base && x.axis == y.axis;
    }
    friend bool operator!=(const EdgeKey& x, const EdgeKey& y) { return !(x == y); }
    friend bool operator<(const EdgeKey& x, const EdgeKey& y) {
        if (x.base != y.base) return x.base < y.base;
        return x.axis < y.axis;
    }
    EPoint other_end() const { return base + dir_unit(axis); }
};

// Canonicalize the side traversed from `tail` in direction `d`.
inline EdgeKey edge_key(EPoint tail, Dir6 d) {
    d = rotate(d, 0);
    if (d < 3) return {tail, d};
    return {tail + dir_unit(d), d - 3};
}

struct OrientedEdge {
    EPoint tail;
    Dir6 dir = 0;
    EPoint head() const { return tail + dir_unit(dir); }
    EdgeKey key() const { return edge_key(tail, dir); }
};

// The two lattice points forming unit triangles with the side (tail, tail+u_d):
// first = left of the oriented side, second = right.
inline std::pair<EPoint, EPoint> apexes(EPoint tail, Dir6 d) {
    return {tail + dir_unit(rotate(d, 1)), tail + dir_unit(rotate(d, 5))};
}

// The two opposite orientation fields satisfying (P).  E1 orients every side
// with an even direction index; under E1 every upward triangle circulates
// counterclockwise and every downward one clockwise.
enum class EField { E1, E2 };

inline OrientedEdge orient_edge(const EdgeKey& e, EField f) {
    OrientedEdge out;
    if (e.axis % 2 == 0)
        out = {e.base, e.axis};
    else
        out = {e.base + dir_unit(e.axis), e.axis + 3};
    if (f == EField::E2) out = {out.head(), rotate(out.dir, 3)};
    return out;
}

// Hexagonal window: lattice points z with hex_norm(z - center) <= radius.
// Radius 0 degenerates to the single center point.
struct HexWindow {
    EPoint center;
    int64_t radius = 0;

    bool contains(EPoint z) const { return hex_norm(z - center) <= radius; }
    bool strictly_contains(EPoint z) const { return hex_norm(z - center) < radius; }

    // Deterministic iteration, (a, b) ascending in center-relative coordinates.
    void for_each_point(const std::function<void(EPoint)>& fn) const;
    // Every side with both endpoints in the window, each exactly once.
    void for_each_edge(const std::function<void(EdgeKey)>& fn) const;
    std::vector<EPoint> points() const;
    std::vector<EdgeKey> edges() const;
};

// Point set base + theta^level * Z[w].  Level 0 is the whole lattice; each
// level is an index-3 subset of the previous one.
struct SublatticeFrame {
    EPoint base;
    int level = 0;

    bool contains(EPoint z) const { return divisible_by_theta_pow(z - base, level); }
};

// W_k = V_{k-1} \ V_k for frames anchored at `base` (k >= 1).
inline bool w_contains(EPoint base, int k, EPoint z) {
    return SublatticeFrame{base, k - 1}.contains(z) &&
           !SublatticeFrame{base, k}.contains(z);
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct EPointHash {
    size_t operator()(EPoint p) const {
        uint64_t k = (uint64_t)(uint32_t)(int32_t)p.a << 32 | (uint32_t)(int32_t)p.b;
        return (size_t)splitmix64(k);
    }
};

struct EdgeKeyHash {
    size_t operator()(const EdgeKey& e) const {
        uint64_t k = (uint64_t)(uint32_t)(int32_t)e.base.a << 34 ^
                     (uint64_t)(uint32_t)(int32_t)e.base.b << 2 ^ (uint64_t)e.axis;
        return (size_t)splitmix64(k);
    }
};

}  // namespace terfold
