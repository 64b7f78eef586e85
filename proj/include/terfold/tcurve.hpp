#pragma once

// Geometric realization of turn sequences: self-avoidance, the derivation,
// exact diameters, triangle coverage.

#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "terfold/foldseq.hpp"
#include "terfold/trilattice.hpp"

namespace terfold {

struct BadLength : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using EdgeSet = std::unordered_set<EdgeKey, EdgeKeyHash>;

// A t-curve: |turns|+1 segments, each a step of theta^scale_exp * u_dir.
// Consecutive directions differ by +-2 (mod 6); a_k = +1 turns left (ccw).
struct TCurve {
    EPoint origin;
    Dir6 dir0 = 0;
    FoldSeq turns;
    int scale_exp = 0;

    size_t segment_count() const { return turns.signs.size() + 1; }
    std::vector<Dir6> directions() const;
    std::vector<EPoint> vertices() const;
    EPoint endpoint() const;
    // Nonoriented sides in unit-frame coordinates (the curve divided by
    // theta^scale_exp about its origin).
    EdgeSet edge_set() const;
};

TCurve realize(const FoldSeq& turns, EPoint origin = {}, Dir6 dir0 = 0);

struct Collision {
    size_t segment_index = 0;  // 0-based index of the second use
    EdgeKey edge;
};

// nullopt when self-avoiding, else the earliest reused side.
std::optional<Collision> check_self_avoiding(const TCurve& c);

// Replace aligned groups of 3 segments by single segments.  Groups start at
// vertex indices == h (mod 3); h = 0 for bounded folding curves, which must
// then have |turns| == 2 (mod 3).  scale_exp increases by one; the new
// initial direction stays (first intra-group turn +1) or decreases by one
// (turn -1, theta-bar = theta * u_5).
TCurve delta_curve(const TCurve& c, int h = 0);

// Exact squared Euclidean diameter of the vertex set (convex hull + pair scan).
int64_t diameter_sq(const std::vector<EPoint>& pts);
int64_t diameter_sq(const TCurve& c);

// p + q*sqrt(3), used for the rho_n diameter bound.
struct RootThree {
    int64_t p = 0;
    int64_t q = 0;

    friend RootThree operator+(RootThree x, RootThree y) { return {x.p + y.p, x.q + y.q}; }
    friend RootThree operator-(RootThree x, RootThree y) { return {x.p - y.p, x.q - y.q}; }
    friend RootThree operator*(RootThree x, RootThree y) {
        return {x.p * y.p + 3 * x.q * y.q, x.p * y.q + x.q * y.p};
    }
    friend bool operator==(RootThree x, RootThree y) { return x.p == y.p && x.q == y.q; }
};

// rho_1 = sqrt(3), rho_{n+1} = rho_n * sqrt(3) + 1.
RootThree rho(int n);
// d2 <= (p + q sqrt(3))^2, exactly (p, q >= 0).
bool le_rho_sq(int64_t d2, RootThree r);
bool eq_rho_sq(int64_t d2, RootThree r);
// Smallest integer >= 2*rho/sqrt(3): hex-norm reach of a Euclidean ball.
int64_t hex_margin(RootThree r);

// Largest k such that some k-triangle (either orientation) has every unit
// side inside it present in `edges`; size 0 when none.
struct TrianglePlacement {
    int64_t size = 0;
    EPoint corner;   // up: lowest corner; down: the corner with the others at
                     // corner + k*u_0 and corner + k*u_5
    bool up = true;
};

TrianglePlacement max_covered_triangle(const EdgeSet& edges);

}  // namespace terfold
