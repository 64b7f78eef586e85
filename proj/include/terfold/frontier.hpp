#pragma once

// Frontier walks F_L / F_R of a folding curve, their I/S decomposition and
// the sign laws they satisfy.

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "terfold/tcurve.hpp"

namespace terfold {

struct TooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSimple : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MismatchWithApexRule : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered boundary walk on one side of a curve, w -> z.  angles[i-1] is the
// sign at interior vertex i: +1 for a +60 degree (ccw) direction change,
// which is a +2pi/3 vertex angle.  The frontier turns by 60 degrees even
// though the curve itself turns by 120.
struct FrontierPath {
    char side = 'L';
    std::vector<EPoint> vertices;
    std::vector<int8_t> angles;
    int64_t split_index = 0;  // F_*I / F_*S boundary, 2^{n-1} for n-folding
    EPoint anchor;            // lattice anchor for V_k / W_k tests (= w)

    size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Sides [x,y] with both endpoints on the curve and exactly one of the two
// triangle apexes on it.  Requires >= 3 segments.
std::vector<EdgeKey> frontier_edges(const TCurve& c);

struct TriKey {
    EPoint p;
    bool up = true;

    friend bool operator==(const TriKey& a, const TriKey& b) {
        return a.p == b.p && a.up == b.up;
    }
    friend bool operator<(const TriKey& a, const TriKey& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.up < b.up;
    }
};

// Unit triangles whose three corners all lie on the curve, their boundary,
// and the ccw boundary walk when it is a simple cycle.
struct Region {
    std::vector<TriKey> triangles;
    std::vector<EdgeKey> boundary;
    std::vector<EPoint> walk_ccw;  // closed: first == last; empty if pinched
    bool simple = false;
};

// Throws MismatchWithApexRule if the boundary disagrees with frontier_edges
// (cross-oracle guard; the two are provably equal for vertex-set regions).
Region region(const TCurve& c);

// Boundary traversed ccw from the initial point w: the arc w->z is F_R, the
// complementary arc reversed is F_L.  Validated by the midpoint sign
// anchors alpha_{2^{n-1}} = -1, beta_{2^{n-1}} = +1.
std::pair<FrontierPath, FrontierPath> split_LR(const TCurve& c);

struct DecomposeResult {
    int64_t split_index = 0;      // 2^{n-1} on both sides
    EPoint l_split_vertex;        // y of C^M if lambda_n=+1, else x
    EPoint r_split_vertex;
    bool verified = false;        // split vertices match the C^M endpoints
};

DecomposeResult decompose(const TCurve& c, const Lambda& lambda);

struct FrontierLawReport {
    bool pass = false;
    bool counts_ok = false;        // 2^n edges per side
    bool intersection_ok = false;  // F_L cap F_R = {w, z}
    bool anchors_ok = false;       // middle signs -1 / +1
    bool sign_law_ok = false;      // alpha_{2^k+2^{k+1}i} = (-1)^i lambda_{k+2}
    bool membership_ok = false;    // x_i in V_k iff 2^k | i
    std::string first_failure;
};

FrontierLawReport frontier_law_report(const TCurve& c, const Lambda& lambda);

// Residue scan over the frontier walk: for each k, classes n_k mod 2^k whose positions
// all lie in W_k(anchor) and whose signs alternate.  k = 0 runs the pure
// sign-alternation scan (no W structure at level 0).
struct ResidueScanResult {
    struct PerK {
        int k = 0;
        std::vector<int64_t> residues;
    };
    std::vector<PerK> levels;
    bool found_all = false;
    bool nested = false;  // chosen residues pairwise disjoint as index classes
};

ResidueScanResult frontier_residue_scan(const FrontierPath& path, int k_max);

}  // namespace terfold
