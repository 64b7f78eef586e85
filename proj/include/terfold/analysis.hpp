#pragma once

// Patch canonicalization and local-isomorphism searches over covering patches.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "terfold/covering.hpp"

namespace terfold {

struct OutOfRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RegionTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translation-invariant code of a restriction to an open hexagon: oriented
// sides with both endpoints strictly inside, plus the curve-connection pairs
// among them.  Equal codes == translation-isomorphic restrictions.
struct PatchCode {
    // (rel a, rel b, axis, dir), sorted
    std::vector<std::array<int64_t, 4>> segs;
    // (rel e, rel f) next-links with both sides in the code, sorted
    std::vector<std::array<int64_t, 6>> links;

    friend bool operator==(const PatchCode& x, const PatchCode& y) {
        return x.segs == y.segs && x.links == y.links;
    }
};

// Restriction to H*(center, radius).  Throws OutOfRegion unless the closed
// hexagon sits inside the patch's guaranteed region.
PatchCode patch_code_radius(const CoveringPatch& patch, EPoint center,
                            int64_t radius);
// The hexagonal-ball form: H*(center, 3^n).
PatchCode patch_code(const CoveringPatch& patch, EPoint center, int n);

struct LisoResult {
    bool found = false;
    EPoint witness;
    int64_t scanned = 0;
};

// First z in V cap H(y, 5*3^n) -- concentric hex rings outward from y,
// lexicographic within a ring -- whose code matches the code at x.
// Exhaustion (found = false) is the not-locally-isomorphic signal.
LisoResult liso_search(const CoveringPatch& a, EPoint x, const CoveringPatch& b,
                       EPoint y, int n);

struct LisoSelfReport {
    int64_t samples = 0;
    int64_t successes = 0;
    bool all_ok = false;
    uint64_t seed = 0;
};

// Sampled self local-isomorphism: witnesses must exist for every pair.
LisoSelfReport lisop_self(const CoveringPatch& patch, int n, int samples,
                          uint64_t seed);

}  // namespace terfold
