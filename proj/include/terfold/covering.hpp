#pragma once

// Finite hexagonal-window approximations of the plane coverings: the level
// construction, star connections, validity and (P), shared-lattice checks,
// and the case classification.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "terfold/foldseq.hpp"
#include "terfold/tcurve.hpp"
#include "terfold/trilattice.hpp"

namespace terfold {

struct BadChain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoStarPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x_0, x_1, ... with x_{k+1} in V_k(x_k).
struct XChain {
    std::vector<EPoint> points;

    bool valid() const;
    bool constant() const;
    static XChain constant_at(EPoint x, int level);
    static XChain parse(const std::string& s);  // "a,b;a,b;..."
    std::string str() const;
};

struct Segment {
    Dir6 dir = 0;
    int32_t curve_id = -1;
    std::optional<EdgeKey> prev;
    std::optional<EdgeKey> next;
};

struct CurveInfo {
    int32_t id = -1;
    EPoint start, end;
    EdgeKey first_edge, last_edge;
    Dir6 first_dir = 0, last_dir = 0;
    int64_t nsegs = 0;
    int level = 0;  // the curve is a complete T_{Lambda_level} realization
};

struct CoveringPatch {
    HexWindow window;
    int level = 0;
    Lambda lambda;
    EField orientation = EField::E1;
    XChain chain;
    std::unordered_map<EdgeKey, Segment, EdgeKeyHash> segments;
    std::map<int32_t, CurveInfo> curves;
    std::optional<std::pair<EPoint, char>> star;  // (point, '+' or '-')
    std::optional<EPoint> center2;  // doubled central-symmetry center
    std::vector<int64_t> unresolved_by_level;

    int64_t margin() const;
    int64_t guaranteed_radius() const { return window.radius - margin(); }
    bool in_guaranteed(EPoint z) const {
        return hex_norm(z - window.center) <= guaranteed_radius();
    }

    EPoint seg_tail(const EdgeKey& e) const;
    // Ordered oriented edges of a curve, first to last.
    std::vector<OrientedEdge> walk(int32_t curve_id) const;
    std::vector<EPoint> curve_vertices(int32_t curve_id) const;
    FoldSeq curve_turns(int32_t curve_id) const;
};

// One linking pass per fold sign: for every complete level-k curve A starting
// at a V_{k+1}(x_{k+1}) point, attach B (first direction = A's last rotated
// +2 if lambda_{k+1}=+1, -2 otherwise) and C (opposite rotation off B).
// Triples with missing members stay unlinked and are counted.
CoveringPatch build_patch(const Lambda& lambda, const XChain& chain,
                          EField orientation, HexWindow window);

// Pair the 3 curve ends arriving at the star point with the 3 departing ones
// by the left (+) or right (-) rule.  The chain must be constant for all
// stored entries (the horizon-bounded reading of cap V_n = {x}).
void star_connect(CoveringPatch& patch, char mode);

struct ValidateReport {
    bool covering_ok = false;
    bool property_P = false;
    int parity = -1;  // 0 = E1 (even directions), 1 = E2
    bool links_ok = false;
    int64_t edge_count = 0;
    std::map<int, int64_t> curves_by_level;
    std::vector<int64_t> unresolved_by_level;
    bool pass() const { return covering_ok && property_P && links_ok; }
};

ValidateReport validate(const CoveringPatch& patch);

// Shared-lattice agreement: derivation anchors of every curve with >= 4 segments
// agree modulo theta^j for j <= levels_checked, and all turn prefixes match
// gen_T of the patch Lambda.
struct LevelLatticeReport {
    bool consistent = false;
    int levels_checked = 0;
    int64_t curves_checked = 0;
    int64_t skipped_short = 0;
    std::string failure;
};

LevelLatticeReport level_lattices(const CoveringPatch& patch, int k);

struct CaseTag {
    enum Kind { OneCurveCertified, ThreeStar, ThreeSeparated, Unknown } kind = Unknown;
    int64_t lower_bound = 1;
    std::string detail;
    std::string name() const;
};

struct LambdaRule {
    enum Kind { Explicit, Alternating, Constant } kind = Explicit;
    Lambda prefix;      // Explicit
    int8_t first = +1;  // rules: lambda_1
    bool infinite() const { return kind != Explicit; }
    Lambda materialize(int n) const;
    static LambdaRule parse(const std::string& s);
};

struct PSeqRule {
    enum Kind { Explicit, ConstantRule } kind = Explicit;
    PSeq seq;
    Mark constant = Mark::M;
    bool infinite() const { return kind == ConstantRule; }
    PSeq materialize(int n) const;
    static PSeqRule parse(const std::string& s);
};

// Covering case tags at desk scale.  ThreeStar from a constant chain;
// ThreeSeparated from an eventually-M P-sequence with eventually alternating
// Lambda; OneCurveCertified from the 8-periodic certificate pattern;
// otherwise Unknown with the finitely-forced curve-count lower bound.
CaseTag classify(const LambdaRule& lambda, const std::optional<PSeqRule>& pseq,
                 const std::optional<XChain>& chain, int horizon);

struct SymmetryReport {
    bool rotation_checked = false;
    bool rotation_ok = false;
    bool central_checked = false;
    bool central_ok = false;
    int64_t segments_compared = 0;
    int64_t links_compared = 0;
    std::string note;
};

// Star patches: 120-degree rotation invariance about the star point (oriented
// structure).  Patches carrying a doubled center: central symmetry of the
// nonoriented structure.  Nothing is asserted for other patches.
SymmetryReport symmetry_check(const CoveringPatch& patch,
                              std::optional<EPoint> center2_override = {});

// Chain whose level-n block containing the oriented base edge sits in the
// middle at every level (P_n = M throughout); realizes the separated-type
// structure for eventually alternating Lambda.  Also yields the doubled
// central-symmetry center 2*tail + u_dir.
XChain centered_chain(const Lambda& lambda, EPoint edge_tail, Dir6 edge_dir);

}  // namespace terfold
