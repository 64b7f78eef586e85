#pragma once

// JSON wrappers for the library types and reports.

#include <string>

#include "json.hpp"
#include "terfold/analysis.hpp"
#include "terfold/covering.hpp"
#include "terfold/foldseq.hpp"
#include "terfold/frontier.hpp"
#include "terfold/tcurve.hpp"

namespace terfold {

using json = nlohmann::json;

json to_json(EPoint p);
EPoint epoint_from_json(const json& j);

json to_json(const HexWindow& w);
HexWindow window_from_json(const json& j);

// {"lambda": "...", "signs": "...", "origin_index": n}
json foldseq_json(const FoldSeq& s, const std::string& lambda = "");
FoldSeq foldseq_from_json(const json& j);

// {"origin":[a,b], "dir":k, "turns":"+-...", "scale_exp":n}
json to_json(const TCurve& c);
TCurve tcurve_from_json(const json& j);

json to_json(const FrontierPath& p);
json to_json(const FrontierLawReport& r);
json to_json(const ResidueScanResult& r);

json to_json(const std::vector<ResidueLevel>& levels);
json to_json(const ExtractResult& r);
json to_json(const ClassifyWindowResult& r);

json to_json(const ValidateReport& r);
json to_json(const LevelLatticeReport& r);
json to_json(const CaseTag& t);
json to_json(const SymmetryReport& r);
json to_json(const LisoResult& r);
json to_json(const LisoSelfReport& r);

json patch_to_json(const CoveringPatch& patch);
CoveringPatch patch_from_json(const json& j);

}  // namespace terfold
