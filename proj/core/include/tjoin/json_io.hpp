#pragma once

#include <nlohmann/json.hpp>

#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/discharging.hpp"
#include "tjoin/ecoloring.hpp"
#include "tjoin/plane_graph.hpp"
#include "tjoin/reductions.hpp"

namespace tjoin {

using Json = nlohmann::ordered_json;

Json item_json(ItemRef item);
Json cut_json(const Cut& cut);
Json odd_cut_report_json(const OddCutReport& report);
Json coloring_json(const EdgeColoring& col);  // {"edge-id": "colour"}
Json packing_json(const TJoinPacking& packing);
Json analysis_json(const PlaneMultigraph& g);  // faces, multigons, classification
Json ecoloring_json(const EColoring& ec);
Json canonical_json(const CanonicalOutcome& out);
Json mate_json(const Mate& m);
Json mate_result_json(const MateResult& r);

/// {"vertices": [...], "anchor_faces": [...], "removed_edges": [...]}; the last is optional.
SwapSpec parse_swap_spec(const Json& j);
Json swap_spec_json(const SwapSpec& s);
Json perturbation_json(const CutPerturbation& p);

Json match_json(const ConfigMatch& m);
Json catalog_json(const CatalogReport& r);

/// quarters = false writes charges in units as decimals.
Json ledger_json(const ChargeLedger& l, bool quarters = true);
Json application_json(const RuleApplication& a, bool quarters = true);
Json audit_json(const AuditReport& r, bool quarters = true);

}  // namespace tjoin
