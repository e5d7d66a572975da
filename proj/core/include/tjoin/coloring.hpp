#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tjoin/color.hpp"
#include "tjoin/plane_graph.hpp"

namespace tjoin {

struct Verdict {
  bool accepted = true;
  std::string reason;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

/// Proper: no vertex sees a colour twice. Size must equal the edge count.
Verdict verify_coloring(const PlaneMultigraph& g, const EdgeColoring& col);

enum class SearchStatus { found, none_within_budget, proven_none };
std::string_view status_name(SearchStatus s);

struct SolverOptions {
  long long node_budget = 1'000'000;
  std::uint64_t seed = 0;   // 0 keeps ascending colour order
  bool exhaustive = false;  // lift the node budget
  int oracle_cap = 14;      // oracle fallback when E <= cap
};

struct ColoringResult {
  SearchStatus status = SearchStatus::none_within_budget;
  std::optional<EdgeColoring> coloring;
  long long nodes = 0;
  long long kempe_repairs = 0;
  bool oracle_used = false;
};

/// Most-constrained-first backtracking with Kempe repair at dead ends.
/// Requires a 6-regular graph.
ColoringResult find_six_edge_coloring(const PlaneMultigraph& g, const SolverOptions& options = {});

/// A maximal two-coloured path, or a cycle, as an oriented dart walk.
struct Chain {
  Color a = Color::alpha;
  Color b = Color::beta;
  std::vector<DartId> darts;
  bool cycle = false;

  std::vector<EdgeId> edges(const PlaneMultigraph& g) const;
  VertexId first_vertex(const PlaneMultigraph& g) const { return g.origin(darts.front()); }
  VertexId last_vertex(const PlaneMultigraph& g) const { return g.target(darts.back()); }
};

/// Colour lookup for the generic chain walker; -1 means uncoloured.
using ColorLookup = std::function<int(EdgeId)>;

struct ChainLimits {
  EdgeId excluded = -1;                // never walked (the distinguished edge of an e-colouring)
  std::vector<VertexId> stop_at;       // the walk ends on reaching one of these
};

/// Follows the ab-chain through the edge of `start`, in both directions.
/// The start edge must carry a or b.
Chain walk_chain(const PlaneMultigraph& g, const ColorLookup& color_of, DartId start, Color a,
                 Color b, const ChainLimits& limits = {});

Chain kempe_chain(const PlaneMultigraph& g, const EdgeColoring& col, DartId start, Color a, Color b);

/// Swaps a and b along the chain through `start`; applying it twice is the identity.
std::pair<Chain, EdgeColoring> kempe_swap(const PlaneMultigraph& g, const EdgeColoring& col,
                                          DartId start, Color a, Color b);

struct TJoinPacking {
  std::vector<std::vector<EdgeId>> joins;
  std::vector<VertexId> terminals;
};

/// Colour classes as T-joins; needs T = V(G) and a valid colouring.
TJoinPacking packing_from_coloring(const PlaneMultigraph& g, const EdgeColoring& col);

Verdict verify_packing(const PlaneMultigraph& g, std::span<const VertexId> terminals,
                       const TJoinPacking& packing);

}  // namespace tjoin
