#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/plane_graph.hpp"

namespace tjoin {

/// v1..vk-swap: remove v2v3, v4v5, ..., vkv1 and insert v1v2, v3v4, ...
/// New edge i (v_{2i+1} v_{2i+2}, 0-based) is drawn inside anchor_faces[i].
/// removed_edges may be left empty; validation then resolves it.
struct SwapSpec {
  std::vector<VertexId> vertices;
  std::vector<FaceId> anchor_faces;
  std::vector<EdgeId> removed_edges;

  int k() const { return static_cast<int>(vertices.size()); }
};

/// Accepts only k in {4, 6, 8} with distinct vertices, existing removed
/// edges and anchor faces carrying both endpoints; a dry run must give a
/// plane graph. On success `resolved` (if given) receives the removed edges.
Verdict validate_swap(const PlaneMultigraph& g, const SwapSpec& spec, SwapSpec* resolved = nullptr);

/// Inserted edge i takes over the id and darts of removed edge i, so every
/// other edge keeps its id in the result.
struct SwapResult {
  PlaneMultigraph graph;
  SwapSpec spec;  // with removed edges resolved
  std::vector<EdgeId> inserted;  // ids in `graph`
  std::vector<EdgeId> removed;   // ids in the original graph (equal to `inserted`)
};

SwapResult apply_swap(const PlaneMultigraph& g, const SwapSpec& spec);

struct CutPerturbation {
  int k = 0;
  int bound = 0;
  int max_abs_delta = 0;
  long long subsets = 0;
  long long violations = 0;
  std::vector<std::pair<std::vector<VertexId>, int>> extremal;  // a few sides reaching the maximum
  bool ok() const { return violations == 0; }
};

/// Compares every cut of g and g2 (same vertex set). Bound is 2 for k = 4, 6
/// and 4 for k = 8.
CutPerturbation check_swap_cut_property(const PlaneMultigraph& g, const PlaneMultigraph& g2, int k,
                                        int cap = kDefaultCutCap);

/// Deterministic list of valid swaps of size k, at most `limit` of them.
std::vector<SwapSpec> enumerate_swaps(const PlaneMultigraph& g, int k, int limit);

enum class Lemma {
  odd_cut,
  multigon_order,
  face_quadragon,
  face_trigon,
  three_face_trigon,
  three_face_23_bigon,
  trigon_2big,
  three_face_1_bigon,
  face35_bigon_trigon,
  four_face_trigon,
  four_face_3_bigon,
  five_face_5_multi,
  six_face_23,
  six_face_32,
  seven_face_trigon,
  eight_face,
  danger_a,
  danger_b,
};

inline constexpr int kLemmaCount = 18;

std::string_view lemma_id(Lemma l);
std::optional<Lemma> parse_lemma_id(std::string_view id);
std::vector<Lemma> all_lemmas();

/// One configuration whose premise holds; `conclusion_holds == false` marks a
/// place where the instance cannot be a minimal counterexample.
struct ConfigMatch {
  Lemma lemma = Lemma::odd_cut;
  std::vector<FaceId> faces;
  std::vector<MultigonId> multigons;
  std::vector<VertexId> vertices;  // swap labelling v1..vk where the lemma has one
  std::vector<EdgeId> edges;
  bool premise_holds = true;
  bool conclusion_holds = true;
  std::string detail;

  bool violated() const { return !conclusion_holds; }
};

struct CatalogOptions {
  int cut_cap = kDefaultCutCap;
};

struct CatalogReport {
  std::vector<ConfigMatch> matches;  // lemma order, then element order
  std::vector<std::string> skipped;  // checks not run (cut enumeration above cap)
};

CatalogReport run_catalog(const PlaneMultigraph& g, const FaceClassification& cls,
                          const CatalogOptions& options = {});
std::vector<ConfigMatch> match_catalog(const PlaneMultigraph& g, const FaceClassification& cls,
                                       const CatalogOptions& options = {});

/// The multigon-order check alone; works on cyclic bundles, where the
/// classification is unavailable.
std::vector<ConfigMatch> match_multigon_order(const std::vector<Multigon>& multigons);

bool has_lifter(Lemma l);

struct ReductionPlan {
  Lemma lemma = Lemma::odd_cut;
  std::optional<SwapSpec> swap;  // swap-based lemmas
  std::optional<Cut> cut;        // odd-cut lemma
  std::string description;
};

/// Throws PreconditionError("checker-only lemma") for lemmas without a
/// lifter, and when the matched configuration cannot be labelled.
ReductionPlan plan_reduction(const PlaneMultigraph& g, const FaceClassification& cls, const ConfigMatch& match);

struct LiftOutcome {
  enum class Kind { coloring, forced_pattern };
  Kind kind = Kind::forced_pattern;
  std::optional<EdgeColoring> coloring;
  std::string report;
  std::optional<Color> common_color;
};

/// Swap lifting: col2 colours swap.graph; the result colours g.
LiftOutcome lift_coloring(const PlaneMultigraph& g, const ConfigMatch& match, const SwapResult& swap,
                          const EdgeColoring& col2);

/// Split lifting for the odd-cut lemma.
LiftOutcome lift_coloring(const PlaneMultigraph& g, const ConfigMatch& match, const SplitResult& split,
                          const EdgeColoring& col_a, const EdgeColoring& col_b);

/// Plans, reduces, colours the reduced graph(s) with the solver and lifts.
LiftOutcome reduce_and_lift(const PlaneMultigraph& g, const FaceClassification& cls, const ConfigMatch& match,
                            const SolverOptions& options = {});

}  // namespace tjoin
