#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"

namespace tjoin {

/// Colouring degenerate at one edge: `e` carries every colour in `e_colors`,
/// every other edge one colour, and each vertex sees each colour an odd
/// number of times. `colors[e]` is ignored.
struct EColoring {
  EdgeId e = -1;
  ColorSet e_colors;
  EdgeColoring colors;

  bool assigned(EdgeId x, Color c) const { return x == e ? e_colors.contains(c) : colors[x] == c; }
  bool operator==(const EColoring&) const = default;
};

Verdict verify_e_coloring(const PlaneMultigraph& g, const EColoring& ec);

struct EColorOptions {
  long long node_budget = 5'000'000;
};

struct EColoringResult {
  SearchStatus status = SearchStatus::none_within_budget;
  std::optional<EColoring> ecoloring;
  long long nodes = 0;
};

/// Colour sets of size three are tried before size five, each in
/// lexicographic order; the other edges are filled in id order.
EColoringResult find_e_coloring(const PlaneMultigraph& g, EdgeId e, const EColorOptions& options = {});

/// Visits every e-colouring in search order until `visit` returns false.
/// Returns the number visited. Throws CapExceeded above kOracleCap edges.
long long for_each_e_coloring(const PlaneMultigraph& g, EdgeId e,
                              const std::function<bool(const EColoring&)>& visit);

/// Three colours on e, one of which sits on two further edges at each end.
bool is_canonical_trigon_shape(const PlaneMultigraph& g, const EColoring& ec);

inline constexpr int kCanonicalMoveBound = 12;

struct CanonicalOutcome {
  enum class Kind { canonical, proper_coloring };
  Kind kind = Kind::canonical;
  EColoring ecoloring;                 // the last e-colouring reached
  std::optional<EdgeColoring> proper;  // set for proper_coloring
  std::vector<std::string> moves;
  bool unchanged = false;
};

/// Rewrites an e-colouring with e in a multigon of order >= 3 into the
/// canonical shape, using colour permutations, two-colour chain swaps and
/// changes to e's colour set only. Throws PreconditionError on a bad premise
/// and Error when the move bound is exceeded.
CanonicalOutcome canonicalize_trigon(const PlaneMultigraph& g, const EColoring& ec);

struct Mate {
  Color c = Color::alpha;
  std::vector<VertexId> side;
  std::vector<EdgeId> edges;
  std::array<EdgeId, kColorCount> profile{};  // for c' != c the unique member assigned c'; -1 at c
  int c_edges = 0;                             // members assigned c, e included when it carries c
  bool trivial = false;
  bool five_color_e = false;
};

struct MateOptions {
  int cap = kDefaultCutCap;
  bool extract_on_failure = false;
};

struct MateResult {
  enum class Kind { found, none_found, proper_coloring };
  Kind kind = Kind::none_found;
  std::optional<Mate> mate;
  std::vector<Mate> short_witnesses;  // non-trivial profiles with fewer than five c-edges
  std::optional<EdgeColoring> proper;
  long long cuts_examined = 0;
};

MateResult find_mate(const PlaneMultigraph& g, const EColoring& ec, Color c, const MateOptions& options = {});

/// Checks the mate profile on an arbitrary side; used by the search and by tests.
std::optional<Mate> mate_on_side(const PlaneMultigraph& g, const EColoring& ec, Color c, VertexMask side);

/// Proper colouring from an e-colouring: the parallel-edge move when it
/// applies, otherwise the solver with the given budget.
std::optional<EdgeColoring> extract_proper_coloring(const PlaneMultigraph& g, const EColoring& ec,
                                                    long long budget = 1'000'000);

}  // namespace tjoin
