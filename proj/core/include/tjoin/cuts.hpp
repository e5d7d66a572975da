#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tjoin/color.hpp"
#include "tjoin/plane_graph.hpp"

namespace tjoin {

inline constexpr int kDefaultCutCap = 16;
inline constexpr int kMaxCutCap = 30;

using VertexMask = std::uint64_t;

struct Cut {
  std::vector<VertexId> side;  // sorted
  int size = 0;
  bool odd = false;    // some side has odd cardinality
  bool t_odd = false;  // |side ∩ T| odd
  bool trivial = false;
  bool empty_side = false;  // the odd-|V| convention: side is empty, size 0
};

VertexMask side_mask(std::span<const VertexId> side);
std::vector<VertexId> mask_side(VertexMask mask);

/// Precomputed endpoint masks so subset enumeration stays cheap.
class CutCounter {
 public:
  explicit CutCounter(const PlaneMultigraph& g);
  int size(VertexMask side) const;
  bool crosses(EdgeId e, VertexMask side) const;
  std::span<const std::uint64_t> edge_masks() const { return masks_; }

 private:
  std::vector<std::uint64_t> masks_;  // bit pattern of both endpoints
};

/// Throws PreconditionError for an empty or full side.
Cut cut_size(const PlaneMultigraph& g, std::span<const VertexId> side);
Cut make_cut(const PlaneMultigraph& g, VertexMask side);
std::vector<EdgeId> cut_edges(const PlaneMultigraph& g, VertexMask side);

struct TCutParity {
  long long t_cuts = 0;
  long long even = 0;
  long long odd = 0;
  bool same_parity() const { return even == 0 || odd == 0; }
};

struct OddCutReport {
  Cut min_odd;
  std::optional<Cut> min_nontrivial;
  TCutParity t_parity;
  long long subsets = 0;
};

/// Brute force over every side containing vertex 0. Throws CapExceeded when
/// the vertex count is above `cap`. Ties go to the smallest side mask.
OddCutReport min_odd_cut(const PlaneMultigraph& g, int cap = kDefaultCutCap);

struct CutFilter {
  bool nontrivial_only = false;
  std::optional<int> max_size;
};

std::vector<Cut> enumerate_odd_cuts(const PlaneMultigraph& g, CutFilter filter = {},
                                    int cap = kDefaultCutCap);

struct SplitResult {
  PlaneMultigraph part_a;  // side A replaced by one vertex
  PlaneMultigraph part_b;  // side B replaced by one vertex
  VertexId hub_a = -1;
  VertexId hub_b = -1;
  std::vector<EdgeId> edge_in_a;  // edge of part_a -> edge of G
  std::vector<EdgeId> edge_in_b;
  std::vector<EdgeId> cut;        // cut edges of G, ascending
  int original_edges = 0;
};

/// Needs a non-trivial odd cut of size exactly six with both sides connected.
SplitResult split_along_cut(const PlaneMultigraph& g, const Cut& cut);

/// Permutes `col_b` so the cut edges agree with `col_a`, then merges.
EdgeColoring combine_colorings(const SplitResult& split, const EdgeColoring& col_a,
                               const EdgeColoring& col_b);

}  // namespace tjoin
