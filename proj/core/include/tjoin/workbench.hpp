#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tjoin/color.hpp"
#include "tjoin/plane_graph.hpp"

namespace tjoin {

/// Generator name plus its single integer parameter (prism size, cycle length).
struct InstanceSpec {
  std::string name;
  int param = 0;

  std::string label() const;  // "dk4", "doubled-prism(5)"
  bool operator==(const InstanceSpec&) const = default;
};

/// Accepts "dq3", "doubled-prism(5)" and "doubled-prism:5".
InstanceSpec parse_instance_spec(std::string_view text);

/// Known names: hexabond, dk4, c4x3, dq3, doubled-prism (n >= 3),
/// doubled-dodecahedron, tripled-cycle (n >= 3).
PlaneMultigraph generate(const InstanceSpec& spec);

/// hexabond, dk4, c4x3, dq3, doubled-prism(3..6), doubled-dodecahedron.
std::vector<InstanceSpec> named_instances();

struct Point {
  double x = 0;
  double y = 0;
};

/// Simple plane graph from a straight-line drawing. Edges are sorted with the
/// smaller endpoint first; edge i gets darts 2i (at the smaller end) and 2i+1.
PlaneMultigraph from_straight_line(const std::vector<Point>& points,
                                   std::vector<std::pair<VertexId, VertexId>> edges);

/// Replaces edge i by m parallel copies with ids m*i .. m*i+m-1, all adjacent
/// in both rotations, so every original face keeps its degree.
PlaneMultigraph multiply_edges(const PlaneMultigraph& g, int m);

inline constexpr int kOracleCap = 14;

struct OracleResult {
  std::optional<EdgeColoring> coloring;  // nullopt means proven none
  long long nodes = 0;
};

/// Plain exhaustive search: edges in id order, colours ascending, no pruning
/// beyond properness. Throws CapExceeded above `cap` edges.
OracleResult oracle_coloring(const PlaneMultigraph& g, int cap = kOracleCap);

PlaneMultigraph read_graph_file(const std::string& path);

}  // namespace tjoin
