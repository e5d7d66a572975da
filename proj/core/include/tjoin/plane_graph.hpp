#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tjoin {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;
using MultigonId = int;

enum class DartEnd : unsigned char { tail, head };

struct Dart {
  DartId id;
  EdgeId edge;
  DartEnd end;
};

/// A face as the orbit of the face-tracing permutation.
struct Face {
  FaceId id;
  std::vector<DartId> boundary;  // starts at the smallest dart of the orbit
  int degree() const { return static_cast<int>(boundary.size()); }
};

/// Connected loopless plane multigraph stored as a rotation system.
///
/// Every edge owns two darts; each vertex keeps its darts in counterclockwise
/// order. Faces are the orbits of `face_next(d) = rotation successor of
/// reverse(d) at the head of d`. The constructor rejects anything that is not
/// a valid connected plane embedding (checked through Euler's formula), so a
/// value of this type is always a plane graph.
class PlaneMultigraph {
 public:
  /// `rotations[v]` lists the darts leaving v counterclockwise, `edges[e]` is
  /// the (tail, head) dart pair of e. Dart ids must be exactly 0..2E-1.
  PlaneMultigraph(int vertex_count, std::vector<std::vector<DartId>> rotations,
                  std::vector<std::array<DartId, 2>> edges,
                  std::optional<std::vector<VertexId>> terminals = std::nullopt);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  std::span<const DartId> rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<DartId>>& rotations() const { return rotations_; }
  const std::vector<std::array<DartId, 2>>& edges() const { return edges_; }
  std::array<DartId, 2> edge_darts(EdgeId e) const { return edges_[e]; }

  Dart dart(DartId d) const { return {d, dart_edge_[d], dart_end_[d]}; }
  EdgeId edge_of(DartId d) const { return dart_edge_[d]; }
  DartId reverse(DartId d) const;
  VertexId origin(DartId d) const { return dart_vertex_[d]; }
  VertexId target(DartId d) const { return dart_vertex_[reverse(d)]; }
  std::array<VertexId, 2> endpoints(EdgeId e) const {
    return {dart_vertex_[edges_[e][0]], dart_vertex_[edges_[e][1]]};
  }
  /// The endpoint of e that is not v (v must be an endpoint).
  VertexId other_end(EdgeId e, VertexId v) const;

  DartId rotation_next(DartId d) const;
  DartId rotation_prev(DartId d) const;
  DartId face_next(DartId d) const { return rotation_next(reverse(d)); }

  FaceId face_of(DartId d) const { return dart_face_[d]; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  bool is_regular(int k) const;

  std::span<const VertexId> terminals() const { return terminals_; }
  bool terminals_explicit() const { return terminals_explicit_; }

  bool operator==(const PlaneMultigraph& o) const {
    return rotations_ == o.rotations_ && edges_ == o.edges_ && terminals_ == o.terminals_ &&
           terminals_explicit_ == o.terminals_explicit_;
  }

 private:
  std::vector<std::vector<DartId>> rotations_;
  std::vector<std::array<DartId, 2>> edges_;
  std::vector<VertexId> terminals_;
  bool terminals_explicit_ = false;

  std::vector<EdgeId> dart_edge_;
  std::vector<DartEnd> dart_end_;
  std::vector<VertexId> dart_vertex_;
  std::vector<int> dart_slot_;  // index of the dart inside its vertex rotation
  std::vector<FaceId> dart_face_;
  std::vector<Face> faces_;
};

/// Parses the line-oriented `planegraph v1` format or its JSON mirror.
PlaneMultigraph parse_plane_graph(std::string_view text);
std::string serialize_text(const PlaneMultigraph& g);
std::string serialize_json(const PlaneMultigraph& g);

std::vector<Face> trace_faces(const PlaneMultigraph& g);

/// Maximal bundle of parallel edges, consecutive in both rotations.
struct Multigon {
  MultigonId id;
  VertexId u;  // smaller endpoint
  VertexId v;
  std::vector<EdgeId> edges;     // in series order
  std::vector<FaceId> bigons;    // bigons between consecutive edges
  bool cyclic = false;           // every face around the bundle is a bigon
  std::array<FaceId, 2> sides{-1, -1};  // outer faces at edges.front()/edges.back()

  int order() const { return static_cast<int>(edges.size()); }
};

std::vector<Multigon> find_multigons(const PlaneMultigraph& g);

enum class ItemKind : unsigned char { face, multigon };

/// Either a non-bigon face or a multigon; the objects that carry charge.
struct ItemRef {
  ItemKind kind;
  int id;
  auto operator<=>(const ItemRef&) const = default;
};

/// One boundary position of a face: the dart walked and what lies across it.
struct BoundaryPosition {
  DartId dart;
  EdgeId edge;
  ItemRef across;
};

struct FaceInfo {
  FaceId id = -1;
  int degree = 0;
  bool bigon = false;  // bigon faces live inside multigons and carry no charge
  std::vector<BoundaryPosition> boundary;  // empty for bigons
  std::vector<VertexId> corners;           // corners[i] = origin of boundary[i].dart
  int bigness = 0;  // positions whose far side is a face of degree >= 4
  int bigon_count = 0;
  int trigon_count = 0;
  int quadragon_count = 0;
  int multigon_count = 0;
  int single_count = 0;
  bool dangerous = false;
};

struct FIncidence {
  FaceId face;
  int position;  // pair (position, position + 1) on the boundary of `face`
  ItemRef first;
  ItemRef second;
};

struct FaceClassification {
  std::vector<FaceInfo> faces;  // indexed by face id
  std::vector<Multigon> multigons;
  std::vector<bool> multigon_dangerous;
  std::vector<MultigonId> multigon_of_edge;  // -1 for edges outside multigons
  std::map<std::pair<FaceId, FaceId>, int> face_face;          // with multiplicity
  std::map<std::pair<FaceId, MultigonId>, int> face_multigon;  // with multiplicity
  std::vector<std::pair<MultigonId, MultigonId>> multigon_incidence;  // share a vertex
  std::vector<FIncidence> f_incidence;

  const FaceInfo& face(FaceId f) const { return faces[f]; }
  int degree_of(FaceId f) const { return faces[f].degree; }
  /// A face item whose face has degree >= 4.
  bool is_big_face(ItemRef item) const {
    return item.kind == ItemKind::face && faces[item.id].degree >= 4;
  }
  int order_of(ItemRef item) const {
    return item.kind == ItemKind::multigon ? multigons[item.id].order() : 1;
  }
  bool is_multigon_of_order(ItemRef item, int order) const {
    return item.kind == ItemKind::multigon && multigons[item.id].order() == order;
  }
  /// Positions on the boundary of f at which `item` lies across.
  std::vector<int> positions_of(FaceId f, ItemRef item) const;
  /// Non-bigon faces in increasing id order.
  std::vector<FaceId> charged_faces() const;
};

/// Requires every multigon to be linear.
FaceClassification classify(const PlaneMultigraph& g);

}  // namespace tjoin
