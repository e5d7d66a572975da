#include "tjoin/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tjoin/errors.hpp"

namespace tjoin {

namespace {

std::string str(auto... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace

PlaneMultigraph::PlaneMultigraph(int vertex_count, std::vector<std::vector<DartId>> rotations,
                                 std::vector<std::array<DartId, 2>> edges,
                                 std::optional<std::vector<VertexId>> terminals)
    : rotations_(std::move(rotations)), edges_(std::move(edges)) {
  if (vertex_count < 1) throw InputError("vertex count must be positive");
  if (static_cast<int>(rotations_.size()) != vertex_count)
    throw InputError(str("expected ", vertex_count, " rotations, got ", rotations_.size()));
  if (edges_.empty()) throw InputError("graph has no edges");

  const int darts = dart_count();
  dart_edge_.assign(darts, -1);
  dart_end_.assign(darts, DartEnd::tail);
  dart_vertex_.assign(darts, -1);
  dart_slot_.assign(darts, -1);

  for (EdgeId e = 0; e < edge_count(); ++e) {
    for (int end = 0; end < 2; ++end) {
      DartId d = edges_[e][end];
      if (d < 0 || d >= darts) throw InputError(str("dangling dart ", d, " in edge ", e));
      if (dart_edge_[d] != -1) throw InputError(str("duplicate dart ", d, " in edge table"));
      dart_edge_[d] = e;
      dart_end_[d] = end == 0 ? DartEnd::tail : DartEnd::head;
    }
  }

  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      DartId d = rot[i];
      if (d < 0 || d >= darts) throw InputError(str("dangling dart ", d, " at vertex ", v));
      if (dart_vertex_[d] != -1)
        throw InputError(str("duplicate dart ", d, " in rotation of vertex ", v));
      dart_vertex_[d] = v;
      dart_slot_[d] = i;
    }
  }
  for (DartId d = 0; d < darts; ++d)
    if (dart_vertex_[d] == -1) throw InputError(str("dangling dart ", d, " not in any rotation"));

  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto [a, b] = endpoints(e);
    if (a == b) throw InputError(str("loop edge ", e, " at vertex ", a));
  }

  // connectivity
  std::vector<char> seen(vertex_count, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (DartId d : rotations_[v]) {
      VertexId w = target(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) throw InputError("disconnected graph");

  dart_face_.assign(darts, -1);
  for (DartId start = 0; start < darts; ++start) {
    if (dart_face_[start] != -1) continue;
    Face f{static_cast<FaceId>(faces_.size()), {}};
    for (DartId d = start; dart_face_[d] == -1; d = face_next(d)) {
      dart_face_[d] = f.id;
      f.boundary.push_back(d);
    }
    faces_.push_back(std::move(f));
  }
  if (vertex_count - edge_count() + face_count() != 2)
    throw InputError(str("Euler check failure: V-E+F = ", vertex_count - edge_count() + face_count()));

  if (terminals) {
    terminals_ = std::move(*terminals);
    std::set<VertexId> distinct;
    for (VertexId t : terminals_) {
      if (t < 0 || t >= vertex_count) throw InputError(str("terminal ", t, " out of range"));
      if (!distinct.insert(t).second) throw InputError(str("terminal ", t, " listed twice"));
    }
    terminals_explicit_ = true;
  } else {
    terminals_.resize(vertex_count);
    std::iota(terminals_.begin(), terminals_.end(), 0);
  }
  if (terminals_.size() % 2 != 0) throw InputError("odd |T|");
}

DartId PlaneMultigraph::reverse(DartId d) const {
  const auto& pair = edges_[dart_edge_[d]];
  return pair[0] == d ? pair[1] : pair[0];
}

VertexId PlaneMultigraph::other_end(EdgeId e, VertexId v) const {
  auto [a, b] = endpoints(e);
  return a == v ? b : a;
}

DartId PlaneMultigraph::rotation_next(DartId d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  int i = dart_slot_[d] + 1;
  return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

DartId PlaneMultigraph::rotation_prev(DartId d) const {
  const auto& rot = rotations_[dart_vertex_[d]];
  int i = dart_slot_[d];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

bool PlaneMultigraph::is_regular(int k) const {
  return std::all_of(rotations_.begin(), rotations_.end(),
                     [k](const auto& r) { return static_cast<int>(r.size()) == k; });
}

std::vector<Face> trace_faces(const PlaneMultigraph& g) { return g.faces(); }

// ---------------------------------------------------------------------------
// serialization

namespace {

PlaneMultigraph parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(str("malformed JSON: ", e.what()));
  }
  try {
    if (j.value("planegraph", std::string{}) != "v1") throw InputError("missing planegraph v1 tag");
    int n = j.at("vertices").get<int>();
    auto rot = j.at("rot").get<std::vector<std::vector<DartId>>>();
    auto edges = j.at("edge").get<std::vector<std::array<DartId, 2>>>();
    std::optional<std::vector<VertexId>> terminals;
    if (j.contains("T")) terminals = j.at("T").get<std::vector<VertexId>>();
    return PlaneMultigraph(n, std::move(rot), std::move(edges), std::move(terminals));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(str("malformed JSON graph: ", e.what()));
  }
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

int to_int(std::string_view w, int line_no) {
  int value = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc{} || p != w.data() + w.size())
    throw InputError(str("line ", line_no, ": expected integer, got '", w, "'"));
  return value;
}

PlaneMultigraph parse_text(std::string_view text) {
  int n = -1;
  bool header = false;
  std::vector<std::optional<std::vector<DartId>>> rot;
  std::vector<std::optional<std::array<DartId, 2>>> edges;
  std::optional<std::vector<VertexId>> terminals;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto w = split_words(line);
    if (w.empty()) continue;

    if (!header) {
      if (w.size() != 2 || w[0] != "planegraph" || w[1] != "v1")
        throw InputError(str("line ", line_no, ": expected 'planegraph v1'"));
      header = true;
    } else if (w[0] == "vertices") {
      if (n != -1 || w.size() != 2) throw InputError(str("line ", line_no, ": bad vertices line"));
      n = to_int(w[1], line_no);
      if (n < 1) throw InputError(str("line ", line_no, ": vertex count must be positive"));
      rot.assign(n, std::nullopt);
    } else if (w[0] == "rot") {
      if (n == -1 || w.size() < 2) throw InputError(str("line ", line_no, ": bad rot line"));
      int v = to_int(w[1], line_no);
      if (v < 0 || v >= n) throw InputError(str("line ", line_no, ": vertex ", v, " out of range"));
      if (rot[v]) throw InputError(str("line ", line_no, ": rotation of vertex ", v, " given twice"));
      std::vector<DartId> r;
      for (size_t i = 2; i < w.size(); ++i) r.push_back(to_int(w[i], line_no));
      rot[v] = std::move(r);
    } else if (w[0] == "edge") {
      if (w.size() != 4) throw InputError(str("line ", line_no, ": bad edge line"));
      int e = to_int(w[1], line_no);
      if (e < 0) throw InputError(str("line ", line_no, ": negative edge id"));
      if (static_cast<int>(edges.size()) <= e) edges.resize(e + 1);
      if (edges[e]) throw InputError(str("line ", line_no, ": edge ", e, " given twice"));
      edges[e] = std::array<DartId, 2>{to_int(w[2], line_no), to_int(w[3], line_no)};
    } else if (w[0] == "T") {
      if (terminals) throw InputError(str("line ", line_no, ": T given twice"));
      std::vector<VertexId> t;
      for (size_t i = 1; i < w.size(); ++i) t.push_back(to_int(w[i], line_no));
      terminals = std::move(t);
    } else {
      throw InputError(str("line ", line_no, ": unknown keyword '", w[0], "'"));
    }
  }
  if (!header) throw InputError("empty input");
  if (n == -1) throw InputError("missing vertices line");

  std::vector<std::vector<DartId>> rotations(n);
  for (int v = 0; v < n; ++v) {
    if (!rot[v]) throw InputError(str("missing rotation for vertex ", v));
    rotations[v] = std::move(*rot[v]);
  }
  std::vector<std::array<DartId, 2>> edge_table;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (!edges[e]) throw InputError(str("edge ids not dense: edge ", e, " missing"));
    edge_table.push_back(*edges[e]);
  }
  return PlaneMultigraph(n, std::move(rotations), std::move(edge_table), std::move(terminals));
}

}  // namespace

PlaneMultigraph parse_plane_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::string serialize_text(const PlaneMultigraph& g) {
  std::ostringstream out;
  out << "planegraph v1\n";
  out << "vertices " << g.vertex_count() << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v;
    for (DartId d : g.rotation(v)) out << ' ' << d;
    out << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "edge " << e << ' ' << g.edges()[e][0] << ' ' << g.edges()[e][1] << "\n";
  if (g.terminals_explicit()) {
    out << "T";
    for (VertexId t : g.terminals()) out << ' ' << t;
    out << "\n";
  }
  return out.str();
}

std::string serialize_json(const PlaneMultigraph& g) {
  nlohmann::ordered_json j;
  j["planegraph"] = "v1";
  j["vertices"] = g.vertex_count();
  j["rot"] = g.rotations();
  j["edge"] = g.edges();
  if (g.terminals_explicit())
    j["T"] = std::vector<VertexId>(g.terminals().begin(), g.terminals().end());
  return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// multigons

std::vector<Multigon> find_multigons(const PlaneMultigraph& g) {
  struct Link {
    FaceId face;
    EdgeId other;
  };
  std::vector<std::vector<Link>> links(g.edge_count());
  for (const Face& f : g.faces()) {
    if (f.degree() != 2) continue;
    EdgeId a = g.edge_of(f.boundary[0]);
    EdgeId b = g.edge_of(f.boundary[1]);
    if (a == b) continue;
    links[a].push_back({f.id, b});
    links[b].push_back({f.id, a});
  }

  std::vector<char> done(g.edge_count(), 0);
  std::vector<Multigon> out;
  for (EdgeId seed = 0; seed < g.edge_count(); ++seed) {
    if (done[seed] || links[seed].empty()) continue;

    // collect the component, then walk it from its smallest end
    std::vector<EdgeId> comp;
    std::vector<EdgeId> stack{seed};
    done[seed] = 1;
    while (!stack.empty()) {
      EdgeId e = stack.back();
      stack.pop_back();
      comp.push_back(e);
      for (const Link& l : links[e])
        if (!done[l.other]) {
          done[l.other] = 1;
          stack.push_back(l.other);
        }
    }
    std::sort(comp.begin(), comp.end());
    EdgeId start = comp.front();
    bool cyclic = true;
    for (EdgeId e : comp)
      if (links[e].size() == 1) {
        start = e;
        cyclic = false;
        break;
      }

    Multigon m;
    m.id = static_cast<MultigonId>(out.size());
    m.cyclic = cyclic;
    EdgeId cur = start;
    FaceId via = -1;
    while (true) {
      m.edges.push_back(cur);
      const Link* next = nullptr;
      for (const Link& l : links[cur])
        if (l.face != via) {
          next = &l;
          break;
        }
      if (!next || next->other == start) {
        if (next && cyclic) m.bigons.push_back(next->face);
        break;
      }
      m.bigons.push_back(next->face);
      via = next->face;
      cur = next->other;
    }

    auto ends = g.endpoints(m.edges.front());
    m.u = std::min(ends[0], ends[1]);
    m.v = std::max(ends[0], ends[1]);
    if (!cyclic) {
      auto side_of = [&](EdgeId e, FaceId bigon) {
        auto darts = g.edge_darts(e);
        FaceId a = g.face_of(darts[0]);
        return a == bigon ? g.face_of(darts[1]) : a;
      };
      m.sides = {side_of(m.edges.front(), m.bigons.front()),
                 side_of(m.edges.back(), m.bigons.back())};
    }
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// classification

std::vector<int> FaceClassification::positions_of(FaceId f, ItemRef item) const {
  std::vector<int> out;
  const auto& b = faces[f].boundary;
  for (int i = 0; i < static_cast<int>(b.size()); ++i)
    if (b[i].across == item) out.push_back(i);
  return out;
}

std::vector<FaceId> FaceClassification::charged_faces() const {
  std::vector<FaceId> out;
  for (const FaceInfo& f : faces)
    if (!f.bigon) out.push_back(f.id);
  return out;
}

FaceClassification classify(const PlaneMultigraph& g) {
  FaceClassification c;
  c.multigons = find_multigons(g);
  for (const Multigon& m : c.multigons)
    if (m.cyclic) throw PreconditionError("degenerate cyclic multigon: classification needs linear multigons");

  c.multigon_of_edge.assign(g.edge_count(), -1);
  std::vector<char> in_bigon(g.face_count(), 0);
  for (const Multigon& m : c.multigons) {
    for (EdgeId e : m.edges) c.multigon_of_edge[e] = m.id;
    for (FaceId f : m.bigons) in_bigon[f] = 1;
  }

  c.faces.resize(g.face_count());
  for (const Face& face : g.faces()) {
    FaceInfo& info = c.faces[face.id];
    info.id = face.id;
    info.degree = face.degree();
    info.bigon = in_bigon[face.id];
    if (info.bigon) continue;
    for (DartId d : face.boundary) {
      EdgeId e = g.edge_of(d);
      MultigonId m = c.multigon_of_edge[e];
      ItemRef across = m >= 0 ? ItemRef{ItemKind::multigon, m}
                              : ItemRef{ItemKind::face, g.face_of(g.reverse(d))};
      info.boundary.push_back({d, e, across});
      info.corners.push_back(g.origin(d));
    }
  }

  for (FaceInfo& info : c.faces) {
    if (info.bigon) continue;
    for (const BoundaryPosition& p : info.boundary) {
      if (p.across.kind == ItemKind::face) {
        ++info.single_count;
        if (c.faces[p.across.id].degree >= 4) ++info.bigness;
        ++c.face_face[{info.id, p.across.id}];
      } else {
        ++info.multigon_count;
        switch (c.multigons[p.across.id].order()) {
          case 2: ++info.bigon_count; break;
          case 3: ++info.trigon_count; break;
          case 4: ++info.quadragon_count; break;
          default: break;
        }
        ++c.face_multigon[{info.id, p.across.id}];
      }
    }
    if (info.degree == 5)
      info.dangerous = (info.trigon_count == 2 && info.bigon_count >= 1) ||
                       (info.trigon_count == 1 && info.bigon_count >= 3);
    else if (info.degree == 7)
      info.dangerous = info.trigon_count == 3 && info.bigon_count == 3;

    const int deg = info.degree;
    for (int i = 0; i < deg; ++i)
      c.f_incidence.push_back({info.id, i, info.boundary[i].across, info.boundary[(i + 1) % deg].across});
  }

  for (size_t a = 0; a < c.multigons.size(); ++a)
    for (size_t b = a + 1; b < c.multigons.size(); ++b) {
      const Multigon& x = c.multigons[a];
      const Multigon& y = c.multigons[b];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v)
        c.multigon_incidence.emplace_back(static_cast<MultigonId>(a), static_cast<MultigonId>(b));
    }

  c.multigon_dangerous.assign(c.multigons.size(), false);
  for (const Multigon& m : c.multigons) {
    if (m.order() == 4) {
      c.multigon_dangerous[m.id] = true;
      continue;
    }
    if (m.order() != 3) continue;
    ItemRef t{ItemKind::multigon, m.id};
    for (FaceId f : m.sides) {
      const FaceInfo& info = c.faces[f];
      if (!info.dangerous) continue;
      const int deg = info.degree;
      for (int i : c.positions_of(f, t)) {
        ItemRef before = info.boundary[(i + deg - 1) % deg].across;
        ItemRef after = info.boundary[(i + 1) % deg].across;
        int multi = (before.kind == ItemKind::multigon && before != t) +
                    (after.kind == ItemKind::multigon && after != t);
        if ((deg == 5 && multi >= 1) || (deg == 7 && multi == 2)) c.multigon_dangerous[m.id] = true;
      }
    }
  }
  return c;
}

}  // namespace tjoin
