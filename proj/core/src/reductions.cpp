#include "tjoin/reductions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <sstream>

#include "tjoin/errors.hpp"

namespace tjoin {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string set_text(ColorSet s) {
  std::string out = "{";
  s.for_each([&](Color c) {
    if (out.size() > 1) out += ",";
    out += color_name(c);
  });
  return out + "}";
}

bool face_has_vertex(const PlaneMultigraph& g, FaceId f, VertexId v) {
  for (DartId d : g.face(f).boundary)
    if (g.origin(d) == v) return true;
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// swaps

namespace {

PlaneMultigraph build_swapped(const PlaneMultigraph& g, const SwapSpec& s) {
  const int half = s.k() / 2;
  std::vector<char> removed_dart(g.dart_count(), 0);
  for (EdgeId r : s.removed_edges) {
    removed_dart[g.edges()[r][0]] = 1;
    removed_dart[g.edges()[r][1]] = 1;
  }
  // anchor dart -> new darts to place right after it
  std::vector<std::vector<DartId>> after(g.dart_count());
  for (int i = 0; i < half; ++i) {
    const VertexId ends[2] = {s.vertices[2 * i], s.vertices[2 * i + 1]};
    const auto& boundary = g.face(s.anchor_faces[i]).boundary;
    const int deg = static_cast<int>(boundary.size());
    for (int end = 0; end < 2; ++end) {
      int j = 0;
      while (g.origin(boundary[j]) != ends[end]) ++j;
      const DartId d_in = boundary[mod(j - 1, deg)];
      after[g.reverse(d_in)].push_back(g.edges()[s.removed_edges[i]][end]);
    }
  }
  std::vector<std::vector<DartId>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (DartId x : g.rotation(v)) {
      if (!removed_dart[x]) rot[v].push_back(x);
      for (DartId n : after[x]) rot[v].push_back(n);
    }
  std::optional<std::vector<VertexId>> terminals;
  if (g.terminals_explicit()) terminals = std::vector<VertexId>(g.terminals().begin(), g.terminals().end());
  return PlaneMultigraph(g.vertex_count(), std::move(rot), g.edges(), std::move(terminals));
}

}  // namespace

Verdict validate_swap(const PlaneMultigraph& g, const SwapSpec& spec, SwapSpec* resolved) {
  const int k = spec.k();
  if (k != 4 && k != 6 && k != 8) return Verdict::reject("unsupported k = " + std::to_string(k));
  const int half = k / 2;
  std::set<VertexId> distinct;
  for (VertexId v : spec.vertices) {
    if (v < 0 || v >= g.vertex_count()) return Verdict::reject("vertex " + std::to_string(v) + " out of range");
    if (!distinct.insert(v).second) return Verdict::reject("swap vertices must be distinct");
  }
  if (static_cast<int>(spec.anchor_faces.size()) != half)
    return Verdict::reject("expected " + std::to_string(half) + " anchor faces");
  for (int i = 0; i < half; ++i) {
    FaceId f = spec.anchor_faces[i];
    if (f < 0 || f >= g.face_count()) return Verdict::reject("anchor face " + std::to_string(f) + " out of range");
    VertexId a = spec.vertices[2 * i], b = spec.vertices[2 * i + 1];
    if (!face_has_vertex(g, f, a) || !face_has_vertex(g, f, b))
      return Verdict::reject("new edge " + std::to_string(a) + "-" + std::to_string(b) +
                             " has an endpoint off anchor face " + std::to_string(f));
  }

  SwapSpec out = spec;
  if (!spec.removed_edges.empty() && static_cast<int>(spec.removed_edges.size()) != half)
    return Verdict::reject("expected " + std::to_string(half) + " removed edges");
  out.removed_edges.assign(half, -1);
  std::set<EdgeId> used;
  for (int i = 0; i < half; ++i) {
    const VertexId a = spec.vertices[2 * i + 1], b = spec.vertices[mod(2 * i + 2, k)];
    const std::string pair = std::to_string(a) + "-" + std::to_string(b);
    if (!spec.removed_edges.empty()) {
      EdgeId r = spec.removed_edges[i];
      if (r < 0 || r >= g.edge_count()) return Verdict::reject("removed edge id out of range");
      auto ends = g.endpoints(r);
      if (!((ends[0] == a && ends[1] == b) || (ends[0] == b && ends[1] == a)))
        return Verdict::reject("removed edge " + std::to_string(r) + " does not join " + pair);
      out.removed_edges[i] = r;
    } else {
      // prefer a copy bounding one of the two neighbouring anchor faces
      const FaceId near[2] = {spec.anchor_faces[i], spec.anchor_faces[(i + 1) % half]};
      EdgeId best = -1;
      std::pair<int, DartId> best_key{2, 0};
      for (DartId d : g.rotation(a)) {
        EdgeId r = g.edge_of(d);
        if (g.target(d) != b || used.count(r)) continue;
        auto darts = g.edge_darts(r);
        bool on_anchor = false;
        for (DartId x : darts)
          if (g.face_of(x) == near[0] || g.face_of(x) == near[1]) on_anchor = true;
        std::pair<int, DartId> key{on_anchor ? 0 : 1, std::min(darts[0], darts[1])};
        if (best == -1 || key < best_key) {
          best = r;
          best_key = key;
        }
      }
      if (best == -1) return Verdict::reject("removed edge " + pair + " absent");
      out.removed_edges[i] = best;
    }
    if (!used.insert(out.removed_edges[i]).second) return Verdict::reject("removed edge listed twice");
  }

  try {
    (void)build_swapped(g, out);
  } catch (const InputError& e) {
    return Verdict::reject(std::string("swap does not give a plane graph: ") + e.what());
  }
  if (resolved) *resolved = std::move(out);
  return Verdict::accept();
}

SwapResult apply_swap(const PlaneMultigraph& g, const SwapSpec& spec) {
  SwapSpec resolved;
  if (Verdict v = validate_swap(g, spec, &resolved); !v) throw PreconditionError("invalid swap: " + v.reason);
  PlaneMultigraph out = build_swapped(g, resolved);
  auto removed = resolved.removed_edges;
  return SwapResult{std::move(out), std::move(resolved), removed, removed};
}

CutPerturbation check_swap_cut_property(const PlaneMultigraph& g, const PlaneMultigraph& g2, int k, int cap) {
  if (g.vertex_count() != g2.vertex_count()) throw InputError("graphs differ in vertex count");
  const int n = g.vertex_count();
  if (n > std::min(cap, kMaxCutCap)) throw CapExceeded("cut perturbation check above the enumeration cap");
  CutPerturbation rep;
  rep.k = k;
  rep.bound = k == 8 ? 4 : 2;
  const CutCounter c1(g), c2(g2);
  const VertexMask full = (VertexMask{1} << n) - 1;
  std::vector<VertexMask> extremal;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    const VertexMask side = 1 | (bits << 1);
    if (side == full) continue;
    ++rep.subsets;
    const int delta = c2.size(side) - c1.size(side);
    const int mag = std::abs(delta);
    if (mag > rep.bound) ++rep.violations;
    if (mag > rep.max_abs_delta) {
      rep.max_abs_delta = mag;
      rep.extremal.clear();
    }
    if (mag == rep.max_abs_delta && rep.extremal.size() < 4) rep.extremal.push_back({mask_side(side), delta});
  }
  return rep;
}

std::vector<SwapSpec> enumerate_swaps(const PlaneMultigraph& g, int k, int limit) {
  if (k != 4 && k != 6 && k != 8) throw InputError("unsupported k");
  if (g.vertex_count() > 64) throw CapExceeded("swap enumeration supports at most 64 vertices");
  const int half = k / 2;
  std::vector<VertexMask> face_mask(g.face_count(), 0);
  for (const Face& f : g.faces())
    for (DartId d : f.boundary) face_mask[f.id] |= VertexMask{1} << g.origin(d);
  auto common_face = [&](VertexId a, VertexId b) -> FaceId {
    const VertexMask want = (VertexMask{1} << a) | (VertexMask{1} << b);
    for (FaceId f = 0; f < g.face_count(); ++f)
      if ((face_mask[f] & want) == want) return f;
    return -1;
  };

  std::vector<SwapSpec> out;
  std::set<std::vector<std::pair<VertexId, VertexId>>> seen;
  std::vector<std::pair<VertexId, VertexId>> picked;  // oriented removed edges (v_{2j}, v_{2j+1})
  VertexMask used = 0;

  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (static_cast<int>(picked.size()) == half) {
      SwapSpec s;
      s.vertices.push_back(picked.back().second);
      for (int j = 0; j < half; ++j) {
        s.vertices.push_back(picked[j].first);
        if (j + 1 < half) s.vertices.push_back(picked[j].second);
      }
      std::vector<std::pair<VertexId, VertexId>> key;
      for (int i = 0; i < half; ++i) {
        VertexId a = s.vertices[2 * i], b = s.vertices[2 * i + 1];
        FaceId f = common_face(a, b);
        if (f < 0) return;
        s.anchor_faces.push_back(f);
        key.push_back({std::min(a, b), std::max(a, b)});
        VertexId c = s.vertices[2 * i + 1], d = s.vertices[mod(2 * i + 2, k)];
        key.push_back({-1 - std::min(c, d), -1 - std::max(c, d)});
      }
      std::sort(key.begin(), key.end());
      if (seen.count(key)) return;
      if (!validate_swap(g, s)) return;
      seen.insert(key);
      out.push_back(std::move(s));
      return;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto ends = g.endpoints(e);
      for (int flip = 0; flip < 2; ++flip) {
        const VertexId a = ends[flip], b = ends[1 - flip];
        const VertexMask m = (VertexMask{1} << a) | (VertexMask{1} << b);
        if (used & m) continue;
        if (!picked.empty() && common_face(picked.back().second, a) < 0) continue;
        picked.push_back({a, b});
        used |= m;
        self(self);
        used &= ~m;
        picked.pop_back();
        if (static_cast<int>(out.size()) >= limit) return;
      }
    }
  };
  dfs(dfs);
  return out;
}

// ---------------------------------------------------------------------------
// catalog

std::string_view lemma_id(Lemma l) {
  switch (l) {
    case Lemma::odd_cut: return "odd-cut";
    case Lemma::multigon_order: return "multigon-order";
    case Lemma::face_quadragon: return "face-quadragon";
    case Lemma::face_trigon: return "face-trigon";
    case Lemma::three_face_trigon: return "3-face-trigon";
    case Lemma::three_face_23_bigon: return "3-face-23-bigon";
    case Lemma::trigon_2big: return "trigon-2big";
    case Lemma::three_face_1_bigon: return "3-face-1-bigon";
    case Lemma::face35_bigon_trigon: return "35-face-bigon-trigon";
    case Lemma::four_face_trigon: return "4-face-trigon";
    case Lemma::four_face_3_bigon: return "4-face-3-bigon";
    case Lemma::five_face_5_multi: return "5-face-5-multi";
    case Lemma::six_face_23: return "6-face-23";
    case Lemma::six_face_32: return "6-face-32";
    case Lemma::seven_face_trigon: return "7-face-trigon";
    case Lemma::eight_face: return "8-face";
    case Lemma::danger_a: return "danger-A";
    case Lemma::danger_b: return "danger-B";
  }
  return "?";
}

std::vector<Lemma> all_lemmas() {
  std::vector<Lemma> out;
  for (int i = 0; i < kLemmaCount; ++i) out.push_back(static_cast<Lemma>(i));
  return out;
}

std::optional<Lemma> parse_lemma_id(std::string_view id) {
  for (Lemma l : all_lemmas())
    if (lemma_id(l) == id) return l;
  return std::nullopt;
}

namespace {

class Catalog {
 public:
  Catalog(const PlaneMultigraph& g, const FaceClassification& cls) : g_(g), c_(cls) {}

  const FaceInfo& face(FaceId f) const { return c_.faces[f]; }
  int deg(FaceId f) const { return c_.faces[f].degree; }
  int big(FaceId f) const { return c_.faces[f].bigness; }
  ItemRef at(FaceId f, int p) const { return face(f).boundary[mod(p, deg(f))].across; }
  VertexId corner(FaceId f, int p) const { return face(f).corners[mod(p, deg(f))]; }
  bool order_at(FaceId f, int p, int order) const { return c_.is_multigon_of_order(at(f, p), order); }
  bool single_at(FaceId f, int p) const { return at(f, p).kind == ItemKind::face; }

  // the face on the far side of position p, looking past a multigon
  FaceId beyond(FaceId f, int p) const {
    const BoundaryPosition& pos = face(f).boundary[mod(p, deg(f))];
    if (pos.across.kind == ItemKind::face) return pos.across.id;
    const Multigon& m = c_.multigons[pos.across.id];
    return pos.edge == m.edges.front() ? m.sides[1] : m.sides[0];
  }

  // on face h, the neighbour of a other than b (a and b consecutive on h)
  VertexId other_neighbour(FaceId h, VertexId a, VertexId b) const {
    const int n = deg(h);
    for (int j = 0; j < n; ++j) {
      if (corner(h, j) == a && corner(h, j + 1) == b) return corner(h, j - 1);
      if (corner(h, j) == b && corner(h, j + 1) == a) return corner(h, j + 2);
    }
    return -1;
  }

  std::vector<ConfigMatch> run(Lemma l) const {
    std::vector<ConfigMatch> out;
    switch (l) {
      case Lemma::odd_cut: break;  // handled with the cut cap
      case Lemma::multigon_order: break;
      case Lemma::face_quadragon: face_with(out, 4, l); break;
      case Lemma::face_trigon: face_with(out, 3, l); break;
      case Lemma::three_face_trigon: three_face_trigon(out); break;
      case Lemma::three_face_23_bigon: three_face_23(out); break;
      case Lemma::trigon_2big: trigon_2big(out); break;
      case Lemma::three_face_1_bigon: three_face_1(out); break;
      case Lemma::face35_bigon_trigon: face35(out); break;
      case Lemma::four_face_trigon: four_face_trigon(out); break;
      case Lemma::four_face_3_bigon: four_face_3(out); break;
      case Lemma::five_face_5_multi: five_face(out); break;
      case Lemma::six_face_23: six_face_23(out); break;
      case Lemma::six_face_32: six_face_32(out); break;
      case Lemma::seven_face_trigon: seven_face(out); break;
      case Lemma::eight_face: eight_face(out); break;
      case Lemma::danger_a: danger(out, false); break;
      case Lemma::danger_b: danger(out, true); break;
    }
    return out;
  }

 private:
  std::vector<FaceId> faces_of_degree(int d) const {
    std::vector<FaceId> out;
    for (const FaceInfo& f : c_.faces)
      if (!f.bigon && f.degree == d) out.push_back(f.id);
    return out;
  }

  std::vector<VertexId> corners_from(FaceId f, int s, int n) const {
    std::vector<VertexId> out;
    for (int i = 0; i < n; ++i) out.push_back(corner(f, s + i));
    return out;
  }

  // face-quadragon (order 4: >= 5-big) and face-trigon (order 3: a single edge)
  void face_with(std::vector<ConfigMatch>& out, int order, Lemma l) const {
    for (const FaceInfo& f : c_.faces) {
      if (f.bigon) continue;
      std::set<MultigonId> ms;
      for (const auto& p : f.boundary)
        if (c_.is_multigon_of_order(p.across, order)) ms.insert(p.across.id);
      if (ms.empty()) continue;
      ConfigMatch m{l, {f.id}, {ms.begin(), ms.end()}};
      if (order == 4) {
        m.conclusion_holds = f.bigness >= 5;
        m.detail = "face " + std::to_string(f.id) + " is " + std::to_string(f.bigness) + "-big";
      } else {
        m.conclusion_holds = f.single_count >= 1;
        m.detail = "face " + std::to_string(f.id) + " has " + std::to_string(f.single_count) +
                   " edges outside multigons";
      }
      out.push_back(std::move(m));
    }
  }

  void three_face_trigon(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(3))
      for (int i = 0; i < 3; ++i) {
        if (!order_at(f, i, 3)) continue;
        const FaceId side = beyond(f, i);
        const FaceId f2 = beyond(f, i + 2);
        ConfigMatch m{Lemma::three_face_trigon, {f, f2, side}, {at(f, i).id}};
        const bool single = face(f).multigon_count == 1;
        const bool others = single && big(beyond(f, i + 1)) >= 5 && big(f2) >= 5;
        m.conclusion_holds = single && others && big(side) >= 5;
        const VertexId v1 = corner(f, i), v2 = corner(f, i + 1), v3 = corner(f, i + 2);
        m.vertices = {v1, v2, v3, other_neighbour(f2, v1, v3)};
        m.detail = "multigons on face: " + std::to_string(face(f).multigon_count) + ", neighbour bigness " +
                   std::to_string(big(beyond(f, i + 1))) + "," + std::to_string(big(f2)) +
                   ", far side of trigon " + std::to_string(big(side)) + "-big";
        out.push_back(std::move(m));
      }
  }

  void three_face_23(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(3)) {
      if (face(f).bigon_count < 2) continue;
      int i = 0;
      while (!(order_at(f, i, 2) && order_at(f, i + 1, 2))) ++i;
      ConfigMatch m{Lemma::three_face_23_bigon, {f}};
      bool far_ok = true;
      std::vector<int> far;
      for (int p = 0; p < 3; ++p)
        if (order_at(f, p, 2)) {
          m.multigons.push_back(at(f, p).id);
          far.push_back(big(beyond(f, p)));
          far_ok = far_ok && far.back() >= 5;
        }
      m.conclusion_holds = face(f).bigon_count == 2 && far_ok;
      const VertexId v1 = corner(f, i + 1), v2 = corner(f, i), v3 = corner(f, i + 2);
      const FaceId f2 = beyond(f, i + 1);
      m.faces.push_back(f2);
      m.vertices = {v1, v2, v3, other_neighbour(f2, v1, v3)};
      m.detail = std::to_string(face(f).bigon_count) + " bigons; far sides " + join_ints(far) + "-big";
      out.push_back(std::move(m));
    }
  }

  void trigon_2big(std::vector<ConfigMatch>& out) const {
    for (const Multigon& t : c_.multigons) {
      if (t.order() != 3) continue;
      const int b0 = big(t.sides[0]), b1 = big(t.sides[1]);
      if (b0 > 2 && b1 > 2) continue;
      ConfigMatch m{Lemma::trigon_2big, {t.sides[0], t.sides[1]}, {t.id}};
      m.conclusion_holds = b0 >= 4 || b1 >= 4;
      m.detail = "sides " + std::to_string(b0) + "-big and " + std::to_string(b1) + "-big";
      out.push_back(std::move(m));
    }
  }

  void three_face_1(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(3)) {
      if (face(f).bigon_count != 1 || face(f).multigon_count != 1) continue;
      int i = 0;
      while (!order_at(f, i, 2)) ++i;
      const FaceId far = beyond(f, i);
      if (big(far) > 2) continue;
      const FaceId f1 = beyond(f, i + 1), f2 = beyond(f, i + 2);
      ConfigMatch m{Lemma::three_face_1_bigon, {f, f2, far}, {at(f, i).id}};
      m.conclusion_holds = big(f1) >= 3 && big(f2) >= 3;
      const VertexId v1 = corner(f, i), v2 = corner(f, i + 1), v3 = corner(f, i + 2);
      m.vertices = {v1, v2, v3, other_neighbour(f2, v1, v3)};
      m.detail = "other faces " + std::to_string(big(f1)) + "-big and " + std::to_string(big(f2)) + "-big";
      out.push_back(std::move(m));
    }
  }

  void face35(std::vector<ConfigMatch>& out) const {
    for (FaceId f5 : faces_of_degree(5)) {
      if (!face(f5).dangerous) continue;
      for (int i = 0; i < 5; ++i) {
        if (!order_at(f5, i, 3)) continue;
        for (int dir : {1, -1}) {
          // single edge to a 3-face behind v1, bigon ahead of v2
          const int back = dir == 1 ? i - 1 : i + 1;
          const int ahead = dir == 1 ? i + 1 : i - 1;
          if (!single_at(f5, back) || !order_at(f5, ahead, 2)) continue;
          const FaceId f3 = at(f5, back).id;
          if (deg(f3) != 3) continue;
          std::vector<VertexId> v(5);
          for (int j = 0; j < 5; ++j) v[j] = corner(f5, dir == 1 ? i + j : i + 1 - j);
          const VertexId v6 = other_neighbour(f3, v[0], v[4]);
          // the position of f3 between v1 and v6 must be a bigon
          bool bigon16 = false;
          for (int p = 0; p < 3; ++p) {
            VertexId a = corner(f3, p), b = corner(f3, p + 1);
            if (((a == v[0] && b == v6) || (a == v6 && b == v[0])) && order_at(f3, p, 2)) bigon16 = true;
          }
          if (!bigon16) continue;
          ConfigMatch m{Lemma::face35_bigon_trigon, {f5, f3}, {at(f5, i).id}};
          m.vertices = v;
          m.vertices.push_back(v6);
          m.conclusion_holds = false;
          const int p34 = dir == 1 ? i + 2 : i - 2;
          const int p45 = dir == 1 ? i + 3 : i - 3;
          m.detail = order_at(f5, p34, 3)   ? "trigon at v3v4"
                     : order_at(f5, p45, 3) ? "trigon at v4v5"
                                            : "three bigons";
          out.push_back(std::move(m));
        }
      }
    }
  }

  void four_face_trigon(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(4))
      for (int i = 0; i < 4; ++i) {
        if (!order_at(f, i, 3)) continue;
        ConfigMatch m{Lemma::four_face_trigon, {f}, {at(f, i).id}};
        m.conclusion_holds = face(f).multigon_count == 1;
        m.vertices = corners_from(f, i, 4);
        m.detail = std::to_string(face(f).multigon_count) + " multigons on the face";
        out.push_back(std::move(m));
      }
  }

  void four_face_3(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(4)) {
      if (face(f).bigon_count < 3) continue;
      int i = 0;
      while (!(order_at(f, i, 2) && order_at(f, i + 1, 2) && order_at(f, i + 2, 2))) ++i;
      ConfigMatch m{Lemma::four_face_3_bigon, {f}};
      for (int p = 0; p < 4; ++p)
        if (order_at(f, p, 2)) m.multigons.push_back(at(f, p).id);
      m.conclusion_holds = false;
      m.vertices = corners_from(f, i, 4);
      m.detail = std::to_string(face(f).bigon_count) + " bigons";
      out.push_back(std::move(m));
    }
  }

  void five_face(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(5)) {
      if (face(f).multigon_count != 5) continue;
      ConfigMatch m{Lemma::five_face_5_multi, {f}};
      bool ok = face(f).bigon_count == 5;
      std::vector<int> far;
      for (int p = 0; p < 5; ++p) {
        m.multigons.push_back(at(f, p).id);
        far.push_back(big(beyond(f, p)));
        if (order_at(f, p, 2) && far.back() < 4) ok = false;
      }
      m.conclusion_holds = ok;
      m.detail = std::to_string(face(f).bigon_count) + " bigons; far sides " + join_ints(far) + "-big";
      out.push_back(std::move(m));
    }
  }

  int find_offset(FaceId f, const std::vector<int>& trigons, const std::vector<int>& bigons,
                  const std::vector<int>& singles = {}) const {
    for (int s = 0; s < deg(f); ++s) {
      bool ok = true;
      for (int p : trigons) ok = ok && order_at(f, s + p, 3);
      for (int p : bigons) ok = ok && order_at(f, s + p, 2);
      for (int p : singles) ok = ok && single_at(f, s + p);
      if (ok) return s;
    }
    return -1;
  }

  void forbidden_face(std::vector<ConfigMatch>& out, Lemma l, FaceId f, int offset) const {
    ConfigMatch m{l, {f}};
    for (const auto& p : face(f).boundary)
      if (p.across.kind == ItemKind::multigon) m.multigons.push_back(p.across.id);
    m.conclusion_holds = false;
    if (offset >= 0) m.vertices = corners_from(f, offset, deg(f));
    m.detail = std::to_string(face(f).bigon_count) + " bigons, " + std::to_string(face(f).trigon_count) + " trigons";
    out.push_back(std::move(m));
  }

  void six_face_23(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(6)) {
      const auto& fi = face(f);
      if (fi.trigon_count != 3 || (fi.bigon_count != 1 && fi.bigon_count != 2)) continue;
      forbidden_face(out, Lemma::six_face_23, f, find_offset(f, {0, 2, 4}, {1}));
    }
  }

  void six_face_32(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(6)) {
      const auto& fi = face(f);
      if (fi.bigon_count != 3 || fi.trigon_count != 2) continue;
      forbidden_face(out, Lemma::six_face_32, f, find_offset(f, {}, {}, {5}));
    }
  }

  void seven_face(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(7)) {
      if (!face(f).dangerous) continue;
      for (int i = 0; i < 7; ++i) {
        if (!order_at(f, i, 3)) continue;
        const FaceId far = beyond(f, i);
        ConfigMatch m{Lemma::seven_face_trigon, {f, far}, {at(f, i).id}};
        m.conclusion_holds = big(far) >= 5;
        m.detail = "far side " + std::to_string(big(far)) + "-big";
        out.push_back(std::move(m));
      }
    }
  }

  void eight_face(std::vector<ConfigMatch>& out) const {
    for (FaceId f : faces_of_degree(8)) {
      const auto& fi = face(f);
      if (fi.bigon_count != 3 || fi.trigon_count != 4) continue;
      forbidden_face(out, Lemma::eight_face, f, find_offset(f, {0, 2, 4, 6}, {1, 3, 5}));
    }
  }

  void danger(std::vector<ConfigMatch>& out, bool with_bigon) const {
    for (const FaceInfo& f : c_.faces) {
      if (f.bigon || f.bigness < 5) continue;
      std::set<MultigonId> seen;
      for (const auto& p : f.boundary) {
        if (p.across.kind != ItemKind::multigon || !c_.multigon_dangerous[p.across.id]) continue;
        if (!seen.insert(p.across.id).second) continue;
        const std::vector<int> pos = c_.positions_of(f.id, p.across);
        std::set<int> near;
        bool bigon_next = false;
        for (int i : pos)
          for (int j : {i - 1, i + 1}) {
            near.insert(mod(j, f.degree));
            if (order_at(f.id, j, 2)) bigon_next = true;
          }
        if (with_bigon && !bigon_next) continue;
        int count = 0;
        for (int j = 0; j < f.degree; ++j)
          if (!near.count(j) && c_.is_big_face(at(f.id, j))) ++count;
        ConfigMatch m{with_bigon ? Lemma::danger_b : Lemma::danger_a, {f.id}, {p.across.id}};
        m.conclusion_holds = count >= (with_bigon ? 5 : 4);
        m.detail = std::to_string(count) + " >=4-faces not f-incident with the multigon";
        out.push_back(std::move(m));
      }
    }
  }

  const PlaneMultigraph& g_;
  const FaceClassification& c_;
};

std::vector<ConfigMatch> multigon_order_matches(const std::vector<Multigon>& ms) {
  std::vector<ConfigMatch> out;
  for (const Multigon& m : ms) {
    ConfigMatch c{Lemma::multigon_order, {}, {m.id}};
    c.vertices = {m.u, m.v};
    bool ok = m.order() <= 4;
    std::string detail = "order " + std::to_string(m.order());
    for (const Multigon& o : ms) {
      if (o.id == m.id) continue;
      if (o.u != m.u && o.u != m.v && o.v != m.u && o.v != m.v) continue;
      if (m.order() + o.order() > 5) {
        ok = false;
        c.multigons.push_back(o.id);
        detail += "; incident multigon " + std::to_string(o.id) + " of order " + std::to_string(o.order());
      }
    }
    c.conclusion_holds = ok;
    c.detail = detail;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

CatalogReport run_catalog(const PlaneMultigraph& g, const FaceClassification& cls, const CatalogOptions& options) {
  CatalogReport rep;
  Catalog cat(g, cls);
  for (Lemma l : all_lemmas()) {
    if (l == Lemma::odd_cut) {
      if (g.vertex_count() > std::min(options.cut_cap, kMaxCutCap)) {
        rep.skipped.push_back("odd-cut: " + std::to_string(g.vertex_count()) + " vertices above cut cap " +
                              std::to_string(options.cut_cap));
        continue;
      }
      OddCutReport cuts = min_odd_cut(g, options.cut_cap);
      if (!cuts.min_nontrivial) continue;
      ConfigMatch m{Lemma::odd_cut};
      m.vertices = cuts.min_nontrivial->side;
      m.edges = cut_edges(g, side_mask(m.vertices));
      m.conclusion_holds = cuts.min_nontrivial->size >= 8;
      m.detail = "minimum non-trivial odd cut has size " + std::to_string(cuts.min_nontrivial->size);
      rep.matches.push_back(std::move(m));
    } else if (l == Lemma::multigon_order) {
      for (auto& m : multigon_order_matches(cls.multigons)) rep.matches.push_back(std::move(m));
    } else {
      for (auto& m : cat.run(l)) rep.matches.push_back(std::move(m));
    }
  }
  return rep;
}

std::vector<ConfigMatch> match_catalog(const PlaneMultigraph& g, const FaceClassification& cls,
                                       const CatalogOptions& options) {
  return run_catalog(g, cls, options).matches;
}

std::vector<ConfigMatch> match_multigon_order(const std::vector<Multigon>& multigons) {
  return multigon_order_matches(multigons);
}

// ---------------------------------------------------------------------------
// lifting

bool has_lifter(Lemma l) {
  switch (l) {
    case Lemma::odd_cut:
    case Lemma::three_face_trigon:
    case Lemma::three_face_23_bigon:
    case Lemma::three_face_1_bigon:
    case Lemma::face35_bigon_trigon:
    case Lemma::four_face_trigon:
    case Lemma::four_face_3_bigon:
    case Lemma::six_face_23:
    case Lemma::six_face_32:
    case Lemma::eight_face:
      return true;
    default:
      return false;
  }
}

ReductionPlan plan_reduction(const PlaneMultigraph& g, const FaceClassification& cls, const ConfigMatch& match) {
  (void)cls;
  if (!has_lifter(match.lemma))
    throw PreconditionError("checker-only lemma: " + std::string(lemma_id(match.lemma)));
  ReductionPlan plan;
  plan.lemma = match.lemma;
  if (match.lemma == Lemma::odd_cut) {
    plan.cut = cut_size(g, match.vertices);
    plan.description = "split along the odd cut with side {" + join_ints(match.vertices) + "}";
    return plan;
  }
  if (match.vertices.empty() ||
      std::any_of(match.vertices.begin(), match.vertices.end(), [](VertexId v) { return v < 0; }))
    throw PreconditionError("configuration has no swap labelling");

  SwapSpec spec;
  spec.vertices = match.vertices;
  const FaceId f = match.faces.at(0);
  switch (match.lemma) {
    case Lemma::three_face_trigon:
    case Lemma::three_face_23_bigon:
    case Lemma::three_face_1_bigon:
      spec.anchor_faces = {f, match.faces.at(1)};
      break;
    case Lemma::face35_bigon_trigon:
      if (match.detail != "trigon at v3v4") {
        // v2 v3 v4 v5 v6 v1
        const auto& v = match.vertices;
        spec.vertices = {v[1], v[2], v[3], v[4], v[5], v[0]};
      }
      spec.anchor_faces = {f, f, match.faces.at(1)};
      break;
    default:
      spec.anchor_faces.assign(spec.vertices.size() / 2, f);
      break;
  }
  SwapSpec resolved;
  if (Verdict v = validate_swap(g, spec, &resolved); !v) throw PreconditionError("swap not valid: " + v.reason);
  plan.swap = resolved;
  plan.description = std::to_string(spec.k()) + "-swap on " + join_ints(spec.vertices);
  return plan;
}

LiftOutcome lift_coloring(const PlaneMultigraph& g, const ConfigMatch& match, const SwapResult& swap,
                          const EdgeColoring& col2) {
  if (!has_lifter(match.lemma) || match.lemma == Lemma::odd_cut)
    throw PreconditionError("checker-only lemma: " + std::string(lemma_id(match.lemma)));
  if (Verdict v = verify_coloring(swap.graph, col2); !v) throw PreconditionError("reduced colouring invalid: " + v.reason);
  const PlaneMultigraph& g2 = swap.graph;
  const auto& vs = swap.spec.vertices;
  const int half = swap.spec.k() / 2;

  std::vector<ColorSet> sets(half);
  ColorSet common = ColorSet::all();
  for (int i = 0; i < half; ++i) {
    const VertexId a = vs[2 * i], b = vs[2 * i + 1];
    for (DartId d : g2.rotation(a))
      if (g2.target(d) == b) sets[i].insert(col2[g2.edge_of(d)]);
    common = common & sets[i];
  }

  LiftOutcome out;
  if (common.empty()) {
    std::string report = "no colour common to all inserted pairs:";
    for (int i = 0; i < half; ++i)
      report += " " + std::to_string(vs[2 * i]) + "-" + std::to_string(vs[2 * i + 1]) + " " + set_text(sets[i]);
    if (half == 2)
      report += "; colour of v3v4 is " + std::string(color_name(col2[swap.inserted[1]]));
    out.report = report;
    return out;
  }

  const Color c = common.first();
  EdgeColoring col = col2;
  for (int i = 0; i < half; ++i) {
    const VertexId a = vs[2 * i], b = vs[2 * i + 1];
    const EdgeId r = swap.inserted[i];
    EdgeId x = -1;
    for (DartId d : g2.rotation(a))
      if (g2.target(d) == b && col2[g2.edge_of(d)] == c) x = g2.edge_of(d);
    if (x != r) col[x] = col2[r];  // the original copy takes the inserted edge's colour
    col[r] = c;                    // the restored edge
  }
  if (Verdict v = verify_coloring(g, col); !v) throw Error("lift produced an invalid colouring: " + v.reason);
  out.kind = LiftOutcome::Kind::coloring;
  out.coloring = std::move(col);
  out.common_color = c;
  out.report = "common colour " + std::string(color_name(c)) + " moved back onto the removed edges";
  return out;
}

LiftOutcome lift_coloring(const PlaneMultigraph& g, const ConfigMatch& match, const SplitResult& split,
                          const EdgeColoring& col_a, const EdgeColoring& col_b) {
  if (match.lemma != Lemma::odd_cut) throw PreconditionError("split lifting applies to the odd-cut lemma only");
  LiftOutcome out;
  EdgeColoring col = combine_colorings(split, col_a, col_b);
  if (Verdict v = verify_coloring(g, col); !v) throw Error("combined colouring invalid: " + v.reason);
  out.kind = LiftOutcome::Kind::coloring;
  out.coloring = std::move(col);
  out.report = "parts coloured separately and matched on the six cut edges";
  return out;
}

LiftOutcome reduce_and_lift(const PlaneMultigraph& g, const FaceClassification& cls, const ConfigMatch& match,
                            const SolverOptions& options) {
  ReductionPlan plan = plan_reduction(g, cls, match);
  if (plan.cut) {
    SplitResult split = split_along_cut(g, *plan.cut);
    ColoringResult a = find_six_edge_coloring(split.part_a, options);
    ColoringResult b = find_six_edge_coloring(split.part_b, options);
    if (!a.coloring || !b.coloring) {
      LiftOutcome out;
      out.report = "a part was not coloured: " + std::string(status_name(a.status)) + "/" +
                   std::string(status_name(b.status));
      return out;
    }
    return lift_coloring(g, match, split, *a.coloring, *b.coloring);
  }
  SwapResult swap = apply_swap(g, *plan.swap);
  ColoringResult r = find_six_edge_coloring(swap.graph, options);
  if (!r.coloring) {
    LiftOutcome out;
    out.report = "reduced graph not coloured: " + std::string(status_name(r.status));
    return out;
  }
  return lift_coloring(g, match, swap, *r.coloring);
}

}  // namespace tjoin
