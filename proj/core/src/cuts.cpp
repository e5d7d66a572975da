#include "tjoin/cuts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "tjoin/errors.hpp"

namespace tjoin {

VertexMask side_mask(std::span<const VertexId> side) {
  VertexMask m = 0;
  for (VertexId v : side) {
    if (v < 0 || v >= 64) throw InputError("vertex id " + std::to_string(v) + " out of mask range");
    m |= VertexMask{1} << v;
  }
  return m;
}

std::vector<VertexId> mask_side(VertexMask mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

CutCounter::CutCounter(const PlaneMultigraph& g) {
  if (g.vertex_count() > 64) throw CapExceeded("cut enumeration supports at most 64 vertices");
  masks_.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    masks_.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
  }
}

int CutCounter::size(VertexMask side) const {
  int n = 0;
  for (std::uint64_t m : masks_) n += std::popcount(m & side) == 1;
  return n;
}

bool CutCounter::crosses(EdgeId e, VertexMask side) const {
  return std::popcount(masks_[e] & side) == 1;
}

namespace {

VertexMask full_mask(int n) { return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

Cut describe(const PlaneMultigraph& g, VertexMask side, int size, VertexMask terminals) {
  const int n = g.vertex_count();
  const int a = std::popcount(side);
  Cut c;
  c.side = mask_side(side);
  c.size = size;
  c.odd = a % 2 == 1 || (n - a) % 2 == 1;
  c.t_odd = std::popcount(side & terminals) % 2 == 1;
  c.trivial = a == 1 || a == n - 1;
  return c;
}

void check_cap(const PlaneMultigraph& g, int cap) {
  if (cap > kMaxCutCap) cap = kMaxCutCap;
  if (g.vertex_count() > cap)
    throw CapExceeded("cut enumeration cap exceeded: " + std::to_string(g.vertex_count()) +
                      " vertices > cap " + std::to_string(cap));
}

template <typename F>
void for_each_side(const PlaneMultigraph& g, F&& f) {
  const int n = g.vertex_count();
  const VertexMask full = full_mask(n);
  const std::uint64_t free_count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 0; x < free_count; ++x) {
    VertexMask side = 1 | (x << 1);
    if (side == full) continue;
    f(side);
  }
}

}  // namespace

Cut make_cut(const PlaneMultigraph& g, VertexMask side) {
  const VertexMask full = full_mask(g.vertex_count());
  if ((side & ~full) != 0) throw InputError("cut side names a vertex outside the graph");
  if (side == 0 || side == full) throw PreconditionError("cut side must be non-empty and proper");
  return describe(g, side, CutCounter(g).size(side), side_mask(g.terminals()));
}

Cut cut_size(const PlaneMultigraph& g, std::span<const VertexId> side) {
  for (VertexId v : side)
    if (v < 0 || v >= g.vertex_count())
      throw InputError("vertex " + std::to_string(v) + " out of range");
  VertexMask m = side_mask(side);
  if (static_cast<size_t>(std::popcount(m)) != side.size())
    throw InputError("cut side lists a vertex twice");
  return make_cut(g, m);
}

std::vector<EdgeId> cut_edges(const PlaneMultigraph& g, VertexMask side) {
  CutCounter counter(g);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (counter.crosses(e, side)) out.push_back(e);
  return out;
}

OddCutReport min_odd_cut(const PlaneMultigraph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  const CutCounter counter(g);
  const VertexMask terminals = side_mask(g.terminals());

  OddCutReport report;
  std::optional<std::pair<VertexMask, int>> best, best_nontrivial;
  if (n % 2 == 1) {
    report.min_odd.odd = true;
    report.min_odd.empty_side = true;
  }
  if (n == 1) return report;

  for_each_side(g, [&](VertexMask side) {
    ++report.subsets;
    const int size = counter.size(side);
    const int a = std::popcount(side);
    if (std::popcount(side & terminals) % 2 == 1) {
      ++report.t_parity.t_cuts;
      ++(size % 2 == 0 ? report.t_parity.even : report.t_parity.odd);
    }
    const bool odd = a % 2 == 1 || (n - a) % 2 == 1;
    if (!odd) return;
    if (!best || size < best->second) best = {side, size};
    const bool trivial = a == 1 || a == n - 1;
    if (!trivial && (!best_nontrivial || size < best_nontrivial->second))
      best_nontrivial = {side, size};
  });

  if (n % 2 == 0 && best) report.min_odd = describe(g, best->first, best->second, terminals);
  if (best_nontrivial)
    report.min_nontrivial = describe(g, best_nontrivial->first, best_nontrivial->second, terminals);
  return report;
}

std::vector<Cut> enumerate_odd_cuts(const PlaneMultigraph& g, CutFilter filter, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();
  const CutCounter counter(g);
  const VertexMask terminals = side_mask(g.terminals());
  std::vector<Cut> out;
  if (n == 1) return out;
  for_each_side(g, [&](VertexMask side) {
    const int a = std::popcount(side);
    if (a % 2 == 0 && (n - a) % 2 == 0) return;
    if (filter.nontrivial_only && (a == 1 || a == n - 1)) return;
    const int size = counter.size(side);
    if (filter.max_size && size > *filter.max_size) return;
    out.push_back(describe(g, side, size, terminals));
  });
  return out;
}

// ---------------------------------------------------------------------------
// splitting

namespace {

struct Contraction {
  PlaneMultigraph graph;
  VertexId hub;
  std::vector<EdgeId> edge_map;
};

// Replaces the vertices of `side` by one vertex. Rotations are merged along a
// BFS tree of the side; edges inside the side become loops and are dropped.
Contraction contract(const PlaneMultigraph& g, VertexMask side) {
  const int n = g.vertex_count();
  std::vector<char> inside(n, 0);
  for (VertexId v : mask_side(side)) inside[v] = 1;
  const VertexId root = std::countr_zero(side);

  std::vector<DartId> merged(g.rotation(root).begin(), g.rotation(root).end());
  std::vector<char> reached(n, 0);
  reached[root] = 1;
  std::vector<VertexId> queue{root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId u = queue[qi];
    for (DartId du : g.rotation(u)) {
      VertexId v = g.target(du);
      if (!inside[v] || reached[v]) continue;
      reached[v] = 1;
      queue.push_back(v);
      DartId dv = g.reverse(du);
      auto at = std::find(merged.begin(), merged.end(), du);
      std::vector<DartId> next(at + 1, merged.end());
      next.insert(next.end(), merged.begin(), at);
      auto rv = g.rotation(v);
      auto pos = std::find(rv.begin(), rv.end(), dv);
      next.insert(next.end(), pos + 1, rv.end());
      next.insert(next.end(), rv.begin(), pos);
      merged = std::move(next);
    }
  }
  if (static_cast<int>(queue.size()) != std::popcount(side))
    throw PreconditionError("cut side is not connected; contraction would not be plane");

  // new vertex ids: the side collapses onto its smallest id, the rest compacts
  std::vector<VertexId> new_id(n, -1);
  int next_id = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (inside[v] && v != root) continue;
    new_id[v] = next_id++;
  }
  for (VertexId v = 0; v < n; ++v)
    if (inside[v]) new_id[v] = new_id[root];

  std::vector<EdgeId> edge_map;
  std::vector<DartId> new_dart(g.dart_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (inside[a] && inside[b]) continue;
    const int k = static_cast<int>(edge_map.size());
    edge_map.push_back(e);
    new_dart[g.edges()[e][0]] = 2 * k;
    new_dart[g.edges()[e][1]] = 2 * k + 1;
  }

  std::vector<std::vector<DartId>> rot(next_id);
  for (VertexId v = 0; v < n; ++v) {
    if (inside[v]) continue;
    for (DartId d : g.rotation(v)) rot[new_id[v]].push_back(new_dart[d]);
  }
  for (DartId d : merged)
    if (new_dart[d] >= 0) rot[new_id[root]].push_back(new_dart[d]);

  std::vector<std::array<DartId, 2>> edges;
  for (int k = 0; k < static_cast<int>(edge_map.size()); ++k) edges.push_back({2 * k, 2 * k + 1});

  return {PlaneMultigraph(next_id, std::move(rot), std::move(edges)), new_id[root],
          std::move(edge_map)};
}

}  // namespace

SplitResult split_along_cut(const PlaneMultigraph& g, const Cut& cut) {
  if (cut.empty_side) throw PreconditionError("cannot split along the empty-side cut");
  Cut fresh = cut_size(g, cut.side);
  if (!fresh.odd) throw PreconditionError("cut is not odd");
  if (fresh.trivial) throw PreconditionError("cut is trivial");
  if (fresh.size != 6)
    throw PreconditionError("cut has size " + std::to_string(fresh.size) + ", expected 6");

  const VertexMask a = side_mask(fresh.side);
  const VertexMask b = full_mask(g.vertex_count()) & ~a;
  Contraction ca = contract(g, a);
  Contraction cb = contract(g, b);
  return SplitResult{std::move(ca.graph), std::move(cb.graph), ca.hub, cb.hub,
                     std::move(ca.edge_map), std::move(cb.edge_map), cut_edges(g, a),
                     g.edge_count()};
}

EdgeColoring combine_colorings(const SplitResult& split, const EdgeColoring& col_a,
                               const EdgeColoring& col_b) {
  if (col_a.size() != split.edge_in_a.size() || col_b.size() != split.edge_in_b.size())
    throw InputError("colouring size does not match the split part");

  std::vector<int> where_a(split.original_edges, -1), where_b(split.original_edges, -1);
  for (size_t i = 0; i < split.edge_in_a.size(); ++i) where_a[split.edge_in_a[i]] = static_cast<int>(i);
  for (size_t i = 0; i < split.edge_in_b.size(); ++i) where_b[split.edge_in_b[i]] = static_cast<int>(i);

  std::array<int, kColorCount> perm;
  perm.fill(-1);
  ColorSet seen_a, seen_b;
  for (EdgeId e : split.cut) {
    Color ca = col_a[where_a[e]];
    Color cb = col_b[where_b[e]];
    if (seen_a.contains(ca)) throw PreconditionError("cut edges of part A are not rainbow");
    if (seen_b.contains(cb)) throw PreconditionError("cut edges of part B are not rainbow");
    seen_a.insert(ca);
    seen_b.insert(cb);
    perm[index(cb)] = index(ca);
  }
  // cut sizes other than six cannot reach here, but keep the map total
  for (int c = 0, spare = 0; c < kColorCount; ++c) {
    if (perm[c] != -1) continue;
    while (seen_a.contains(color_at(spare))) ++spare;
    perm[c] = spare;
    seen_a.insert(color_at(spare));
  }

  EdgeColoring out(split.original_edges, Color::alpha);
  std::vector<char> set(split.original_edges, 0);
  for (size_t i = 0; i < split.edge_in_a.size(); ++i) {
    out[split.edge_in_a[i]] = col_a[i];
    set[split.edge_in_a[i]] = 1;
  }
  for (size_t i = 0; i < split.edge_in_b.size(); ++i) {
    out[split.edge_in_b[i]] = color_at(perm[index(col_b[i])]);
    set[split.edge_in_b[i]] = 1;
  }
  if (std::find(set.begin(), set.end(), 0) != set.end())
    throw InputError("split tables do not cover every edge");
  return out;
}

}  // namespace tjoin
