#pragma once
// Brute-force reference implementations. They only read the raw rotation and
// edge tables and never call the library's algorithms.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "tjoin/plane_graph.hpp"

namespace oracle {

using tjoin::PlaneMultigraph;

struct RawEdge {
  int u, v;
};

// endpoints straight from the rotation lists
inline std::vector<RawEdge> raw_edges(const PlaneMultigraph& g) {
  std::vector<int> owner(g.dart_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int d : g.rotations()[v]) owner[d] = v;
  std::vector<RawEdge> out;
  for (const auto& e : g.edges()) out.push_back({owner[e[0]], owner[e[1]]});
  return out;
}

// faces by walking: after arriving at w along dart d, leave by the dart
// following reverse(d) in w's counterclockwise list
inline int count_faces(const PlaneMultigraph& g) {
  const int darts = g.dart_count();
  std::vector<int> rev(darts), owner(darts), slot(darts);
  for (const auto& e : g.edges()) {
    rev[e[0]] = e[1];
    rev[e[1]] = e[0];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < static_cast<int>(g.rotations()[v].size()); ++i) {
      owner[g.rotations()[v][i]] = v;
      slot[g.rotations()[v][i]] = i;
    }
  std::vector<bool> seen(darts, false);
  int faces = 0;
  for (int s = 0; s < darts; ++s) {
    if (seen[s]) continue;
    ++faces;
    int d = s;
    while (!seen[d]) {
      seen[d] = true;
      const int r = rev[d];
      const auto& rot = g.rotations()[owner[r]];
      d = rot[(slot[r] + 1) % rot.size()];
    }
  }
  return faces;
}

inline int cut_size(const PlaneMultigraph& g, std::uint64_t side) {
  int n = 0;
  for (const RawEdge& e : raw_edges(g)) n += ((side >> e.u) & 1) != ((side >> e.v) & 1);
  return n;
}

struct OddCuts {
  int min_odd = 1 << 30;
  int min_nontrivial = 1 << 30;  // stays large when there is none
  std::vector<std::uint64_t> odd_sides;
};

// every proper non-empty subset, both orientations
inline OddCuts odd_cuts(const PlaneMultigraph& g) {
  const int n = g.vertex_count();
  const auto edges = raw_edges(g);
  OddCuts out;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k % 2 == 0 && (n - k) % 2 == 0) continue;
    int c = 0;
    for (const RawEdge& e : edges) c += ((s >> e.u) & 1) != ((s >> e.v) & 1);
    out.min_odd = std::min(out.min_odd, c);
    if (k != 1 && k != n - 1) out.min_nontrivial = std::min(out.min_nontrivial, c);
    out.odd_sides.push_back(s);
  }
  return out;
}

inline bool proper(const PlaneMultigraph& g, const std::vector<int>& col) {
  const auto edges = raw_edges(g);
  if (col.size() != edges.size()) return false;
  std::vector<std::array<int, 6>> seen(g.vertex_count(), std::array<int, 6>{});
  for (size_t i = 0; i < edges.size(); ++i) {
    if (col[i] < 0 || col[i] > 5) return false;
    if (seen[edges[i].u][col[i]]++ || seen[edges[i].v][col[i]]++) return false;
  }
  return true;
}

// colourable iff the edges split into six perfect matchings; peel matchings off
inline bool six_colorable(const PlaneMultigraph& g) {
  const auto edges = raw_edges(g);
  const int n = g.vertex_count();
  std::vector<bool> used(edges.size(), false);
  std::function<bool(int)> peel = [&](int classes_left) -> bool {
    if (classes_left == 0) return std::none_of(used.begin(), used.end(), [](bool b) { return !b; });
    std::vector<int> chosen;
    std::vector<bool> covered(n, false);
    std::function<bool(int)> match = [&](int from) -> bool {
      int v = from;
      while (v < n && covered[v]) ++v;
      if (v == n) return peel(classes_left - 1);
      for (size_t i = 0; i < edges.size(); ++i) {
        if (used[i]) continue;
        int w = edges[i].u == v ? edges[i].v : edges[i].v == v ? edges[i].u : -1;
        if (w < 0 || covered[w]) continue;
        used[i] = covered[v] = covered[w] = true;
        if (match(v + 1)) return true;
        used[i] = covered[v] = covered[w] = false;
      }
      return false;
    };
    return match(0);
  };
  return peel(6);
}

// e-colourings counted by trying every odd set of size >= 3 on e and every
// colour on the other edges
inline long long count_e_colorings(const PlaneMultigraph& g, int e) {
  const auto edges = raw_edges(g);
  const int m = static_cast<int>(edges.size());
  long long total = 0;
  std::vector<int> col(m, 0);
  for (int set = 0; set < 64; ++set) {
    const int k = std::popcount(static_cast<unsigned>(set));
    if (k < 3 || k % 2 == 0) continue;
    long long combos = 1;
    for (int i = 0; i < m - 1; ++i) combos *= 6;
    for (long long code = 0; code < combos; ++code) {
      long long x = code;
      for (int i = 0; i < m; ++i) {
        if (i == e) continue;
        col[i] = static_cast<int>(x % 6);
        x /= 6;
      }
      bool ok = true;
      std::vector<int> parity(g.vertex_count(), 0);
      for (int i = 0; i < m; ++i) {
        const int bits = i == e ? set : 1 << col[i];
        parity[edges[i].u] ^= bits;
        parity[edges[i].v] ^= bits;
      }
      for (int p : parity) ok = ok && p == 63;
      total += ok;
    }
  }
  return total;
}

}  // namespace oracle
