#include "tjoin/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tjoin/errors.hpp"
#include "tjoin/workbench.hpp"

namespace tjoin {

Verdict verify_coloring(const PlaneMultigraph& g, const EdgeColoring& col) {
  if (static_cast<int>(col.size()) != g.edge_count())
    return Verdict::reject("colouring has " + std::to_string(col.size()) + " entries for " +
                           std::to_string(g.edge_count()) + " edges");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ColorSet seen;
    for (DartId d : g.rotation(v)) {
      Color c = col[g.edge_of(d)];
      if (static_cast<int>(c) >= kColorCount) return Verdict::reject("colour value out of range");
      if (seen.contains(c))
        return Verdict::reject("vertex " + std::to_string(v) + " sees " +
                               std::string(color_name(c)) + " twice");
      seen.insert(c);
    }
  }
  return Verdict::accept();
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_within_budget: return "none-within-budget";
    case SearchStatus::proven_none: return "proven-none";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// chains

std::vector<EdgeId> Chain::edges(const PlaneMultigraph& g) const {
  std::vector<EdgeId> out;
  for (DartId d : darts) out.push_back(g.edge_of(d));
  return out;
}

Chain walk_chain(const PlaneMultigraph& g, const ColorLookup& color_of, DartId start, Color a,
                 Color b, const ChainLimits& limits) {
  if (a == b) throw PreconditionError("degenerate colour pair: a == b");
  const EdgeId first = g.edge_of(start);
  const int c0 = color_of(first);
  if (c0 != index(a) && c0 != index(b))
    throw PreconditionError("start edge is coloured neither " + std::string(color_name(a)) +
                            " nor " + std::string(color_name(b)));
  if (first == limits.excluded) throw PreconditionError("start edge is the excluded edge");

  auto stops = [&](VertexId v) {
    return std::find(limits.stop_at.begin(), limits.stop_at.end(), v) != limits.stop_at.end();
  };
  std::vector<char> used(g.edge_count(), 0);
  used[first] = 1;

  // from the head of `d`, continue with the edge of the other colour
  auto extend = [&](DartId d, std::vector<DartId>& out) -> bool {
    while (true) {
      const VertexId w = g.target(d);
      if (stops(w)) return false;
      const int want = color_of(g.edge_of(d)) == index(a) ? index(b) : index(a);
      DartId next = -1;
      for (DartId x : g.rotation(w)) {
        EdgeId e = g.edge_of(x);
        if (e == g.edge_of(d) || e == limits.excluded) continue;
        if (color_of(e) == want) {
          next = x;
          break;
        }
      }
      if (next == -1) return false;
      if (g.edge_of(next) == first) return true;
      if (used[g.edge_of(next)]) return false;  // only reachable through stop vertices
      used[g.edge_of(next)] = 1;
      out.push_back(next);
      d = next;
    }
  };

  Chain chain{a, b, {start}, false};
  std::vector<DartId> forward;
  if (extend(start, forward)) {
    chain.darts.insert(chain.darts.end(), forward.begin(), forward.end());
    chain.cycle = true;
    return chain;
  }
  std::vector<DartId> backward;
  extend(g.reverse(start), backward);
  std::vector<DartId> walk;
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) walk.push_back(g.reverse(*it));
  walk.push_back(start);
  walk.insert(walk.end(), forward.begin(), forward.end());
  chain.darts = std::move(walk);
  return chain;
}

Chain kempe_chain(const PlaneMultigraph& g, const EdgeColoring& col, DartId start, Color a, Color b) {
  if (static_cast<int>(col.size()) != g.edge_count()) throw InputError("colouring size mismatch");
  return walk_chain(g, [&](EdgeId e) { return index(col[e]); }, start, a, b);
}

std::pair<Chain, EdgeColoring> kempe_swap(const PlaneMultigraph& g, const EdgeColoring& col,
                                          DartId start, Color a, Color b) {
  Chain chain = kempe_chain(g, col, start, a, b);
  EdgeColoring out = col;
  for (EdgeId e : chain.edges(g)) out[e] = out[e] == a ? b : a;
  return {std::move(chain), std::move(out)};
}

// ---------------------------------------------------------------------------
// solver

namespace {

class Solver {
 public:
  Solver(const PlaneMultigraph& g, const SolverOptions& opt) : g_(g), opt_(opt) {
    const int edges = g.edge_count();
    color_.assign(edges, -1);
    used_.assign(g.vertex_count(), ColorSet{});
    order_.resize(edges);
    std::mt19937_64 rng(opt.seed);
    for (auto& o : order_) {
      std::iota(o.begin(), o.end(), 0);
      if (opt.seed != 0) std::shuffle(o.begin(), o.end(), rng);
    }
    budget_ = opt.exhaustive ? -1 : opt.node_budget;
  }

  // true: found; false: exhausted or out of budget (see out_of_budget_)
  bool run() {
    // every proper colouring is rainbow at vertex 0; fix that permutation
    int c = 0;
    for (DartId d : g_.rotation(0)) assign(g_.edge_of(d), c++);
    return search();
  }

  EdgeColoring coloring() const {
    EdgeColoring out;
    for (int c : color_) out.push_back(color_at(c));
    return out;
  }

  long long nodes = 0;
  long long repairs = 0;
  bool out_of_budget = false;

 private:
  void assign(EdgeId e, int c) {
    auto [u, v] = g_.endpoints(e);
    trail_.push_back({e, color_[e]});
    if (color_[e] >= 0) {
      used_[u].erase(color_at(color_[e]));
      used_[v].erase(color_at(color_[e]));
    }
    color_[e] = c;
    if (c >= 0) {
      used_[u].insert(color_at(c));
      used_[v].insert(color_at(c));
    }
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      auto [e, old] = trail_.back();
      trail_.pop_back();
      auto [u, v] = g_.endpoints(e);
      if (color_[e] >= 0) {
        used_[u].erase(color_at(color_[e]));
        used_[v].erase(color_at(color_[e]));
      }
      color_[e] = old;
      if (old >= 0) {
        used_[u].insert(color_at(old));
        used_[v].insert(color_at(old));
      }
    }
  }

  ColorSet free_at(EdgeId e) const {
    auto [u, v] = g_.endpoints(e);
    return ~(used_[u] | used_[v]);
  }

  bool spend() {
    ++nodes;
    if (budget_ >= 0 && nodes > budget_) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  bool search() {
    EdgeId pick = -1;
    int best = kColorCount + 1;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[e] >= 0) continue;
      int n = free_at(e).size();
      if (n < best) {
        best = n;
        pick = e;
      }
    }
    if (pick == -1) return true;
    if (best == 0) return repair(pick);

    const ColorSet free = free_at(pick);
    for (int c : order_[pick]) {
      if (!free.contains(color_at(c))) continue;
      if (!spend()) return false;
      const size_t mark = trail_.size();
      assign(pick, c);
      if (search()) return true;
      undo_to(mark);
      if (out_of_budget) return false;
    }
    return false;
  }

  // Dead end at e = uv: free a colour at v by swapping an ab-chain.
  bool repair(EdgeId e) {
    auto [u, v] = g_.endpoints(e);
    const ColorSet miss_u = ~used_[u];
    const ColorSet miss_v = ~used_[v];
    auto lookup = [this](EdgeId x) { return color_[x]; };
    for (int a = 0; a < kColorCount; ++a) {
      if (!miss_u.contains(color_at(a))) continue;
      for (int b = 0; b < kColorCount; ++b) {
        if (b == a || !miss_v.contains(color_at(b))) continue;
        DartId start = -1;
        for (DartId d : g_.rotation(v))
          if (color_[g_.edge_of(d)] == a) start = d;
        if (start == -1) continue;
        Chain chain = walk_chain(g_, lookup, start, color_at(a), color_at(b));
        if (chain.first_vertex(g_) == u || chain.last_vertex(g_) == u) continue;
        if (!spend()) return false;
        ++repairs;
        const size_t mark = trail_.size();
        for (EdgeId x : chain.edges(g_)) assign(x, color_[x] == a ? b : a);
        assign(e, a);
        if (search()) return true;
        undo_to(mark);
        if (out_of_budget) return false;
      }
    }
    return false;
  }

  const PlaneMultigraph& g_;
  const SolverOptions& opt_;
  std::vector<int> color_;
  std::vector<ColorSet> used_;
  std::vector<std::array<int, kColorCount>> order_;
  std::vector<std::pair<EdgeId, int>> trail_;
  long long budget_ = 0;
};

}  // namespace

ColoringResult find_six_edge_coloring(const PlaneMultigraph& g, const SolverOptions& options) {
  if (!g.is_regular(6)) throw PreconditionError("solver needs a 6-regular graph");
  ColoringResult result;
  Solver solver(g, options);
  const bool found = solver.run();
  result.nodes = solver.nodes;
  result.kempe_repairs = solver.repairs;
  if (found) {
    result.status = SearchStatus::found;
    result.coloring = solver.coloring();
    if (!verify_coloring(g, *result.coloring)) throw Error("solver produced an invalid colouring");
    return result;
  }
  result.status = solver.out_of_budget ? SearchStatus::none_within_budget : SearchStatus::proven_none;
  if (result.status == SearchStatus::none_within_budget && g.edge_count() <= options.oracle_cap) {
    OracleResult oracle = oracle_coloring(g, options.oracle_cap);
    result.oracle_used = true;
    result.nodes += oracle.nodes;
    result.coloring = oracle.coloring;
    result.status = oracle.coloring ? SearchStatus::found : SearchStatus::proven_none;
  }
  return result;
}

// ---------------------------------------------------------------------------
// packings

TJoinPacking packing_from_coloring(const PlaneMultigraph& g, const EdgeColoring& col) {
  if (Verdict v = verify_coloring(g, col); !v) throw PreconditionError("invalid colouring: " + v.reason);
  if (static_cast<int>(g.terminals().size()) != g.vertex_count())
    throw PreconditionError("colour classes are T-joins only for T = V(G)");
  TJoinPacking p;
  p.joins.resize(kColorCount);
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.joins[index(col[e])].push_back(e);
  p.terminals.assign(g.terminals().begin(), g.terminals().end());
  return p;
}

Verdict verify_packing(const PlaneMultigraph& g, std::span<const VertexId> terminals,
                       const TJoinPacking& packing) {
  if (terminals.size() % 2 != 0) return Verdict::reject("odd |T|");
  std::vector<char> is_terminal(g.vertex_count(), 0);
  for (VertexId t : terminals) {
    if (t < 0 || t >= g.vertex_count()) return Verdict::reject("terminal out of range");
    is_terminal[t] = 1;
  }
  if (packing.joins.size() != static_cast<size_t>(kColorCount))
    return Verdict::reject("expected 6 T-joins, got " + std::to_string(packing.joins.size()));

  std::vector<int> owner(g.edge_count(), -1);
  for (int i = 0; i < static_cast<int>(packing.joins.size()); ++i) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : packing.joins[i]) {
      if (e < 0 || e >= g.edge_count()) return Verdict::reject("edge id out of range");
      if (owner[e] != -1)
        return Verdict::reject("not disjoint: edge " + std::to_string(e) + " in joins " +
                               std::to_string(owner[e]) + " and " + std::to_string(i));
      owner[e] = i;
      auto [u, v] = g.endpoints(e);
      ++deg[u];
      ++deg[v];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if ((deg[v] % 2 == 1) != static_cast<bool>(is_terminal[v]))
        return Verdict::reject("join " + std::to_string(i) + ": vertex " + std::to_string(v) +
                               (is_terminal[v] ? " is a terminal with even degree"
                                               : " is not a terminal but has odd degree"));
  }
  return Verdict::accept();
}

}  // namespace tjoin
