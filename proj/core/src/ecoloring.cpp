#include "tjoin/ecoloring.hpp"

#include <algorithm>
#include <bit>

#include "tjoin/errors.hpp"
#include "tjoin/workbench.hpp"

namespace tjoin {

namespace {

std::string name(Color c) { return std::string(color_name(c)); }

std::string set_name(ColorSet s) {
  std::string out = "{";
  s.for_each([&](Color c) {
    if (out.size() > 1) out += ",";
    out += name(c);
  });
  return out + "}";
}

// number of edges at v assigned c, e counted once per colour it carries
int count_at(const PlaneMultigraph& g, const EColoring& ec, VertexId v, Color c) {
  int n = 0;
  for (DartId d : g.rotation(v)) n += ec.assigned(g.edge_of(d), c);
  return n;
}

// same, but leaving e out
int others_at(const PlaneMultigraph& g, const EColoring& ec, VertexId v, Color c) {
  int n = 0;
  for (DartId d : g.rotation(v)) {
    EdgeId x = g.edge_of(d);
    if (x != ec.e && ec.colors[x] == c) ++n;
  }
  return n;
}

}  // namespace

Verdict verify_e_coloring(const PlaneMultigraph& g, const EColoring& ec) {
  if (ec.e < 0 || ec.e >= g.edge_count()) return Verdict::reject("distinguished edge out of range");
  if (static_cast<int>(ec.colors.size()) != g.edge_count())
    return Verdict::reject("colouring size does not match the edge count");
  const int k = ec.e_colors.size();
  if (k < 3) return Verdict::reject("e must be assigned three or more colours, got " + std::to_string(k));
  if (k % 2 == 0) return Verdict::reject("e must be assigned an odd number of colours, got " + std::to_string(k));
  for (EdgeId x = 0; x < g.edge_count(); ++x)
    if (x != ec.e && index(ec.colors[x]) >= kColorCount) return Verdict::reject("colour value out of range");
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (int c = 0; c < kColorCount; ++c)
      if (count_at(g, ec, v, color_at(c)) % 2 == 0)
        return Verdict::reject("vertex " + std::to_string(v) + " sees " + name(color_at(c)) +
                               " an even number of times");
  return Verdict::accept();
}

bool is_canonical_trigon_shape(const PlaneMultigraph& g, const EColoring& ec) {
  if (ec.e_colors.size() != 3) return false;
  auto [x, y] = g.endpoints(ec.e);
  bool ok = false;
  ec.e_colors.for_each([&](Color a) {
    if (others_at(g, ec, x, a) == 2 && others_at(g, ec, y, a) == 2) ok = true;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// search

namespace {

std::vector<ColorSet> odd_color_sets() {
  std::vector<ColorSet> out;
  for (int size : {3, 5}) {
    std::vector<ColorSet> level;
    for (int bits = 0; bits < 64; ++bits)
      if (std::popcount(static_cast<unsigned>(bits)) == size) level.push_back(ColorSet(static_cast<std::uint8_t>(bits)));
    // lexicographic on the sorted colour list
    std::sort(level.begin(), level.end(), [](ColorSet a, ColorSet b) {
      std::vector<int> la, lb;
      a.for_each([&](Color c) { la.push_back(index(c)); });
      b.for_each([&](Color c) { lb.push_back(index(c)); });
      return la < lb;
    });
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

class ESearch {
 public:
  ESearch(const PlaneMultigraph& g, EdgeId e, long long budget) : g_(g), e_(e), budget_(budget) {
    for (EdgeId x = 0; x < g.edge_count(); ++x)
      if (x != e) order_.push_back(x);
  }

  // visit returns false to stop; result false means stopped (by visitor or budget)
  bool run(ColorSet s, const std::function<bool(const EColoring&)>& visit) {
    cnt_.assign(g_.vertex_count(), {});
    rem_.assign(g_.vertex_count(), 0);
    for (EdgeId x : order_) {
      auto [u, v] = g_.endpoints(x);
      ++rem_[u];
      ++rem_[v];
    }
    auto [u, v] = g_.endpoints(e_);
    s.for_each([&](Color c) {
      ++cnt_[u][index(c)];
      ++cnt_[v][index(c)];
    });
    for (VertexId w = 0; w < g_.vertex_count(); ++w)
      if (!feasible(w)) return true;
    current_ = EColoring{e_, s, EdgeColoring(g_.edge_count(), Color::alpha)};
    return dfs(0, visit);
  }

  long long nodes = 0;
  bool out_of_budget = false;

 private:
  bool feasible(VertexId v) const {
    int w = 0;
    for (int c = 0; c < kColorCount; ++c) w += cnt_[v][c] % 2 == 0;
    return w <= rem_[v] && (rem_[v] - w) % 2 == 0;
  }

  bool dfs(size_t i, const std::function<bool(const EColoring&)>& visit) {
    if (i == order_.size()) return visit(current_);
    const EdgeId x = order_[i];
    auto [u, v] = g_.endpoints(x);
    for (int c = 0; c < kColorCount; ++c) {
      if (budget_ >= 0 && ++nodes > budget_) {
        out_of_budget = true;
        return false;
      }
      ++cnt_[u][c];
      ++cnt_[v][c];
      --rem_[u];
      --rem_[v];
      bool keep_going = true;
      if (feasible(u) && feasible(v)) {
        current_.colors[x] = color_at(c);
        keep_going = dfs(i + 1, visit);
      }
      --cnt_[u][c];
      --cnt_[v][c];
      ++rem_[u];
      ++rem_[v];
      if (!keep_going) return false;
    }
    return true;
  }

  const PlaneMultigraph& g_;
  EdgeId e_;
  long long budget_;
  std::vector<EdgeId> order_;
  std::vector<std::array<int, kColorCount>> cnt_;
  std::vector<int> rem_;
  EColoring current_;
};

void check_edge(const PlaneMultigraph& g, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw InputError("edge " + std::to_string(e) + " is not an edge of the graph");
  if (!g.is_regular(6)) throw PreconditionError("e-colourings need a 6-regular graph");
}

}  // namespace

EColoringResult find_e_coloring(const PlaneMultigraph& g, EdgeId e, const EColorOptions& options) {
  check_edge(g, e);
  EColoringResult result;
  ESearch search(g, e, options.node_budget);
  for (ColorSet s : odd_color_sets()) {
    search.run(s, [&](const EColoring& ec) {
      result.ecoloring = ec;
      return false;
    });
    if (result.ecoloring || search.out_of_budget) break;
  }
  result.nodes = search.nodes;
  if (result.ecoloring) {
    result.status = SearchStatus::found;
    if (!verify_e_coloring(g, *result.ecoloring)) throw Error("e-colouring search produced an invalid result");
  } else {
    result.status = search.out_of_budget ? SearchStatus::none_within_budget : SearchStatus::proven_none;
  }
  return result;
}

long long for_each_e_coloring(const PlaneMultigraph& g, EdgeId e,
                              const std::function<bool(const EColoring&)>& visit) {
  check_edge(g, e);
  if (g.edge_count() > kOracleCap)
    throw CapExceeded("e-colouring enumeration is capped at " + std::to_string(kOracleCap) + " edges");
  long long count = 0;
  bool stopped = false;
  ESearch search(g, e, -1);
  for (ColorSet s : odd_color_sets()) {
    search.run(s, [&](const EColoring& ec) {
      ++count;
      if (!visit(ec)) stopped = true;
      return !stopped;
    });
    if (stopped) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// canonical shape

namespace {

struct Shape {
  bool doubled = false;  // (i): a colour of S twice among the other edges
  Color color = Color::alpha;
};

Shape shape_at(const PlaneMultigraph& g, const EColoring& ec, VertexId x) {
  for (int c = 0; c < kColorCount; ++c) {
    const Color col = color_at(c);
    const int n = others_at(g, ec, x, col);
    if (ec.e_colors.contains(col) && n == 2) return {true, col};
    if (!ec.e_colors.contains(col) && n == 3) return {false, col};
  }
  throw Error("unexpected colour distribution at an end of e");
}

DartId dart_at(const PlaneMultigraph& g, const EColoring& ec, VertexId x, Color c, int skip = 0) {
  for (DartId d : g.rotation(x)) {
    EdgeId y = g.edge_of(d);
    if (y != ec.e && ec.colors[y] == c && skip-- == 0) return d;
  }
  return -1;
}

class Rewriter {
 public:
  Rewriter(const PlaneMultigraph& g, CanonicalOutcome& out) : g_(g), out_(out) {}

  EColoring& ec() { return out_.ecoloring; }

  void record(std::string what) {
    if (static_cast<int>(out_.moves.size()) >= kCanonicalMoveBound)
      throw Error("canonicalization exceeded " + std::to_string(kCanonicalMoveBound) + " moves");
    if (Verdict v = verify_e_coloring(g_, ec()); !v) throw Error("move '" + what + "' broke the e-colouring: " + v.reason);
    out_.moves.push_back(std::move(what));
  }

  Chain chain_from(DartId start, Color a, Color b) {
    auto [x, y] = g_.endpoints(ec().e);
    const EdgeId e = ec().e;
    const EColoring& cur = ec();
    return walk_chain(g_, [&](EdgeId z) { return z == e ? -1 : index(cur.colors[z]); }, start, a, b,
                      ChainLimits{e, {x, y}});
  }

  void swap_chain(const Chain& chain) {
    for (EdgeId z : chain.edges(g_)) ec().colors[z] = ec().colors[z] == chain.a ? chain.b : chain.a;
  }

  void exchange(Color a, Color b) {
    for (EdgeId z = 0; z < g_.edge_count(); ++z) {
      if (z == ec().e) continue;
      if (ec().colors[z] == a) ec().colors[z] = b;
      else if (ec().colors[z] == b) ec().colors[z] = a;
    }
    const bool has_a = ec().e_colors.contains(a), has_b = ec().e_colors.contains(b);
    if (has_a != has_b) {
      if (has_a) { ec().e_colors.erase(a); ec().e_colors.insert(b); }
      else { ec().e_colors.erase(b); ec().e_colors.insert(a); }
    }
  }

  void finish_proper(EdgeColoring col, std::string what) {
    if (static_cast<int>(out_.moves.size()) >= kCanonicalMoveBound)
      throw Error("canonicalization exceeded " + std::to_string(kCanonicalMoveBound) + " moves");
    if (Verdict v = verify_coloring(g_, col); !v) throw Error("move '" + what + "' did not give a proper colouring: " + v.reason);
    out_.moves.push_back(std::move(what));
    out_.kind = CanonicalOutcome::Kind::proper_coloring;
    out_.proper = std::move(col);
  }

 private:
  const PlaneMultigraph& g_;
  CanonicalOutcome& out_;
};

std::string chain_text(const PlaneMultigraph& g, const Chain& ch) {
  std::string s = name(ch.a) + "/" + name(ch.b) + " chain [";
  bool first = true;
  for (EdgeId z : ch.edges(g)) {
    if (!first) s += " ";
    s += std::to_string(z);
    first = false;
  }
  return s + "]";
}

}  // namespace

CanonicalOutcome canonicalize_trigon(const PlaneMultigraph& g, const EColoring& input) {
  if (Verdict v = verify_e_coloring(g, input); !v) throw PreconditionError("not a valid e-colouring: " + v.reason);
  std::vector<EdgeId> bundle;
  for (const Multigon& m : find_multigons(g))
    if (std::find(m.edges.begin(), m.edges.end(), input.e) != m.edges.end()) bundle = m.edges;
  if (bundle.size() < 3) throw PreconditionError("e lies in a multigon of order < 3");
  std::erase(bundle, input.e);

  CanonicalOutcome out;
  out.ecoloring = input;
  if (is_canonical_trigon_shape(g, input)) {
    out.unchanged = true;
    return out;
  }
  Rewriter rw(g, out);
  EColoring& ec = rw.ec();
  const auto [v0, v1] = g.endpoints(ec.e);

  if (ec.e_colors.size() == 5) {
    const Color spare = (~ec.e_colors).first();
    EdgeId hit = -1;
    for (EdgeId z : bundle)
      if (ec.e_colors.contains(ec.colors[z])) {
        hit = z;
        break;
      }
    if (hit != -1) {
      const Color eps = ec.colors[hit];
      ColorSet rest = ec.e_colors;
      rest.erase(eps);
      const Color delta = rest.first();
      ec.e_colors.erase(eps);
      ec.e_colors.erase(delta);
      ec.colors[hit] = delta;
      rw.record("drop " + name(delta) + "," + name(eps) + " from e; edge " + std::to_string(hit) + " := " + name(delta));
    } else {
      std::vector<EdgeId> spare_edges;
      for (EdgeId z : bundle)
        if (ec.colors[z] == spare) spare_edges.push_back(z);
      if (spare_edges.size() < 2) throw Error("five-colour e with fewer than two spare-coloured bundle edges");
      ColorSet rest = ec.e_colors;
      const Color a = rest.first();
      rest.erase(a);
      const Color b = rest.first();
      ec.e_colors.erase(a);
      ec.e_colors.erase(b);
      ec.colors[spare_edges[0]] = a;
      ec.colors[spare_edges[1]] = b;
      rw.record("drop " + name(a) + "," + name(b) + " from e; edges " + std::to_string(spare_edges[0]) + "," +
                std::to_string(spare_edges[1]) + " := " + name(a) + "," + name(b));
    }
  }

  while (!is_canonical_trigon_shape(g, ec)) {
    for (EdgeId z : bundle) {
      if (!ec.e_colors.contains(ec.colors[z])) continue;
      ColorSet rest = ec.e_colors;
      rest.erase(ec.colors[z]);
      const Color to_edge = rest.first();
      rest.erase(to_edge);
      EdgeColoring col = ec.colors;
      col[z] = to_edge;
      col[ec.e] = rest.first();
      rw.finish_proper(std::move(col), "bundle edge " + std::to_string(z) + " := " + name(to_edge) + "; e := " +
                                           name(rest.first()));
      return out;
    }

    Shape sx = shape_at(g, ec, v0), sy = shape_at(g, ec, v1);
    VertexId x = v0, y = v1;
    if (!sx.doubled && sy.doubled) {
      std::swap(sx, sy);
      std::swap(x, y);
    }

    if (sx.doubled && sy.doubled) {
      // a twice at x, b twice at y: follow the ab-chain from a b-edge at y
      const Color a = sx.color, b = sy.color;
      Chain ch = rw.chain_from(dart_at(g, ec, y, b), a, b);
      if (ch.last_vertex(g) == x) {
        ColorSet rest = ec.e_colors;
        rest.erase(a);
        rest.erase(b);
        EdgeColoring col = ec.colors;
        for (EdgeId z : ch.edges(g)) col[z] = col[z] == a ? b : a;
        col[ec.e] = rest.first();
        rw.finish_proper(std::move(col), "swap " + chain_text(g, ch) + "; e := " + name(rest.first()));
        return out;
      }
      rw.swap_chain(ch);
      rw.record("swap " + chain_text(g, ch));
    } else if (sx.doubled) {
      // a twice at x, t three times at y
      const Color a = sx.color, t = sy.color;
      bool done = false;
      for (int k = 0; k < 3 && !done; ++k) {
        Chain ch = rw.chain_from(dart_at(g, ec, y, t, k), a, t);
        if (ch.last_vertex(g) == x && ec.colors[g.edge_of(ch.darts.back())] == a) {
          rw.swap_chain(ch);
          ec.e_colors.erase(a);
          ec.e_colors.insert(t);
          rw.record("swap " + chain_text(g, ch) + "; e := " + set_name(ec.e_colors));
          rw.exchange(a, t);
          rw.record("exchange " + name(a) + "<->" + name(t));
          done = true;
        }
      }
      for (int k = 0; k < 3 && !done; ++k) {
        Chain ch = rw.chain_from(dart_at(g, ec, y, t, k), a, t);
        if (ch.last_vertex(g) == y) {
          rw.swap_chain(ch);
          rw.record("swap " + chain_text(g, ch));
          done = true;
        }
      }
      if (!done) throw Error("no usable chain from the tripled end");
    } else if (sx.color == sy.color) {
      // t three times at both ends
      const Color t = sx.color, a = ec.e_colors.first();
      bool done = false;
      for (int k = 0; k < 3 && !done; ++k) {
        Chain ch = rw.chain_from(dart_at(g, ec, x, t, k), a, t);
        if (ch.last_vertex(g) != y) continue;
        rw.swap_chain(ch);
        ec.e_colors.erase(a);
        ec.e_colors.insert(t);
        rw.record("swap " + chain_text(g, ch) + "; e := " + set_name(ec.e_colors));
        rw.exchange(a, t);
        rw.record("exchange " + name(a) + "<->" + name(t));
        done = true;
      }
      if (!done) throw Error("no chain joins the two tripled ends");
    } else {
      // t1 three times at x, t2 three times at y: an x-x chain turns x into the doubled shape
      const Color t1 = sx.color, a = ec.e_colors.first();
      bool done = false;
      for (int k = 0; k < 3 && !done; ++k) {
        Chain ch = rw.chain_from(dart_at(g, ec, x, t1, k), a, t1);
        if (ch.last_vertex(g) != x) continue;
        rw.swap_chain(ch);
        rw.record("swap " + chain_text(g, ch));
        done = true;
      }
      if (!done) throw Error("no chain returns to the tripled end");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// mates

std::optional<Mate> mate_on_side(const PlaneMultigraph& g, const EColoring& ec, Color c, VertexMask side) {
  const auto members = cut_edges(g, side);
  if (std::find(members.begin(), members.end(), ec.e) == members.end()) return std::nullopt;
  Mate m;
  m.c = c;
  m.profile.fill(-1);
  std::array<int, kColorCount> seen{};
  for (EdgeId z : members)
    for (int k = 0; k < kColorCount; ++k)
      if (ec.assigned(z, color_at(k))) {
        ++seen[k];
        m.profile[k] = z;
      }
  for (int k = 0; k < kColorCount; ++k)
    if (k != index(c) && seen[k] != 1) return std::nullopt;
  m.profile[index(c)] = -1;
  m.c_edges = seen[index(c)];
  m.side = mask_side(side);
  m.edges = members;
  const int a = std::popcount(side);
  m.trivial = a == 1 || a == g.vertex_count() - 1;
  m.five_color_e = ec.e_colors.size() == 5;
  return m;
}

std::optional<EdgeColoring> extract_proper_coloring(const PlaneMultigraph& g, const EColoring& ec, long long budget) {
  auto [x, y] = g.endpoints(ec.e);
  if (ec.e_colors.size() == 3) {
    for (DartId d : g.rotation(x)) {
      EdgeId z = g.edge_of(d);
      if (z == ec.e || g.other_end(z, x) != y || !ec.e_colors.contains(ec.colors[z])) continue;
      ColorSet rest = ec.e_colors;
      rest.erase(ec.colors[z]);
      EdgeColoring col = ec.colors;
      col[z] = rest.first();
      rest.erase(rest.first());
      col[ec.e] = rest.first();
      if (verify_coloring(g, col)) return col;
    }
  }
  SolverOptions opt;
  opt.node_budget = budget;
  ColoringResult r = find_six_edge_coloring(g, opt);
  return r.coloring;
}

MateResult find_mate(const PlaneMultigraph& g, const EColoring& ec, Color c, const MateOptions& options) {
  if (Verdict v = verify_e_coloring(g, ec); !v) throw PreconditionError("not a valid e-colouring: " + v.reason);
  const int n = g.vertex_count();
  if (n > std::min(options.cap, kMaxCutCap))
    throw CapExceeded("mate search cap exceeded: " + std::to_string(n) + " vertices");

  MateResult result;
  auto [x, y] = g.endpoints(ec.e);
  for (VertexId t : {x, y}) {
    ++result.cuts_examined;
    if (auto m = mate_on_side(g, ec, c, VertexMask{1} << t)) {
      result.kind = MateResult::Kind::found;
      result.mate = std::move(m);
      return result;
    }
  }

  const VertexMask full = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  const std::uint64_t free_count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < free_count; ++bits) {
    const VertexMask side = 1 | (bits << 1);
    if (side == full) continue;
    const int a = std::popcount(side);
    if (a % 2 == 0 && (n - a) % 2 == 0) continue;
    if (a == 1 || a == n - 1) continue;
    if (((side >> x) & 1) == ((side >> y) & 1)) continue;
    ++result.cuts_examined;
    auto m = mate_on_side(g, ec, c, side);
    if (!m) continue;
    if (m->c_edges < 5) {
      result.short_witnesses.push_back(std::move(*m));
      continue;
    }
    result.kind = MateResult::Kind::found;
    result.mate = std::move(m);
    return result;
  }

  if (options.extract_on_failure) {
    if (auto col = extract_proper_coloring(g, ec)) {
      result.kind = MateResult::Kind::proper_coloring;
      result.proper = std::move(col);
    }
  }
  return result;
}

}  // namespace tjoin
