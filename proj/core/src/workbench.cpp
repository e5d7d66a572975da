#include "tjoin/workbench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "tjoin/errors.hpp"

namespace tjoin {

std::string InstanceSpec::label() const {
  if (name == "doubled-prism" || name == "tripled-cycle")
    return name + "(" + std::to_string(param) + ")";
  return name;
}

InstanceSpec parse_instance_spec(std::string_view text) {
  InstanceSpec spec;
  auto open = text.find_first_of("(:");
  if (open == std::string_view::npos) {
    spec.name = std::string(text);
    return spec;
  }
  spec.name = std::string(text.substr(0, open));
  auto rest = text.substr(open + 1);
  if (text[open] == '(') {
    if (rest.empty() || rest.back() != ')') throw InputError("bad instance spec '" + std::string(text) + "'");
    rest.remove_suffix(1);
  }
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), spec.param);
  if (ec != std::errc{} || p != rest.data() + rest.size())
    throw InputError("bad instance parameter in '" + std::string(text) + "'");
  return spec;
}

PlaneMultigraph from_straight_line(const std::vector<Point>& points,
                                   std::vector<std::pair<VertexId, VertexId>> edges) {
  const int n = static_cast<int>(points.size());
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InputError("straight-line edge out of range");
  }
  std::sort(edges.begin(), edges.end());

  std::vector<std::vector<std::pair<double, DartId>>> around(n);
  std::vector<std::array<DartId, 2>> table;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    auto [u, v] = edges[i];
    const double dx = points[v].x - points[u].x;
    const double dy = points[v].y - points[u].y;
    around[u].push_back({std::atan2(dy, dx), 2 * i});
    around[v].push_back({std::atan2(-dy, -dx), 2 * i + 1});
    table.push_back({2 * i, 2 * i + 1});
  }
  std::vector<std::vector<DartId>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto [angle, d] : around[v]) rot[v].push_back(d);
  }
  return PlaneMultigraph(n, std::move(rot), std::move(table));
}

PlaneMultigraph multiply_edges(const PlaneMultigraph& g, int m) {
  if (m < 1) throw InputError("edge multiplicity must be positive");
  std::vector<std::vector<DartId>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (DartId d : g.rotation(v)) {
      const EdgeId e = g.edge_of(d);
      if (g.dart(d).end == DartEnd::tail) {
        for (int k = 0; k < m; ++k) rot[v].push_back(2 * (m * e + k));
      } else {
        for (int k = m - 1; k >= 0; --k) rot[v].push_back(2 * (m * e + k) + 1);
      }
    }
  }
  std::vector<std::array<DartId, 2>> edges;
  for (int i = 0; i < m * g.edge_count(); ++i) edges.push_back({2 * i, 2 * i + 1});
  return PlaneMultigraph(g.vertex_count(), std::move(rot), std::move(edges));
}

namespace {

Point polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

PlaneMultigraph k4() {
  std::vector<Point> p;
  for (int i = 0; i < 3; ++i) p.push_back(polar(1, std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3));
  p.push_back({0, 0});
  return from_straight_line(p, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

PlaneMultigraph cycle(int n) {
  std::vector<Point> p;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) {
    p.push_back(polar(1, 2 * std::numbers::pi * i / n));
    e.push_back({i, (i + 1) % n});
  }
  return from_straight_line(p, e);
}

PlaneMultigraph prism(int n) {
  std::vector<Point> p;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n; ++i) p.push_back(polar(2, 2 * std::numbers::pi * i / n));
  for (int i = 0; i < n; ++i) p.push_back(polar(1, 2 * std::numbers::pi * i / n));
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({n + i, n + (i + 1) % n});
    e.push_back({i, n + i});
  }
  return from_straight_line(p, e);
}

PlaneMultigraph dodecahedron() {
  // outer pentagon o0..o4, middle decagon m0..m9, inner pentagon n0..n4
  std::vector<Point> p;
  const double step = 2 * std::numbers::pi / 10;
  for (int i = 0; i < 5; ++i) p.push_back(polar(3, 2 * i * step));
  for (int j = 0; j < 10; ++j) p.push_back(polar(2, j * step));
  for (int i = 0; i < 5; ++i) p.push_back(polar(1, (2 * i + 1) * step));
  auto o = [](int i) { return i % 5; };
  auto m = [](int j) { return 5 + j % 10; };
  auto in = [](int i) { return 15 + i % 5; };
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({o(i), o(i + 1)});
    e.push_back({o(i), m(2 * i)});
    e.push_back({m(2 * i + 1), in(i)});
    e.push_back({in(i), in(i + 1)});
  }
  for (int j = 0; j < 10; ++j) e.push_back({m(j), m(j + 1)});
  return from_straight_line(p, e);
}

PlaneMultigraph hexabond() {
  std::vector<std::vector<DartId>> rot(2);
  std::vector<std::array<DartId, 2>> edges;
  for (int i = 0; i < 6; ++i) {
    rot[0].push_back(2 * i);
    rot[1].push_back(2 * (5 - i) + 1);
    edges.push_back({2 * i, 2 * i + 1});
  }
  return PlaneMultigraph(2, std::move(rot), std::move(edges));
}

}  // namespace

PlaneMultigraph generate(const InstanceSpec& spec) {
  const std::string& n = spec.name;
  if (n == "hexabond") return hexabond();
  if (n == "dk4") return multiply_edges(k4(), 2);
  if (n == "c4x3") return multiply_edges(cycle(4), 3);
  if (n == "dq3") return multiply_edges(prism(4), 2);
  if (n == "doubled-dodecahedron") return multiply_edges(dodecahedron(), 2);
  if (n == "doubled-prism") {
    if (spec.param < 3) throw InputError("doubled-prism needs n >= 3");
    return multiply_edges(prism(spec.param), 2);
  }
  if (n == "tripled-cycle") {
    if (spec.param < 3) throw InputError("tripled-cycle needs n >= 3");
    if (spec.param % 2) throw InputError("tripled-cycle needs an even n (T = V must have even size)");
    return multiply_edges(cycle(spec.param), 3);
  }
  throw InputError("unknown generator '" + n + "'");
}

std::vector<InstanceSpec> named_instances() {
  std::vector<InstanceSpec> out{{"hexabond", 0}, {"dk4", 0}, {"c4x3", 0}, {"dq3", 0}};
  for (int n = 3; n <= 6; ++n) out.push_back({"doubled-prism", n});
  out.push_back({"doubled-dodecahedron", 0});
  return out;
}

OracleResult oracle_coloring(const PlaneMultigraph& g, int cap) {
  if (g.edge_count() > cap)
    throw CapExceeded("oracle cap exceeded: " + std::to_string(g.edge_count()) + " edges > " +
                      std::to_string(cap));
  const int edges = g.edge_count();
  std::vector<ColorSet> used(g.vertex_count());
  EdgeColoring col(edges, Color::alpha);
  OracleResult result;

  auto search = [&](auto&& self, int e) -> bool {
    if (e == edges) return true;
    auto [u, v] = g.endpoints(e);
    for (int c = 0; c < kColorCount; ++c) {
      Color color = color_at(c);
      if (used[u].contains(color) || used[v].contains(color)) continue;
      ++result.nodes;
      col[e] = color;
      used[u].insert(color);
      used[v].insert(color);
      if (self(self, e + 1)) return true;
      used[u].erase(color);
      used[v].erase(color);
    }
    return false;
  };
  if (search(search, 0)) result.coloring = col;
  return result;
}

PlaneMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_plane_graph(buf.str());
}

}  // namespace tjoin
