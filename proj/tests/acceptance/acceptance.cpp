// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/discharging.hpp"
#include "tjoin/ecoloring.hpp"
#include "tjoin/errors.hpp"
#include "tjoin/reductions.hpp"
#include "tjoin/workbench.hpp"

using namespace tjoin;
namespace fs = std::filesystem;

namespace {

// pinned limits (seconds) and sizes
constexpr double kEulerLimit = 1.0;
constexpr double kChargeLimitPerInstance = 1.0;
constexpr double kColorLimitSmall = 1.0;     // dk4, c4x3
constexpr double kColorLimitDq3 = 10.0;
constexpr double kColorLimitLarge = 120.0;   // doubled-dodecahedron and the rest
constexpr int kHypothesisCutCap = 20;        // enough to enumerate the dodecahedron
constexpr int kOddCutVertexLimit = 12;
constexpr int kMinSwapSpecs = 100;
constexpr int kSwapsPerInstanceAndK = 12;
constexpr double kSwapLimit = 60.0;
constexpr int kOracleEdgeLimit = 14;
constexpr double kEColoringLimit = 30.0;
constexpr int kSolverSeeds = 5;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Instance {
  std::string name;
  PlaneMultigraph graph;
};

std::vector<Instance> corpus() {
  std::vector<Instance> out;
  for (const auto& spec : named_instances()) out.push_back({spec.label(), generate(spec)});
  out.push_back({"tripled-cycle(4)", generate({"tripled-cycle", 4})});
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(TJOIN_TEST_DATA)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) out.push_back({p.filename().string(), read_graph_file(p.string())});
  return out;
}

bool has_cyclic_multigon(const PlaneMultigraph& g) {
  for (const auto& m : find_multigons(g))
    if (m.cyclic) return true;
  return false;
}

bool t_is_v(const PlaneMultigraph& g) { return static_cast<int>(g.terminals().size()) == g.vertex_count(); }

int failures = 0;

void report(const char* id, const char* title, bool pass, const std::string& detail, double seconds) {
  std::printf("%s %s %s: %s (%.2f s)\n", id, pass ? "PASS" : "FAIL", title, detail.c_str(), seconds);
  std::fflush(stdout);
  failures += !pass;
}

template <typename F>
void run(const char* id, const char* title, F&& body) {
  const auto t0 = Clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, title, pass, detail, since(t0));
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

int main() {
  const std::vector<Instance> all = corpus();

  run("AC1", "euler", [&](std::string& d) {
    const auto t0 = Clock::now();
    int bad = 0, n = 0;
    for (const auto& spec : named_instances()) {
      PlaneMultigraph g = generate(spec);
      const int faces = oracle::count_faces(g);
      bad += g.vertex_count() - g.edge_count() + faces != 2 || faces != g.face_count();
      ++n;
    }
    const double t = since(t0);
    d = std::to_string(n) + " named instances, " + std::to_string(bad) + " failures, limit " +
        std::to_string(kEulerLimit) + " s";
    return bad == 0 && t < kEulerLimit;
  });

  run("AC2", "charge-totals", [&](std::string& d) {
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& inst : all) {
      if (has_cyclic_multigon(inst.graph) || !inst.graph.is_regular(6)) continue;
      const auto t0 = Clock::now();
      FaceClassification cls = classify(inst.graph);
      ChargeLedger init = initial_charges(cls);
      ChargeLedger fin = final_charges(init, rule_applications(cls));
      // independent total: sum over faces of 4(d - 3), bigon faces included
      int euler_total = 0;
      for (const Face& f : inst.graph.faces()) euler_total += 4 * (f.degree() - 3);
      const double t = since(t0);
      if (init.total() != kExpectedTotal || euler_total != kExpectedTotal || fin.total() != init.total() ||
          t >= kChargeLimitPerInstance)
        bad.push_back(inst.name);
      ++checked;
    }
    d = std::to_string(checked) + " classified 6-regular instances at -24 quarter-units, conserved";
    if (!bad.empty()) d += "; failing: " + join(bad);
    return bad.empty() && checked > 0;
  });

  run("AC3", "golden-censuses", [&](std::string& d) {
    struct Golden {
      const char* spec;
      int degree, face_final;
    };
    // hand application of the rules: 0 - 3*2, 4 - 4*4, 4 - 4*2
    std::vector<std::string> bad;
    for (Golden gd : {Golden{"dk4", 3, -6}, Golden{"c4x3", 4, -12}, Golden{"dq3", 4, -4}}) {
      PlaneMultigraph g = generate(parse_instance_spec(gd.spec));
      FaceClassification cls = classify(g);
      ChargeLedger fin = final_charges(initial_charges(cls), rule_applications(cls));
      for (const auto& [e, c] : fin.charge) {
        const bool ok = e.kind == ItemKind::face ? (cls.faces[e.id].degree == gd.degree && c == gd.face_final) : c == 0;
        if (!ok) bad.push_back(std::string(gd.spec) + " " + element_label(e) + " = " + std::to_string(c));
      }
    }
    d = bad.empty() ? "dk4 -6/0, c4x3 -12/0, dq3 -4/0 exact" : join(bad);
    return bad.empty();
  });

  run("AC4", "theorem-desk-check", [&](std::string& d) {
    std::vector<std::string> bad, timings;
    int colored = 0;
    for (const auto& spec : named_instances()) {
      PlaneMultigraph g = generate(spec);
      if (min_odd_cut(g, kHypothesisCutCap).min_odd.size < 6 || !g.is_regular(6)) continue;
      const auto t0 = Clock::now();
      ColoringResult r = find_six_edge_coloring(g);
      bool ok = r.coloring && verify_coloring(g, *r.coloring).accepted && oracle::proper(g, [&] {
                  std::vector<int> c;
                  for (Color x : *r.coloring) c.push_back(index(x));
                  return c;
                }());
      if (ok) {
        TJoinPacking p = packing_from_coloring(g, *r.coloring);
        ok = p.joins.size() == 6 && verify_packing(g, g.terminals(), p).accepted;
      }
      const double t = since(t0);
      const double limit = (spec.name == "dk4" || spec.name == "c4x3") ? kColorLimitSmall
                           : spec.name == "dq3"                        ? kColorLimitDq3
                                                                       : kColorLimitLarge;
      if (!ok || t >= limit) bad.push_back(spec.label());
      colored += ok;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s %.3fs", spec.label().c_str(), t);
      timings.push_back(buf);
    }
    d = std::to_string(colored) + " instances coloured and packed [" + join(timings) + "]";
    if (!bad.empty()) d += "; failing: " + join(bad);
    return bad.empty() && colored == static_cast<int>(named_instances().size());
  });

  run("AC5", "odd-cut-lower-bound", [&](std::string& d) {
    long long checks = 0, violations = 0;
    int colorings = 0;
    for (const auto& inst : all) {
      const PlaneMultigraph& g = inst.graph;
      if (g.vertex_count() > kOddCutVertexLimit || !g.is_regular(6) || !t_is_v(g)) continue;
      std::vector<EdgeColoring> found;
      for (int s = 0; s < kSolverSeeds; ++s) {
        SolverOptions o;
        o.seed = static_cast<std::uint64_t>(s);
        if (auto r = find_six_edge_coloring(g, o); r.coloring) found.push_back(*r.coloring);
      }
      if (g.edge_count() <= kOracleEdgeLimit)
        if (auto w = oracle_coloring(g); w.coloring) found.push_back(*w.coloring);
      const auto edges = oracle::raw_edges(g);
      const auto sides = oracle::odd_cuts(g).odd_sides;
      for (const EdgeColoring& col : found) {
        ++colorings;
        for (std::uint64_t side : sides) {
          std::array<int, 6> crossing{};
          for (size_t i = 0; i < edges.size(); ++i)
            if (((side >> edges[i].u) & 1) != ((side >> edges[i].v) & 1)) ++crossing[index(col[i])];
          ++checks;
          for (int c : crossing) violations += c == 0;
        }
      }
    }
    d = std::to_string(colorings) + " colourings x odd cuts = " + std::to_string(checks) + " checks, " +
        std::to_string(violations) + " colour classes missing a cut";
    return violations == 0 && checks > 0;
  });

  run("AC6", "swap-perturbation", [&](std::string& d) {
    const auto t0 = Clock::now();
    int specs = 0, by_k[9] = {};
    long long violations = 0;
    int worst[9] = {};
    auto check = [&](const PlaneMultigraph& g, const SwapSpec& s) {
      SwapResult r = apply_swap(g, s);
      const int n = g.vertex_count();
      const int bound = s.k() == 8 ? 4 : 2;
      const auto e1 = oracle::raw_edges(g), e2 = oracle::raw_edges(r.graph);
      for (std::uint64_t side = 1; side + 1 < (std::uint64_t{1} << n); side += 2) {
        int c1 = 0, c2 = 0;
        for (const auto& e : e1) c1 += ((side >> e.u) & 1) != ((side >> e.v) & 1);
        for (const auto& e : e2) c2 += ((side >> e.u) & 1) != ((side >> e.v) & 1);
        const int delta = std::abs(c2 - c1);
        worst[s.k()] = std::max(worst[s.k()], delta);
        violations += delta > bound;
      }
      ++specs;
      ++by_k[s.k()];
    };
    for (const auto& spec : named_instances()) {
      PlaneMultigraph g = generate(spec);
      if (g.vertex_count() > kOddCutVertexLimit) continue;
      for (int k : {4, 6})
        for (const SwapSpec& s : enumerate_swaps(g, k, kSwapsPerInstanceAndK)) check(g, s);
    }
    // k = 8: an 8-face of the doubled 8-prism
    {
      PlaneMultigraph g = generate({"doubled-prism", 8});
      for (const Face& f : g.faces()) {
        if (f.degree() != 8) continue;
        std::vector<VertexId> v;
        for (DartId x : f.boundary) v.push_back(g.origin(x));
        check(g, SwapSpec{v, {f.id, f.id, f.id, f.id}});
        break;
      }
    }
    const bool enough = by_k[4] + by_k[6] >= kMinSwapSpecs && by_k[4] > 0 && by_k[6] > 0 && by_k[8] > 0;
    const double t = since(t0);
    d = std::to_string(by_k[4]) + " k=4 (max " + std::to_string(worst[4]) + "), " + std::to_string(by_k[6]) +
        " k=6 (max " + std::to_string(worst[6]) + "), " + std::to_string(by_k[8]) + " k=8 (max " +
        std::to_string(worst[8]) + "), " + std::to_string(violations) + " violations";
    return violations == 0 && enough && t < kSwapLimit;
  });

  run("AC7", "catalog-completeness", [&](std::string& d) {
    std::vector<std::string> bad;
    int audited = 0, with_hypotheses = 0;
    for (const auto& inst : all) {
      AuditReport r = audit(inst.graph);
      ++audited;
      if (r.verdict != AuditReport::Verdict::consistent) bad.push_back(inst.name + " ANOMALY");
      if (!r.conserved()) bad.push_back(inst.name + " not conserved");
      if (r.hypotheses_met) {
        ++with_hypotheses;
        if (r.violations.empty()) bad.push_back(inst.name + " no violation");
      }
      for (const auto& n : r.negatives)
        if (n.family.empty()) bad.push_back(inst.name + " unannotated " + element_label(n.element));
    }
    d = std::to_string(audited) + " audited, " + std::to_string(with_hypotheses) +
        " meet the hypotheses, all consistent with annotated negatives";
    if (!bad.empty()) d = join(bad);
    return bad.empty();
  });

  run("AC8", "oracle-equivalence", [&](std::string& d) {
    int compared = 0, disagreements = 0, colorable = 0;
    for (const auto& inst : all) {
      const PlaneMultigraph& g = inst.graph;
      if (!g.is_regular(6) || g.edge_count() > kOracleEdgeLimit) continue;
      const bool truth = oracle::six_colorable(g);
      const bool workbench = oracle_coloring(g).coloring.has_value();
      for (int s = 0; s < kSolverSeeds; ++s) {
        SolverOptions o;
        o.seed = static_cast<std::uint64_t>(s);
        o.oracle_cap = 0;
        o.exhaustive = true;
        ColoringResult r = find_six_edge_coloring(g, o);
        const bool solver = r.status == SearchStatus::found;
        if (!solver && r.status != SearchStatus::proven_none) ++disagreements;
        disagreements += solver != truth || workbench != truth;
        ++compared;
      }
      colorable += truth;
    }
    d = std::to_string(compared) + " solver runs on small 6-regular graphs (" + std::to_string(colorable) +
        " distinct colourable inputs), " + std::to_string(disagreements) + " disagreements";
    return disagreements == 0 && compared > 0;
  });

  run("AC9", "e-coloring-layer", [&](std::string& d) {
    const auto t0 = Clock::now();
    PlaneMultigraph hb = generate({"hexabond", 0});
    long long mismatches = 0, counted = 0, not_canonical = 0, canonicalized = 0;
    // verify_e_coloring against the parity predicate on every candidate for e = 0
    {
      const auto edges = oracle::raw_edges(hb);
      EColoring ec;
      ec.e = 0;
      ec.colors.assign(hb.edge_count(), Color::alpha);
      for (int set = 0; set < 64; ++set) {
        ec.e_colors = ColorSet(static_cast<std::uint8_t>(set));
        for (int code = 0; code < 7776; ++code) {
          int x = code;
          for (int i = 1; i < hb.edge_count(); ++i, x /= 6) ec.colors[i] = color_at(x % 6);
          int parity[2] = {0, 0};
          for (size_t i = 0; i < edges.size(); ++i) {
            const int bits = i == 0 ? set : 1 << index(ec.colors[i]);
            parity[edges[i].u] ^= bits;
            parity[edges[i].v] ^= bits;
          }
          const int k = std::popcount(static_cast<unsigned>(set));
          const bool truth = k >= 3 && k % 2 == 1 && parity[0] == 63 && parity[1] == 63;
          mismatches += verify_e_coloring(hb, ec).accepted != truth;
          counted += truth;
        }
      }
    }
    long long enumerated = 0;
    for (EdgeId e = 0; e < hb.edge_count(); ++e) {
      const long long visited = for_each_e_coloring(hb, e, [&](const EColoring& ec) {
        CanonicalOutcome out = canonicalize_trigon(hb, ec);
        ++canonicalized;
        not_canonical += out.kind != CanonicalOutcome::Kind::canonical || !is_canonical_trigon_shape(hb, out.ecoloring);
        return true;
      });
      if (e == 0) enumerated = visited;
      mismatches += visited != oracle::count_e_colorings(hb, e);
    }
    mismatches += enumerated != counted;

    // every non-trivial c-mate returned by the search has at least five c-edges
    long long mates = 0, nontrivial = 0, short_mates = 0, short_witnesses = 0;
    for (const auto& inst : all) {
      const PlaneMultigraph& g = inst.graph;
      if (!g.is_regular(6) || g.vertex_count() > kOddCutVertexLimit) continue;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EColoringResult r = find_e_coloring(g, e);
        if (!r.ecoloring) continue;
        for (int c = 0; c < kColorCount; ++c) {
          MateResult m = find_mate(g, *r.ecoloring, color_at(c));
          short_witnesses += static_cast<long long>(m.short_witnesses.size());
          if (!m.mate) continue;
          ++mates;
          if (m.mate->trivial) continue;
          ++nontrivial;
          short_mates += m.mate->c_edges < 5;
        }
      }
    }
    // direct check: every non-trivial odd side of a graph whose non-trivial odd cuts have size >= 8
    long long side_checks = 0, side_mates = 0, side_short = 0;
    for (const auto& inst : all) {
      const PlaneMultigraph& g = inst.graph;
      if (!g.is_regular(6) || !t_is_v(g) || g.vertex_count() > kOddCutVertexLimit) continue;
      const oracle::OddCuts cuts = oracle::odd_cuts(g);
      if (cuts.min_nontrivial < 8) continue;
      const int n = g.vertex_count();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EColoringResult r = find_e_coloring(g, e);
        if (!r.ecoloring) continue;
        for (std::uint64_t side : cuts.odd_sides) {
          const int k = std::popcount(side);
          if (k == 1 || k == n - 1) continue;
          for (int c = 0; c < kColorCount; ++c) {
            ++side_checks;
            auto m = mate_on_side(g, *r.ecoloring, color_at(c), side);
            if (!m) continue;
            ++side_mates;
            side_short += m->c_edges < 5;
          }
        }
      }
    }
    const double t = since(t0);
    std::ostringstream os;
    os << side_checks << " non-trivial side checks, " << side_mates << " non-trivial mates, " << side_short
       << " with < 5 c-edges; " << counted << " valid HB6 e-colourings for e=0 (oracle agrees), " << canonicalized << " canonicalized, "
       << not_canonical << " not canonical, " << mismatches << " count mismatches; " << mates << " mates ("
       << nontrivial << " non-trivial, " << short_mates << " with < 5 c-edges; " << short_witnesses
       << " short non-trivial profiles reported separately)";
    d = os.str();
    return mismatches == 0 && not_canonical == 0 && short_mates == 0 && side_short == 0 && t < kEColoringLimit;
  });

  run("AC10", "format-stability", [&](std::string& d) {
    int checked = 0;
    std::vector<std::string> bad;
    for (const auto& inst : all) {
      const std::string text = serialize_text(inst.graph);
      const std::string json = serialize_json(inst.graph);
      const bool ok = serialize_text(parse_plane_graph(text)) == text && serialize_json(parse_plane_graph(json)) == json &&
                      parse_plane_graph(text) == inst.graph && parse_plane_graph(json) == inst.graph;
      if (!ok) bad.push_back(inst.name);
      ++checked;
    }
    d = std::to_string(checked) + " instances round-tripped through text and JSON";
    if (!bad.empty()) d += "; failing: " + join(bad);
    return bad.empty();
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
