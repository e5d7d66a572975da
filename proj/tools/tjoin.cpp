// tjoin: command-line front end for the T-join workbench.
#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "tjoin/coloring.hpp"
#include "tjoin/cuts.hpp"
#include "tjoin/discharging.hpp"
#include "tjoin/ecoloring.hpp"
#include "tjoin/errors.hpp"
#include "tjoin/json_io.hpp"
#include "tjoin/reductions.hpp"
#include "tjoin/workbench.hpp"

namespace fs = std::filesystem;
using namespace tjoin;

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kAnomaly = 2 };

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 0;
  int cut_cap = kDefaultCutCap;
};

// "gen:<spec>" builds a named instance instead of reading a file
PlaneMultigraph load(const std::string& path) {
  if (path.rfind("gen:", 0) == 0) return generate(parse_instance_spec(path.substr(4)));
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_plane_graph(ss.str());
  }
  return read_graph_file(path);
}

void print_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it->is_object() || (it->is_array() && !it->empty() && (it->front().is_object() || it->front().is_array())))
        print_text(*it, key, os);
      else
        os << key << ": " << it->dump() << "\n";
    }
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "text")
    print_text(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

std::string read_spec_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read swap spec " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json audit_summary(const std::string& name, const AuditReport& r) {
  Json neg = Json::array();
  for (const auto& n : r.negatives) {
    Json x = item_json(n.element);
    x["charge"] = n.charge;
    x["family"] = n.family;
    neg.push_back(x);
  }
  std::vector<std::string> lemmas;
  for (const auto& m : r.violations) lemmas.emplace_back(lemma_id(m.lemma));
  std::sort(lemmas.begin(), lemmas.end());
  lemmas.erase(std::unique(lemmas.begin(), lemmas.end()), lemmas.end());
  return Json{{"file", name},
              {"verdict", r.verdict_text()},
              {"initial_total", r.initial_total},
              {"final_total", r.final_total},
              {"violated_lemmas", lemmas},
              {"negative_elements", neg}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"T-join workbench: plane multigraphs, cuts, 6-edge-colourings, reductions and discharging"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", gl.seed, "Solver seed (0 keeps ascending colour order)");
  app.add_option("--cut-cap", gl.cut_cap, "Largest vertex count for cut enumeration")->check(CLI::Range(1, kMaxCutCap));

  std::string file, out_path, spec_arg, color_arg, dir;
  int max_size = -1, edge = -1;
  bool nontrivial = false, exhaustive = false, canonicalize = false, units = false, quarters = false,
       check_cuts = false, extract = false;
  long long budget = SolverOptions{}.node_budget;

  auto* gen = app.add_subcommand("generate", "Build a named instance");
  std::string gen_spec;
  gen->add_option("spec", gen_spec, "hexabond, dk4, c4x3, dq3, doubled-prism(n), doubled-dodecahedron, tripled-cycle(n)")
      ->required();
  gen->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file, '-' for stdin, or gen:<spec>")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Faces, multigons and face classification");
  add_file(analyze);
  auto* cuts = app.add_subcommand("cuts", "Minimum odd cuts and the T-cut parity report");
  add_file(cuts);
  cuts->add_option("--max-size", max_size, "Also list odd cuts up to this size");
  cuts->add_flag("--nontrivial", nontrivial, "List non-trivial cuts only");
  auto* color = app.add_subcommand("color", "Find a proper 6-edge-colouring");
  add_file(color);
  color->add_option("--budget", budget, "Search node budget");
  color->add_flag("--exhaustive", exhaustive, "Ignore the node budget");
  auto* pack = app.add_subcommand("pack", "Six disjoint T-joins from a colouring");
  add_file(pack);
  pack->add_option("--budget", budget, "Search node budget");
  auto* ecolor = app.add_subcommand("ecolor", "Find an e-colouring");
  add_file(ecolor);
  ecolor->add_option("--edge", edge, "The distinguished edge")->required();
  ecolor->add_flag("--canonicalize", canonicalize, "Rewrite into the canonical trigon shape");
  auto* mate = app.add_subcommand("mate", "Search a c-mate of an e-colouring");
  add_file(mate);
  mate->add_option("--edge", edge, "The distinguished edge")->required();
  mate->add_option("--color", color_arg, "Colour c")->required();
  mate->add_flag("--extract", extract, "Extract a proper colouring when no mate exists");
  auto* swap = app.add_subcommand("swap", "Apply a v1..vk swap");
  add_file(swap);
  swap->add_option("--spec", spec_arg, "Swap spec as JSON text or a JSON file")->required();
  swap->add_flag("--check-cuts", check_cuts, "Compare every cut before and after");
  auto* catalog = app.add_subcommand("catalog", "Evaluate the configuration catalog");
  add_file(catalog);
  auto* discharge = app.add_subcommand("discharge", "Initial charges, rule applications, final charges");
  add_file(discharge);
  auto* unit_group = discharge->add_option_group("unit");
  unit_group->add_flag("--quarters", quarters, "Charges in quarter-units (default)");
  unit_group->add_flag("--units", units, "Charges in units");
  unit_group->require_option(0, 1);
  auto* audit_cmd = app.add_subcommand("audit", "Full discharging audit with a verdict");
  add_file(audit_cmd);
  auto* batch = app.add_subcommand("batch", "Audit every graph file in a directory");
  batch->add_option("dir", dir, "Directory with *.pg or *.json files")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  SolverOptions solver;
  solver.seed = gl.seed;
  solver.node_budget = budget;
  solver.exhaustive = exhaustive;

  try {
    if (gen->parsed()) {
      PlaneMultigraph g = generate(parse_instance_spec(gen_spec));
      const std::string text = gl.format == "json" && out_path.empty() ? serialize_json(g) : serialize_text(g);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(out_path);
        os << (out_path.ends_with(".json") ? serialize_json(g) : serialize_text(g));
        if (!os) throw InputError("cannot write " + out_path);
      }
      return kOk;
    }

    if (batch->parsed()) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && (entry.path().extension() == ".pg" || entry.path().extension() == ".json"))
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<std::future<Json>> jobs;
      for (const auto& p : files)
        jobs.push_back(std::async(std::launch::async, [p, cap = gl.cut_cap] {
          try {
            return audit_summary(p.filename().string(), audit(read_graph_file(p.string()), AuditOptions{cap}));
          } catch (const Error& e) {
            return Json{{"file", p.filename().string()}, {"error", e.what()}};
          }
        }));
      Json out = Json::array();
      int code = kOk;
      for (auto& j : jobs) {
        Json r = j.get();
        if (r.contains("error")) code = std::max<int>(code, kInputError);
        if (r.value("verdict", "") == "ANOMALY") code = kAnomaly;
        out.push_back(r);
      }
      emit(gl, out);
      return code;
    }

    const PlaneMultigraph g = load(file);

    if (analyze->parsed()) {
      emit(gl, analysis_json(g));
    } else if (cuts->parsed()) {
      Json j = odd_cut_report_json(min_odd_cut(g, gl.cut_cap));
      if (max_size >= 0 || nontrivial) {
        CutFilter f;
        f.nontrivial_only = nontrivial;
        if (max_size >= 0) f.max_size = max_size;
        Json list = Json::array();
        for (const Cut& c : enumerate_odd_cuts(g, f, gl.cut_cap)) list.push_back(cut_json(c));
        j["odd_cuts"] = list;
      }
      emit(gl, j);
    } else if (color->parsed() || pack->parsed()) {
      ColoringResult r = find_six_edge_coloring(g, solver);
      Json j{{"status", status_name(r.status)},
             {"nodes", r.nodes},
             {"kempe_repairs", r.kempe_repairs},
             {"oracle_used", r.oracle_used}};
      if (r.coloring) {
        if (color->parsed()) {
          j["coloring"] = coloring_json(*r.coloring);
        } else {
          TJoinPacking p = packing_from_coloring(g, *r.coloring);
          Verdict v = verify_packing(g, g.terminals(), p);
          j["packing"] = packing_json(p);
          j["verified"] = v.accepted;
        }
      }
      emit(gl, j);
      if (!r.coloring) return kInputError;
    } else if (ecolor->parsed()) {
      EColoringResult r = find_e_coloring(g, edge);
      Json j{{"status", status_name(r.status)}, {"nodes", r.nodes}};
      if (r.ecoloring) {
        j["ecoloring"] = ecoloring_json(*r.ecoloring);
        j["canonical_shape"] = is_canonical_trigon_shape(g, *r.ecoloring);
        if (canonicalize) j["canonical"] = canonical_json(canonicalize_trigon(g, *r.ecoloring));
      }
      emit(gl, j);
      if (!r.ecoloring) return kInputError;
    } else if (mate->parsed()) {
      auto c = parse_color(color_arg);
      if (!c) throw InputError("unknown colour " + color_arg);
      EColoringResult r = find_e_coloring(g, edge);
      if (!r.ecoloring) throw Error("no e-colouring found: " + std::string(status_name(r.status)));
      MateOptions mo;
      mo.cap = gl.cut_cap;
      mo.extract_on_failure = extract;
      Json j{{"ecoloring", ecoloring_json(*r.ecoloring)}, {"result", mate_result_json(find_mate(g, *r.ecoloring, *c, mo))}};
      emit(gl, j);
    } else if (swap->parsed()) {
      Json sj;
      try {
        sj = Json::parse(read_spec_arg(spec_arg));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad swap spec: ") + e.what());
      }
      SwapSpec spec = parse_swap_spec(sj);
      Verdict v = validate_swap(g, spec);
      if (!v) {
        emit(gl, Json{{"valid", false}, {"reason", v.reason}});
        return kInputError;
      }
      SwapResult res = apply_swap(g, spec);
      Json j{{"valid", true}, {"spec", swap_spec_json(res.spec)}, {"graph", Json::parse(serialize_json(res.graph))}};
      if (check_cuts) j["cut_perturbation"] = perturbation_json(check_swap_cut_property(g, res.graph, spec.k(), gl.cut_cap));
      emit(gl, j);
    } else if (catalog->parsed()) {
      emit(gl, catalog_json(run_catalog(g, classify(g), CatalogOptions{gl.cut_cap})));
    } else if (discharge->parsed()) {
      const bool q = !units;
      const FaceClassification cls = classify(g);
      ChargeLedger init = initial_charges(cls);
      auto apps = rule_applications(cls);
      ChargeLedger fin = final_charges(init, apps);
      Json a = Json::array();
      for (const auto& x : apps) a.push_back(application_json(x, q));
      emit(gl, Json{{"initial", ledger_json(init, q)}, {"applications", a}, {"final", ledger_json(fin, q)}});
    } else if (audit_cmd->parsed()) {
      AuditReport r = audit(g, AuditOptions{gl.cut_cap});
      emit(gl, audit_json(r));
      if (r.verdict == AuditReport::Verdict::anomaly) {
        std::cerr << "ANOMALY: no catalog violation on an instance meeting the hypotheses\n";
        return kAnomaly;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
