#include "tjoin/json_io.hpp"

#include "tjoin/errors.hpp"

namespace tjoin {

namespace {

Json colors_json(ColorSet s) {
  Json out = Json::array();
  s.for_each([&](Color c) { out.push_back(color_name(c)); });
  return out;
}

Json charge_value(int quarters, bool as_quarters) {
  if (as_quarters) return quarters;
  return static_cast<double>(quarters) / kQuartersPerUnit;
}

}  // namespace

Json item_json(ItemRef item) {
  return Json{{"kind", item.kind == ItemKind::face ? "face" : "multigon"}, {"id", item.id}};
}

Json cut_json(const Cut& cut) {
  return Json{{"side", cut.side},   {"size", cut.size},       {"odd", cut.odd},
              {"t_odd", cut.t_odd}, {"trivial", cut.trivial}, {"empty_side", cut.empty_side}};
}

Json odd_cut_report_json(const OddCutReport& r) {
  Json j;
  j["min_odd_cut"] = cut_json(r.min_odd);
  j["min_nontrivial_odd_cut"] = r.min_nontrivial ? cut_json(*r.min_nontrivial) : Json(nullptr);
  j["t_cut_parity"] = Json{{"t_cuts", r.t_parity.t_cuts},
                           {"even", r.t_parity.even},
                           {"odd", r.t_parity.odd},
                           {"same_parity", r.t_parity.same_parity()}};
  j["subsets"] = r.subsets;
  return j;
}

Json coloring_json(const EdgeColoring& col) {
  Json j = Json::object();
  for (size_t e = 0; e < col.size(); ++e) j[std::to_string(e)] = color_name(col[e]);
  return j;
}

Json packing_json(const TJoinPacking& p) {
  Json joins = Json::object();
  for (size_t i = 0; i < p.joins.size(); ++i) joins[std::string(color_name(color_at(static_cast<int>(i))))] = p.joins[i];
  return Json{{"terminals", p.terminals}, {"joins", joins}};
}

Json analysis_json(const PlaneMultigraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["faces"] = g.face_count();
  j["euler"] = g.vertex_count() - g.edge_count() + g.face_count();
  Json faces = Json::array();
  for (const Face& f : g.faces()) faces.push_back(Json{{"id", f.id}, {"degree", f.degree()}, {"darts", f.boundary}});
  j["face_list"] = faces;

  const auto ms = find_multigons(g);
  Json mj = Json::array();
  bool cyclic = false;
  for (const Multigon& m : ms) {
    cyclic = cyclic || m.cyclic;
    mj.push_back(Json{{"id", m.id},         {"u", m.u},          {"v", m.v},
                      {"order", m.order()}, {"edges", m.edges},  {"bigons", m.bigons},
                      {"linear", !m.cyclic}, {"sides", m.cyclic ? Json(nullptr) : Json(m.sides)}});
  }
  j["multigons"] = mj;
  if (cyclic) {
    j["classification"] = nullptr;
    j["note"] = "cyclic multigon: classification skipped";
    return j;
  }
  const FaceClassification cls = classify(g);
  Json cj = Json::array();
  for (FaceId f : cls.charged_faces()) {
    const FaceInfo& fi = cls.faces[f];
    Json across = Json::array();
    for (const auto& p : fi.boundary) across.push_back(item_json(p.across));
    cj.push_back(Json{{"face", f},
                      {"degree", fi.degree},
                      {"bigness", fi.bigness},
                      {"bigons", fi.bigon_count},
                      {"trigons", fi.trigon_count},
                      {"quadragons", fi.quadragon_count},
                      {"multigons", fi.multigon_count},
                      {"single_edges", fi.single_count},
                      {"dangerous", fi.dangerous},
                      {"corners", fi.corners},
                      {"across", across}});
  }
  j["classification"] = cj;
  Json dm = Json::array();
  for (const Multigon& m : cls.multigons)
    if (cls.multigon_dangerous[m.id]) dm.push_back(m.id);
  j["dangerous_multigons"] = dm;
  return j;
}

Json ecoloring_json(const EColoring& ec) {
  Json colors = Json::object();
  for (size_t x = 0; x < ec.colors.size(); ++x)
    if (static_cast<EdgeId>(x) != ec.e) colors[std::to_string(x)] = color_name(ec.colors[x]);
  return Json{{"e", ec.e}, {"e_colors", colors_json(ec.e_colors)}, {"colors", colors}};
}

Json canonical_json(const CanonicalOutcome& out) {
  Json j;
  j["kind"] = out.kind == CanonicalOutcome::Kind::canonical ? "canonical" : "proper-coloring";
  j["unchanged"] = out.unchanged;
  j["moves"] = out.moves;
  j["ecoloring"] = ecoloring_json(out.ecoloring);
  j["proper"] = out.proper ? coloring_json(*out.proper) : Json(nullptr);
  return j;
}

Json mate_json(const Mate& m) {
  Json profile = Json::object();
  for (int i = 0; i < kColorCount; ++i)
    if (m.profile[i] >= 0) profile[std::string(color_name(color_at(i)))] = m.profile[i];
  return Json{{"color", color_name(m.c)}, {"side", m.side},       {"edges", m.edges},
              {"profile", profile},       {"c_edges", m.c_edges}, {"trivial", m.trivial},
              {"five_color_e", m.five_color_e}};
}

Json mate_result_json(const MateResult& r) {
  Json j;
  j["kind"] = r.kind == MateResult::Kind::found           ? "found"
              : r.kind == MateResult::Kind::proper_coloring ? "proper-coloring"
                                                            : "none-found";
  j["mate"] = r.mate ? mate_json(*r.mate) : Json(nullptr);
  Json w = Json::array();
  for (const Mate& m : r.short_witnesses) w.push_back(mate_json(m));
  j["short_witnesses"] = w;
  j["proper"] = r.proper ? coloring_json(*r.proper) : Json(nullptr);
  j["cuts_examined"] = r.cuts_examined;
  return j;
}

SwapSpec parse_swap_spec(const Json& j) {
  try {
    SwapSpec s;
    s.vertices = j.at("vertices").get<std::vector<VertexId>>();
    s.anchor_faces = j.at("anchor_faces").get<std::vector<FaceId>>();
    if (j.contains("removed_edges")) s.removed_edges = j.at("removed_edges").get<std::vector<EdgeId>>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad swap spec: ") + e.what());
  }
}

Json swap_spec_json(const SwapSpec& s) {
  return Json{{"vertices", s.vertices}, {"anchor_faces", s.anchor_faces}, {"removed_edges", s.removed_edges}};
}

Json perturbation_json(const CutPerturbation& p) {
  Json ext = Json::array();
  for (const auto& [side, delta] : p.extremal) ext.push_back(Json{{"side", side}, {"delta", delta}});
  return Json{{"k", p.k},
              {"bound", p.bound},
              {"max_abs_delta", p.max_abs_delta},
              {"subsets", p.subsets},
              {"violations", p.violations},
              {"ok", p.ok()},
              {"extremal", ext}};
}

Json match_json(const ConfigMatch& m) {
  return Json{{"lemma", lemma_id(m.lemma)},
              {"faces", m.faces},
              {"multigons", m.multigons},
              {"vertices", m.vertices},
              {"edges", m.edges},
              {"premise", m.premise_holds},
              {"conclusion", m.conclusion_holds},
              {"violated", m.violated()},
              {"detail", m.detail}};
}

Json catalog_json(const CatalogReport& r) {
  Json matches = Json::array();
  int violated = 0;
  for (const auto& m : r.matches) {
    matches.push_back(match_json(m));
    violated += m.violated();
  }
  return Json{{"matches", matches}, {"violations", violated}, {"skipped", r.skipped}};
}

Json ledger_json(const ChargeLedger& l, bool quarters) {
  Json entries = Json::array();
  for (const auto& [e, c] : l.charge) {
    Json x = item_json(e);
    x["charge"] = charge_value(c, quarters);
    entries.push_back(x);
  }
  return Json{{"unit", quarters ? "quarter" : "unit"},
              {"total", charge_value(l.total(), quarters)},
              {"elements", entries},
              {"high_order_multigons", l.high_order}};
}

Json application_json(const RuleApplication& a, bool quarters) {
  return Json{{"rule", rule_name(a.rule)},
              {"sender", item_json(a.sender)},
              {"receiver", item_json(a.receiver)},
              {"amount", charge_value(a.amount, quarters)},
              {"position", a.position}};
}

Json audit_json(const AuditReport& r, bool quarters) {
  Json j;
  j["verdict"] = r.verdict_text();
  j["degenerate"] = r.degenerate;
  Json hyp = Json::array();
  for (const auto& h : r.hypotheses)
    hyp.push_back(Json{{"name", h.name}, {"status", status_name(h.status)}, {"detail", h.detail}});
  j["hypotheses"] = hyp;
  j["hypotheses_met"] = r.hypotheses_met;
  j["initial_total"] = charge_value(r.initial_total, quarters);
  j["final_total"] = charge_value(r.final_total, quarters);
  j["conserved"] = r.conserved();
  j["initial"] = ledger_json(r.initial, quarters);
  j["final"] = ledger_json(r.final_ledger, quarters);
  Json apps = Json::array();
  for (const auto& a : r.applications) apps.push_back(application_json(a, quarters));
  j["applications"] = apps;
  Json neg = Json::array();
  for (const auto& n : r.negatives) {
    Json x = item_json(n.element);
    x["charge"] = charge_value(n.charge, quarters);
    x["family"] = n.family;
    x["violations"] = n.violations;
    neg.push_back(x);
  }
  j["negative_elements"] = neg;
  Json viol = Json::array();
  for (const auto& m : r.violations) viol.push_back(match_json(m));
  j["violations"] = viol;
  j["catalog_skipped"] = r.catalog.skipped;
  Json sx = Json::array();
  for (const auto& e : r.s_exceptions)
    sx.push_back(Json{{"face", e.face}, {"position", e.position}, {"width", e.width}, {"sum", e.sum}, {"bound", e.bound}});
  j["s_check_exceptions"] = sx;
  j["notes"] = r.notes;
  return j;
}

}  // namespace tjoin
