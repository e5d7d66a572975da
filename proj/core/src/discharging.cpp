#include "tjoin/discharging.hpp"

#include <algorithm>
#include <set>

#include "tjoin/errors.hpp"

namespace tjoin {

int ChargeLedger::total() const {
  int t = 0;
  for (const auto& [e, c] : charge) t += c;
  return t;
}

int ChargeLedger::at(ElementRef e) const {
  auto it = charge.find(e);
  if (it == charge.end()) throw InputError("unknown element " + element_label(e));
  return it->second;
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::RMb: return "RMb";
    case Rule::RMd: return "RMd";
    case Rule::RT: return "RT";
    case Rule::RB3: return "RB3";
    case Rule::RB5: return "RB5";
    case Rule::RB: return "RB";
    case Rule::R3: return "R3";
    case Rule::R3t: return "R3t";
  }
  return "?";
}

int rule_amount(Rule r) {
  switch (r) {
    case Rule::RMb: return 6;
    case Rule::RMd: return 2;
    case Rule::RT: return 4;
    case Rule::RB3: return 4;
    case Rule::RB5: return 4;
    case Rule::RB: return 2;
    case Rule::R3: return 1;
    case Rule::R3t: return 2;
  }
  return 0;
}

std::string element_label(ElementRef e) {
  return (e.kind == ItemKind::face ? "face " : "multigon ") + std::to_string(e.id);
}

std::string_view status_name(HypothesisCheck::Status s) {
  switch (s) {
    case HypothesisCheck::Status::pass: return "pass";
    case HypothesisCheck::Status::fail: return "fail";
    case HypothesisCheck::Status::skipped: return "skipped";
  }
  return "?";
}

std::string_view AuditReport::verdict_text() const {
  return verdict == Verdict::consistent ? "consistent" : "ANOMALY";
}

ChargeLedger initial_charges(const FaceClassification& cls) {
  ChargeLedger l;
  for (FaceId f : cls.charged_faces()) l.charge[{ItemKind::face, f}] = 4 * (cls.faces[f].degree - 3);
  for (const Multigon& m : cls.multigons) {
    l.charge[{ItemKind::multigon, m.id}] = -4 * (m.order() - 1);
    if (m.order() >= 5) l.high_order.push_back(m.id);
  }
  return l;
}

ChargeLedger initial_charges(const PlaneMultigraph& g) { return initial_charges(classify(g)); }

namespace {

struct Context {
  const FaceClassification& c;

  int big(FaceId f) const { return c.faces[f].bigness; }
  bool dangerous_face(FaceId f) const { return c.faces[f].dangerous; }

  // distinct faces on the two sides of a multigon, in side order
  std::vector<FaceId> sides(const Multigon& m) const {
    std::vector<FaceId> out{m.sides[0]};
    if (m.sides[1] != m.sides[0]) out.push_back(m.sides[1]);
    return out;
  }

  int first_position(FaceId f, ItemRef item) const {
    auto ps = c.positions_of(f, item);
    return ps.empty() ? -1 : ps.front();
  }
};

}  // namespace

std::vector<RuleApplication> rule_applications(const FaceClassification& cls) {
  Context ctx{cls};
  std::vector<RuleApplication> apps;
  auto add = [&](Rule r, FaceId sender, ItemRef receiver, int position) {
    apps.push_back({r, {ItemKind::face, sender}, receiver, rule_amount(r), position});
  };

  for (const Multigon& m : cls.multigons) {
    const ItemRef t{ItemKind::multigon, m.id};
    bool mb_or_md = false;
    if (cls.multigon_dangerous[m.id]) {
      for (FaceId f : ctx.sides(m)) {
        if (ctx.big(f) >= 4) {
          add(Rule::RMb, f, t, ctx.first_position(f, t));
          mb_or_md = true;
        } else if (ctx.dangerous_face(f)) {
          add(Rule::RMd, f, t, ctx.first_position(f, t));
          mb_or_md = true;
        }
      }
    }
    if (m.order() == 3 && !mb_or_md) {
      for (FaceId f : ctx.sides(m))
        for (int p : cls.positions_of(f, t)) add(Rule::RT, f, t, p);
    }
    if (m.order() == 2) {
      bool special = false;
      for (FaceId f : ctx.sides(m)) {
        const FaceId other = m.sides[0] == f ? m.sides[1] : m.sides[0];
        const bool rb3 = cls.faces[other].degree == 3 && ctx.big(f) >= 3;
        const bool rb5 = ctx.big(f) >= 4 && cls.faces[other].degree == 5 && cls.faces[other].multigon_count == 5;
        if (rb3 || rb5) {
          add(rb3 ? Rule::RB3 : Rule::RB5, f, t, ctx.first_position(f, t));
          special = true;
        }
      }
      if (!special)
        for (FaceId f : ctx.sides(m))
          for (int p : cls.positions_of(f, t)) add(Rule::RB, f, t, p);
    }
  }

  for (FaceId f : cls.charged_faces()) {
    const FaceInfo& fi = cls.faces[f];
    if (fi.degree != 3) continue;
    const ItemRef target{ItemKind::face, f};
    int big3 = 0;
    for (const auto& p : fi.boundary)
      if (p.across.kind == ItemKind::face && ctx.big(p.across.id) >= 3) ++big3;
    std::set<FaceId> sent;
    if (fi.bigon_count >= 1 && big3 >= 2) {
      for (const auto& p : fi.boundary)
        if (p.across.kind == ItemKind::face && ctx.big(p.across.id) >= 3 && sent.insert(p.across.id).second)
          add(Rule::R3, p.across.id, target, ctx.first_position(p.across.id, target));
    }
    sent.clear();
    if (fi.trigon_count >= 1) {
      for (const auto& p : fi.boundary)
        if (p.across.kind == ItemKind::face && ctx.big(p.across.id) >= 5 && sent.insert(p.across.id).second)
          add(Rule::R3t, p.across.id, target, ctx.first_position(p.across.id, target));
    }
  }
  return apps;
}

ChargeLedger final_charges(const ChargeLedger& initial, const std::vector<RuleApplication>& apps) {
  ChargeLedger out = initial;
  for (const RuleApplication& a : apps) {
    auto s = out.charge.find(a.sender);
    auto r = out.charge.find(a.receiver);
    if (s == out.charge.end() || r == out.charge.end())
      throw InputError("application references an unknown element");
    s->second -= a.amount;
    r->second += a.amount;
  }
  return out;
}

std::vector<int> sent_amounts(const FaceClassification& cls, const std::vector<RuleApplication>& apps, FaceId f) {
  std::vector<int> s(cls.faces[f].degree, 0);
  for (const RuleApplication& a : apps)
    if (a.sender.kind == ItemKind::face && a.sender.id == f && a.position >= 0) s[a.position] += a.amount;
  return s;
}

namespace {

std::string family_of(const FaceClassification& cls, ElementRef e) {
  if (e.kind == ItemKind::multigon) return "multigon";
  const int d = cls.faces[e.id].degree;
  if (d <= 5) return std::to_string(d) + "-face";
  return ">=6-face";
}

std::set<VertexId> vertices_of(const FaceClassification& cls, ElementRef e) {
  if (e.kind == ItemKind::multigon) return {cls.multigons[e.id].u, cls.multigons[e.id].v};
  const auto& cs = cls.faces[e.id].corners;
  return {cs.begin(), cs.end()};
}

std::set<ElementRef> neighbourhood(const FaceClassification& cls, ElementRef e) {
  std::set<ElementRef> out{e};
  if (e.kind == ItemKind::multigon) {
    for (FaceId f : cls.multigons[e.id].sides) out.insert({ItemKind::face, f});
  } else {
    for (const auto& p : cls.faces[e.id].boundary) out.insert(p.across);
  }
  return out;
}

bool near(const FaceClassification& cls, const ConfigMatch& m, ElementRef e) {
  const auto hood = neighbourhood(cls, e);
  for (FaceId f : m.faces)
    if (hood.count({ItemKind::face, f})) return true;
  for (MultigonId t : m.multigons)
    if (hood.count({ItemKind::multigon, t})) return true;
  if (m.faces.empty()) {
    const auto vs = vertices_of(cls, e);
    for (VertexId v : m.vertices)
      if (vs.count(v)) return true;
  }
  return false;
}

}  // namespace

AuditReport audit(const PlaneMultigraph& g, const AuditOptions& options) {
  AuditReport rep;

  const bool regular = g.is_regular(6);
  rep.hypotheses.push_back({"6-regular", regular ? HypothesisCheck::Status::pass : HypothesisCheck::Status::fail,
                            regular ? "" : "some vertex has degree other than 6"});
  bool odd_ok = true;
  if (g.vertex_count() > std::min(options.cut_cap, kMaxCutCap)) {
    const std::string why = std::to_string(g.vertex_count()) + " vertices above cut cap " +
                            std::to_string(options.cut_cap);
    rep.hypotheses.push_back({"min odd cut >= 6", HypothesisCheck::Status::skipped, why});
    rep.hypotheses.push_back({"min non-trivial odd cut >= 8", HypothesisCheck::Status::skipped, why});
  } else {
    OddCutReport cuts = min_odd_cut(g, options.cut_cap);
    odd_ok = cuts.min_odd.size >= 6;
    rep.hypotheses.push_back({"min odd cut >= 6", odd_ok ? HypothesisCheck::Status::pass : HypothesisCheck::Status::fail,
                              "minimum odd cut " + std::to_string(cuts.min_odd.size)});
    if (cuts.min_nontrivial) {
      const bool ok = cuts.min_nontrivial->size >= 8;
      rep.hypotheses.push_back({"min non-trivial odd cut >= 8",
                                ok ? HypothesisCheck::Status::pass : HypothesisCheck::Status::fail,
                                "minimum non-trivial odd cut " + std::to_string(cuts.min_nontrivial->size)});
    } else {
      rep.hypotheses.push_back({"min non-trivial odd cut >= 8", HypothesisCheck::Status::pass,
                                "no non-trivial odd cut"});
    }
  }
  rep.hypotheses_met = regular && odd_ok;

  const auto multigons = find_multigons(g);
  if (std::any_of(multigons.begin(), multigons.end(), [](const Multigon& m) { return m.cyclic; })) {
    rep.degenerate = true;
    rep.notes.push_back("cyclic multigon: charges and rules skipped");
    rep.catalog.matches = match_multigon_order(multigons);
    for (const auto& m : rep.catalog.matches)
      if (m.violated()) rep.violations.push_back(m);
    rep.initial_total = rep.final_total = 0;
  } else {
    const FaceClassification cls = classify(g);
    rep.initial = initial_charges(cls);
    rep.applications = rule_applications(cls);
    rep.final_ledger = final_charges(rep.initial, rep.applications);
    rep.initial_total = rep.initial.total();
    rep.final_total = rep.final_ledger.total();
    if (!rep.initial.high_order.empty()) rep.notes.push_back("multigon of order 5 or more present");

    rep.catalog = run_catalog(g, cls, CatalogOptions{options.cut_cap});
    for (const auto& m : rep.catalog.matches)
      if (m.violated()) rep.violations.push_back(m);

    for (const auto& [e, c] : rep.final_ledger.charge) {
      if (c >= 0) continue;
      NegativeElement n{e, c, family_of(cls, e)};
      for (size_t i = 0; i < rep.violations.size(); ++i)
        if (near(cls, rep.violations[i], e)) n.violations.push_back(static_cast<int>(i));
      rep.negatives.push_back(std::move(n));
    }

    for (FaceId f : cls.charged_faces()) {
      const FaceInfo& fi = cls.faces[f];
      if (fi.degree < 6) continue;
      const auto s = sent_amounts(cls, rep.applications, f);
      const int n = fi.degree;
      for (int i = 0; i < n; ++i) {
        const int two = s[i] + s[(i + 1) % n];
        if (two > 8) rep.s_exceptions.push_back({f, i, 2, two, 8});
        if (fi.bigness >= 3) {
          const int three = two + s[(i + 2) % n];
          if (three > 14) rep.s_exceptions.push_back({f, i, 3, three, 14});
        }
      }
    }
  }

  rep.verdict = (!rep.violations.empty() || !rep.hypotheses_met) ? AuditReport::Verdict::consistent
                                                                  : AuditReport::Verdict::anomaly;
  return rep;
}

}  // namespace tjoin
