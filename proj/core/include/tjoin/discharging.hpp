#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tjoin/plane_graph.hpp"
#include "tjoin/reductions.hpp"

namespace tjoin {

/// Charges are integers in quarter-units: one unit is 4.
inline constexpr int kQuartersPerUnit = 4;
inline constexpr int kExpectedTotal = -24;

using ElementRef = ItemRef;

struct ChargeLedger {
  std::map<ElementRef, int> charge;
  std::vector<MultigonId> high_order;  // multigons of order >= 5

  int total() const;
  int at(ElementRef e) const;  // throws InputError for an unknown element
  bool operator==(const ChargeLedger&) const = default;
};

enum class Rule { RMb, RMd, RT, RB3, RB5, RB, R3, R3t };
inline constexpr int kRuleCount = 8;

std::string_view rule_name(Rule r);
int rule_amount(Rule r);

struct RuleApplication {
  Rule rule = Rule::RB;
  ElementRef sender{ItemKind::face, -1};  // always a face
  ElementRef receiver{ItemKind::face, -1};
  int amount = 0;
  int position = 0;  // boundary position of the sender where the receiver lies across
  bool operator==(const RuleApplication&) const = default;
};

/// d-face: 4(d-3); order-m multigon: -4(m-1). Bigon faces carry nothing.
ChargeLedger initial_charges(const FaceClassification& cls);
ChargeLedger initial_charges(const PlaneMultigraph& g);

/// Every rule evaluated once against the static classification.
std::vector<RuleApplication> rule_applications(const FaceClassification& cls);

ChargeLedger final_charges(const ChargeLedger& initial, const std::vector<RuleApplication>& apps);

/// s[i]: charge face f sends across boundary position i.
std::vector<int> sent_amounts(const FaceClassification& cls, const std::vector<RuleApplication>& apps, FaceId f);

struct SCheckException {
  FaceId face = -1;
  int position = 0;
  int width = 2;  // 2 for s_i + s_i+1, 3 for the three-term sum
  int sum = 0;
  int bound = 0;
};

struct HypothesisCheck {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

std::string_view status_name(HypothesisCheck::Status s);

struct NegativeElement {
  ElementRef element{ItemKind::face, -1};
  int charge = 0;
  std::string family;            // multigon, 3-face, 4-face, 5-face, >=6-face
  std::vector<int> violations;   // indices into AuditReport::violations
};

struct AuditOptions {
  int cut_cap = kDefaultCutCap;
};

struct AuditReport {
  enum class Verdict { consistent, anomaly };

  bool degenerate = false;  // cyclic multigon: no charges, multigon-order only
  ChargeLedger initial;
  ChargeLedger final_ledger;
  int initial_total = 0;
  int final_total = 0;
  std::vector<RuleApplication> applications;
  std::vector<NegativeElement> negatives;
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_met = false;
  CatalogReport catalog;
  std::vector<ConfigMatch> violations;
  std::vector<SCheckException> s_exceptions;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::anomaly;

  bool conserved() const { return initial_total == final_total; }
  std::string_view verdict_text() const;
};

/// Consistent when some catalog conclusion fails or the instance is outside
/// the theorem's hypotheses; anything else is an anomaly.
AuditReport audit(const PlaneMultigraph& g, const AuditOptions& options = {});

std::string element_label(ElementRef e);

}  // namespace tjoin
