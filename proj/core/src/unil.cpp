#include "df/unil.hpp"

#include "df/errors.hpp"

namespace df {

namespace {

long long mod4(long long n) { return ((n % 4) + 4) % 4; }

ChecklistStatus from_verdict(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return ChecklistStatus::checked_pass;
    case Verdict::fail:
      return ChecklistStatus::checked_fail;
    case Verdict::inconclusive:
      return ChecklistStatus::checked_inconclusive;
  }
  return ChecklistStatus::checked_inconclusive;
}

}  // namespace

std::string to_string(UNilKind k) {
  switch (k) {
    case UNilKind::zero:
      return "0";
    case UNilKind::z2_infty:
      return "(Z/2)^inf";
    case UNilKind::z2_plus_z4_infty:
      return "(Z/2)^inf + (Z/4)^inf";
  }
  return "0";
}

int epsilon(long long n) { return n % 2 == 0 ? 1 : -1; }

UNilKind unil_group(long long n) {
  switch (mod4(n)) {
    case 2:
      return UNilKind::z2_plus_z4_infty;
    case 3:
      return UNilKind::z2_infty;
    default:
      return UNilKind::zero;
  }
}

StructureSet structure_set(long long n, long long mid_count, Confidence confidence) {
  if (mid_count < 0) throw InvalidArgument("structure_set: negative (mid) count");
  StructureSet s;
  s.n = n;
  s.summand = unil_group(n);
  s.index_count = static_cast<std::size_t>(mid_count);
  s.confidence = confidence;
  s.singleton = s.summand == UNilKind::zero || mid_count == 0;
  s.outside_hypotheses = n <= 4;
  return s;
}

std::string StructureSet::str() const {
  std::string out;
  if (singleton) {
    out = "singleton";
  } else {
    out = "sum over " + std::to_string(index_count) + " class(es) of " + to_string(summand);
  }
  if (!singleton && confidence == Confidence::ball_lower_bound) out += " (at least; count is a ball lower bound)";
  if (outside_hypotheses) out += " [outside-theorem-hypotheses]";
  return out;
}

std::string to_string(ChecklistStatus s) {
  switch (s) {
    case ChecklistStatus::checked_pass:
      return "checked: pass";
    case ChecklistStatus::checked_fail:
      return "checked: fail";
    case ChecklistStatus::checked_inconclusive:
      return "checked: inconclusive";
    case ChecklistStatus::assumed:
      return "assumed";
    case ChecklistStatus::not_checked:
      return "not checked";
  }
  return "assumed";
}

std::vector<ChecklistItem> hypothesis_checklist(const PropertyReport* bounded) {
  std::vector<ChecklistItem> items{
      {1, "property C_{1 < fin}: involution centralizers are finite", ChecklistStatus::not_checked},
      {2, "property M_{fbc < vc}: unique maximal virtually cyclic overgroup", ChecklistStatus::not_checked},
      {3, "virtually torsion-free with vcd = n > 4", ChecklistStatus::assumed},
      {4, "a model X with X_free/G of finite homotopy type", ChecklistStatus::assumed},
      {5, "Farrell-Jones conjecture in lower K-theory and L-theory", ChecklistStatus::assumed},
  };
  if (bounded) {
    items[0].status = from_verdict(bounded->centralizers);
    items[1].status = from_verdict(bounded->unique_maximal);
  }
  return items;
}

}  // namespace df
