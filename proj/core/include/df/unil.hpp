#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "df/dihedral_census.hpp"

namespace df {

/// Isomorphism type of UNil_{n+eps}(Z; Z, Z), kept symbolic.
enum class UNilKind { zero, z2_infty, z2_plus_z4_infty };

std::string to_string(UNilKind k);

/// (-1)^n.
int epsilon(long long n);
UNilKind unil_group(long long n);

struct StructureSet {
  long long n = 0;
  UNilKind summand = UNilKind::zero;
  std::size_t index_count = 0;
  Confidence confidence = Confidence::exact;
  bool singleton = true;
  bool outside_hypotheses = false;  ///< n <= 4
  std::string str() const;
};

/// Throws InvalidArgument on a negative count.
StructureSet structure_set(long long n, long long mid_count, Confidence confidence = Confidence::exact);

enum class ChecklistStatus { checked_pass, checked_fail, checked_inconclusive, assumed, not_checked };

std::string to_string(ChecklistStatus s);

struct ChecklistItem {
  int number = 0;
  std::string statement;
  ChecklistStatus status = ChecklistStatus::assumed;
};

/// Items 1 and 2 from bounded property checks when a report is given; 3 to 5 are assumed.
std::vector<ChecklistItem> hypothesis_checklist(const PropertyReport* bounded = nullptr);

}  // namespace df
