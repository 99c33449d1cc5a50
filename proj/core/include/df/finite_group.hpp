#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "df/group_presentation.hpp"

namespace df {

/// Finite group given by its multiplication table over elements 0..order-1.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity; throws
  /// InvalidArgument when the table is not a group.
  explicit FiniteGroup(std::vector<std::vector<std::uint32_t>> table);

  /// Even permutations of {0..n-1}, listed lexicographically (identity is 0).
  static FiniteGroup alternating(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup cyclic(int n);

  std::uint32_t order() const { return static_cast<std::uint32_t>(table_.size()); }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

  /// Size of the subgroup generated by `gens`.
  std::uint32_t generated_order(const std::vector<std::uint32_t>& gens) const;

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
};

/// Backtracking search for an assignment of the presentation's generators to
/// group elements that kills every relator and generates the whole group.
/// Generators are assigned in order of the smallest relator support they occur
/// in; values are tried in ascending order, so the witness is the least one in
/// that search order. Returns the images indexed by generator.
std::optional<std::vector<std::uint32_t>> find_epimorphism(const GroupPresentation& p,
                                                           const FiniteGroup& target);

/// Evaluates a word under an assignment of generator images.
std::uint32_t evaluate(const GroupWord& w, const std::vector<std::uint32_t>& images,
                       const FiniteGroup& g);

}  // namespace df
