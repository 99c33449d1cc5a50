#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "df/integer_matrix.hpp"
#include "df/sign_vector.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// Word in the Coxeter generators, as generator indices.
using CoxWord = std::vector<std::uint32_t>;

/// Right-angled Coxeter system: involutive generators, and a pair commutes iff
/// it is listed; every other pair generates an infinite dihedral group.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  CoxeterSystem(std::vector<std::string> generators,
                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& commuting_pairs);

  /// Generators are the vertices of K, commuting pairs its edges.
  static CoxeterSystem from_complex(const SimplicialComplex& k);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool commute(std::uint32_t s, std::uint32_t t) const { return s != t && adj_[s][t]; }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> commuting_pairs() const;

  /// Parses whitespace-separated generator labels. Throws ParseError.
  CoxWord parse_word(const std::string& text) const;
  std::string format_word(const CoxWord& w) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> adj_;
};

/// Canonical representative: a reduced word (cancel s..s whenever every
/// letter between commutes with s), then the ShortLex-least word in its
/// commutation class. Two words are equal in W iff their normal forms agree.
CoxWord normal_form(const CoxeterSystem& sys, const CoxWord& w);

/// Image in the geometric (Tits) representation. Generator s acts by
/// a_j -> a_j - 2 B(a_s, a_j) a_s with B(s,s) = 1, B = 0 on commuting pairs
/// and -1 otherwise; the matrix of a word is the product of its letters'.
IntegerMatrix tits_matrix(const CoxeterSystem& sys, const CoxWord& w);

/// Conjugates away letters that can be moved to both ends.
CoxWord cyclic_reduction(const CoxeterSystem& sys, const CoxWord& w);

/// Finite order iff the support of the cyclic reduction is a clique of
/// pairwise commuting generators. Torsion elements have order at most 2.
bool is_torsion(const CoxeterSystem& sys, const CoxWord& w);

/// Abelianization W -> {-1,1}^S: coordinate s is (-1)^(occurrences of s).
SignVector phi(const CoxeterSystem& sys, const CoxWord& w);

bool in_commutator_subgroup(const CoxeterSystem& sys, const CoxWord& w);

CoxWord multiply(const CoxeterSystem& sys, const CoxWord& a, const CoxWord& b);
CoxWord inverse(const CoxeterSystem& sys, const CoxWord& w);

/// Normal forms of length <= radius, in ShortLex order. Throws CapExceeded
/// when the radius exceeds `max_radius` or the ball exceeds `max_elements`.
std::vector<CoxWord> ball(const CoxeterSystem& sys, std::size_t radius, std::size_t max_radius = 24,
                          std::size_t max_elements = 2'000'000);

}  // namespace df
