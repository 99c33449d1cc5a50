#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "df/chain_complex.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// Word in generators and inverses: letter g+1 is generator g, -(g+1) its inverse.
using GroupWord = std::vector<int>;

GroupWord free_reduce(const GroupWord& w);
/// Free reduction followed by cancelling inverse letters at the two ends.
GroupWord cyclically_reduce(const GroupWord& w);
GroupWord inverse(const GroupWord& w);

/// Finite presentation <g_0 .. g_{n-1} | relators>; relators are kept freely reduced.
struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<GroupWord> relators;

  /// Human-readable form using x0, x1, ... with ^-1 for inverses.
  std::string str() const;
  std::size_t total_relator_length() const;
};

/// Edge-path presentation of pi_1(K, basepoint): generators are the edges
/// outside a breadth-first spanning tree of the 1-skeleton (oriented from lower
/// to higher vertex index), relators come from the 2-simplices.
/// Throws InvalidArgument if K is disconnected or the basepoint is unknown.
GroupPresentation pi1_presentation(const SimplicialComplex& k, const std::string& basepoint);

/// Tietze simplification: repeatedly eliminates a generator occurring exactly
/// once in some relator (shortest such relator first), then drops trivial and
/// duplicate relators. The result presents an isomorphic group.
GroupPresentation simplify(const GroupPresentation& p);

/// Abelianization as the cokernel of the exponent-sum matrix.
AbelianGroupDescriptor abelianization(const GroupPresentation& p);

}  // namespace df
