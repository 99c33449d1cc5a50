#pragma once

#include <optional>
#include <string>
#include <vector>

#include "df/chain_complex.hpp"
#include "df/group_presentation.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

struct PipelineStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PipelineReport {
  int m = 0;
  int n = 0;
  std::string removed_vertex;
  std::vector<PipelineStep> steps;
  std::vector<AbelianGroupDescriptor> boundary_homology;  ///< H_* of the chain-level dA
  std::vector<AbelianGroupDescriptor> cone_reduced_homology;  ///< reduced H_* of L
  GroupPresentation pi1;  ///< simplified
  std::optional<std::vector<std::uint32_t>> a5_images;  ///< indices into FiniteGroup::alternating(5)

  bool ok() const;
};

/// From a homology m-sphere M: C = M minus the open star of a vertex, A = C x D^{n-m-1},
/// dA = C x S^{n-m-2} glued to dC x D^{n-m-1} along dC x S^{n-m-2}, and L the cone of
/// dA -> A, all at chain level. Also searches for a surjection pi_1(M) -> A_5.
/// Requires n - m >= 2. An empty `vertex` picks the first vertex of M.
PipelineReport run_pipeline(const SimplicialComplex& m_complex, int m, int n, const std::string& vertex = "",
                            bool search_a5 = true);

}  // namespace df
