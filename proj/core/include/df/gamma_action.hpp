#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "df/coxeter.hpp"
#include "df/davis_complex.hpp"
#include "df/sign_vector.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// theta : {-1,1}^K -> {-1,1}^(n+1), f -> (product of f over the i-simplices)_i,
/// with n = dim K. Coordinates of the domain follow K.simplices() order, which
/// is also the vertex order of the barycentric subdivision bK.
class ThetaMap {
 public:
  explicit ThetaMap(const SimplicialComplex& k);

  const SimplicialComplex& complex() const { return k_; }
  std::size_t domain_size() const { return dims_.size(); }
  std::size_t codomain_size() const { return static_cast<std::size_t>(n_) + 1; }
  int top_dimension() const { return n_; }
  /// Dimension of the simplex behind domain coordinate i.
  int dimension_of(std::size_t i) const { return dims_[i]; }
  /// Number of simplices of each dimension 0..n.
  std::vector<std::size_t> class_sizes() const;
  /// Every dimension class non-empty.
  bool surjective() const;

  /// Throws InvalidArgument on a length mismatch.
  SignVector apply(const SignVector& f) const;
  std::uint32_t apply_mask(std::uint64_t f) const;

 private:
  SimplicialComplex k_;
  std::vector<int> dims_;
  int n_ = 0;
};

inline SignVector theta(const ThetaMap& t, const SignVector& f) { return t.apply(f); }

/// w lies in Gamma = (theta o phi)^{-1} <(-1,...,-1)>. `sys` must be W_{bK},
/// i.e. have one generator per simplex of K.
bool gamma_member(const ThetaMap& t, const CoxeterSystem& sys, const CoxWord& w);
/// Sign vector form of the same test on phi(w).
bool gamma_contains(const ThetaMap& t, const SignVector& f);

/// phi(Gamma) = theta^{-1} <(-1,...,-1)>, listed explicitly (identity first,
/// then ascending masks). Throws CapExceeded when |K| > max_simplices.
std::vector<SignVector> gamma_image_subgroup(const ThetaMap& t, std::size_t max_simplices = 20);

struct PseudoFreeWitness {
  SignVector element;
  std::uint32_t face = 0;  ///< face of bK as a mask over K's simplices
  std::string face_label;
  int locus_dimension = 0;
};

struct PseudoFreeReport {
  bool ok = false;
  bool direct_ok = false;        ///< every fixed locus 0-dimensional via fixed_set on P_bK
  bool comparison_ok = false;    ///< same conclusion pulled back from P_{Delta^n}
  bool routes_agree = false;     ///< per cell, identical fixed-locus dimensions
  std::size_t elements_checked = 0;
  std::uint64_t cells_compared = 0;
  bool cell_exhaustive = false;  ///< false when face representatives were used
  std::vector<PseudoFreeWitness> witnesses;
};

struct PseudoFreeOptions {
  std::size_t max_simplices = 20;
  std::size_t max_generators = DavisComplex::kDefaultMaxGenerators;
  /// Per-cell comparison is done while |phi(Gamma)| * |cells| stays below this.
  std::uint64_t cell_budget = std::uint64_t{1} << 24;
};

/// Checks that phi(Gamma) acts on P_bK with discrete fixed sets, by the direct
/// fixed-set computation and independently by pulling back the fixed sets of
/// theta(e) on P_{Delta^n} through the comparison map.
PseudoFreeReport pseudo_free_verdict(const SimplicialComplex& k, const PseudoFreeOptions& opts = {});

/// The cubical map P_bK -> P_{Delta^K} -> P_{Delta^n}: on points,
/// y_i = product of x_s over simplices s of dimension i.
class ComparisonMap {
 public:
  explicit ComparisonMap(const ThetaMap& theta);

  /// Image cell in P_{Delta^n}; the source must be a cell of P_bK.
  CubicalCell map_cell(const CubicalCell& c) const;
  /// Point of [-1,1]^K with coordinates in {-1,0,1}, mapped coordinatewise.
  std::vector<int> map_point(const std::vector<int>& x) const;

 private:
  const ThetaMap& theta_;
};

struct ComparisonReport {
  bool equivariant = false;
  bool injective_on_cubes = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t cells_checked = 0;
  bool exhaustive = false;
};

/// Verifies map(e.c) = theta(e).map(c) on cell labels and on the corner and
/// centre points of each cube, for e in phi(Gamma), and that each cube maps
/// injectively. Beyond `pair_budget` pairs the cells are strided evenly.
ComparisonReport comparison_map_check(const SimplicialComplex& k, const PseudoFreeOptions& opts = {},
                                      std::uint64_t pair_budget = std::uint64_t{1} << 22);

}  // namespace df
