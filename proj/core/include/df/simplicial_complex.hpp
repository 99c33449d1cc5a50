#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace df {

/// Sorted vertex indices of a non-empty simplex.
using Simplex = std::vector<std::uint32_t>;

/// Abstract simplicial complex over an ordered set of opaque vertex labels.
///
/// Simplices are kept per dimension in lexicographic order, so the position of a
/// simplex inside `simplices_of_dim(d)` is a stable basis index for chain
/// complexes. The empty simplex is implicit and never stored.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `facets`. Every label becomes a vertex even if no facet
  /// mentions it. Throws InvalidArgument on out-of-range indices.
  static SimplicialComplex from_facets(std::vector<std::string> labels,
                                       const std::vector<Simplex>& facets);

  /// Labels are numbered in order of first appearance.
  static SimplicialComplex from_label_facets(
      const std::vector<std::vector<std::string>>& facets);

  /// The full simplex on vertices "0".."n".
  static SimplicialComplex full_simplex(int n);
  /// Boundary of the n-simplex on vertices "0".."n" (a sphere of dimension n-1).
  static SimplicialComplex simplex_boundary(int n);
  /// Cycle graph on k >= 3 vertices "0".."k-1".
  static SimplicialComplex cycle(int k);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t simplex_count() const;

  const std::vector<Simplex>& simplices_of_dim(int d) const;
  /// All simplices ordered by dimension, then lexicographically.
  std::vector<Simplex> simplices() const;
  std::vector<Simplex> facets() const;

  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_in_dim(const Simplex& s) const;

  std::optional<std::uint32_t> find_vertex(const std::string& label) const;
  /// Throws InvalidArgument for unknown labels.
  std::uint32_t vertex_index(const std::string& label) const;

  /// Downward closure of `generators` (indices into this complex), keeping only
  /// the labels actually used, in their original relative order.
  SimplicialComplex subcomplex(const std::vector<Simplex>& generators) const;

  std::string simplex_label(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// True iff every clique of the 1-skeleton spans a simplex, i.e. every minimal
/// non-face has exactly two vertices.
bool is_flag(const SimplicialComplex& k);

/// Complex of strict inclusion chains. Vertex i of the output is the i-th
/// simplex of `k` in `k.simplices()` order, labelled "{a,b,...}".
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

struct LinkAndStar {
  SimplicialComplex link;
  SimplicialComplex closed_star;
  SimplicialComplex star_complement;
};

/// Throws InvalidArgument if `vertex` is not a vertex of `k`.
LinkAndStar link_and_star(const SimplicialComplex& k, const std::string& vertex);

std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Cone on `k` with a new apex vertex appended last.
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);

}  // namespace df
