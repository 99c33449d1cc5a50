#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "df/chain_complex.hpp"
#include "df/sign_vector.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// The cube [-1,1]^free x {signs} inside [-1,1]^S. `free` is a face of K (or
/// empty), `signs` marks the -1 coordinates among S - free (bits inside `free`
/// are always clear).
struct CubicalCell {
  std::uint32_t free = 0;
  std::uint32_t signs = 0;

  int dimension() const;
  friend bool operator==(const CubicalCell&, const CubicalCell&) = default;
  friend auto operator<=>(const CubicalCell&, const CubicalCell&) = default;
};

/// Cell poset of P_K = union over faces t of K (including the empty face) of
/// [-1,1]^t x {-1,1}^(S - t). Cells are addressed arithmetically; nothing
/// per-cell is stored, so large complexes can be queried without materializing.
class DavisComplex {
 public:
  static constexpr std::size_t kDefaultMaxGenerators = 16;
  static constexpr std::size_t kHardMaxGenerators = 30;

  /// Throws CapExceeded when |S| > max_generators, quoting the required budget.
  explicit DavisComplex(SimplicialComplex k, std::size_t max_generators = kDefaultMaxGenerators);

  const SimplicialComplex& base() const { return k_; }
  std::size_t generator_count() const { return n_; }
  std::uint32_t full_mask() const { return n_ == 32 ? ~0U : ((1U << n_) - 1U); }

  /// Faces of K plus the empty face, as bit masks, ordered by size then value.
  const std::vector<std::uint32_t>& faces() const { return faces_; }
  bool has_face(std::uint32_t mask) const;

  int dimension() const;
  std::uint64_t cell_count() const { return total_; }
  std::uint64_t cell_count(int dim) const;
  /// Alternating sum of the per-dimension counts.
  std::int64_t euler_characteristic() const;

  bool contains(const CubicalCell& c) const;
  /// Position of `c` among cells of its dimension (the chain basis index).
  std::uint64_t index_in_dim(const CubicalCell& c) const;
  CubicalCell cell_in_dim(int dim, std::uint64_t index) const;
  std::vector<CubicalCell> cells_of_dim(int dim) const;

  /// Codimension-one faces with incidence signs: dropping the free coordinate
  /// of rank r within `free` contributes (-1)^r at the +1 end and -(-1)^r at
  /// the -1 end.
  std::vector<std::pair<CubicalCell, int>> boundary(const CubicalCell& c) const;
  std::vector<CubicalCell> cofaces(const CubicalCell& c) const;

  CubicalCell vertex(const SignVector& v) const;
  std::uint32_t mask_of(const SignVector& e) const;

 private:
  SimplicialComplex k_;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> faces_;
  std::vector<std::vector<std::uint32_t>> faces_by_dim_;
  std::vector<std::vector<std::uint64_t>> offsets_;  // per dim, per face: first index
  std::vector<std::uint64_t> dim_counts_;
  std::uint64_t total_ = 0;
};

/// Cubical cellular chains of P_K.
ChainComplex davis_chain_complex(const DavisComplex& p, std::uint64_t max_cells = 4'000'000);

struct VertexLink {
  SimplicialComplex link;  ///< on the generator labels S
  bool matches_base = false;
};

/// Link of a vertex of P_K, computed by walking up the coface relation from the
/// vertex cell. Throws InvalidArgument for a cell of positive dimension or a
/// sign vector of the wrong length.
VertexLink vertex_link(const DavisComplex& p, const CubicalCell& vertex);
VertexLink vertex_link(const DavisComplex& p, const SignVector& vertex);

/// The reflection action of {-1,1}^S: (t, g) -> (t, e * g restricted to S - t).
CubicalCell act(const DavisComplex& p, const SignVector& e, const CubicalCell& c);
CubicalCell act_mask(std::uint32_t e, const CubicalCell& c);

struct FixedFace {
  std::uint32_t free = 0;           ///< the face t; all 2^(|S|-|t|) cells over it
  int locus_dimension = 0;          ///< |t| - |supp e|
  std::uint64_t cell_count = 0;
};

struct FixedSetReport {
  std::vector<FixedFace> faces;
  std::uint64_t fixed_cells = 0;
  bool is_discrete = true;
};

/// Cells fixed setwise by e are those with supp(e) inside t; e fixes the middle
/// slice of such a cube pointwise. Discrete iff every such t equals supp(e).
FixedSetReport fixed_set(const DavisComplex& p, const SignVector& e);
FixedSetReport fixed_set_mask(const DavisComplex& p, std::uint32_t e);

std::string format_cell(const DavisComplex& p, const CubicalCell& c);

}  // namespace df
