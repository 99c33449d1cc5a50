#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "df/integer_matrix.hpp"
#include "df/simplicial_complex.hpp"

namespace df {

/// Finitely generated abelian group Z^free_rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroupDescriptor {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_infinite_cyclic() const { return free_rank == 1 && torsion.empty(); }
  /// e.g. "0", "Z", "Z^2 + Z/2 + Z/4".
  std::string str() const;

  friend bool operator==(const AbelianGroupDescriptor&, const AbelianGroupDescriptor&) = default;
};

/// Group with the given presentation matrix (columns are relations).
AbelianGroupDescriptor cokernel(const SparseMatrix& relations);

/// Free chain complex C_0 <- C_1 <- ... <- C_top of finite rank, boundary
/// matrices stored sparsely with rows indexing C_{d-1} and columns C_d.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// `boundaries[k]` is the map C_{k+1} -> C_k. Validates shapes and d*d == 0.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries);

  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int d) const;
  /// d_k : C_k -> C_{k-1}; the zero matrix of the right shape outside [1, top].
  SparseMatrix boundary(int k) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> d_;  // d_[k-1] is d_k
};

/// Degree-preserving chain map; components[d] has shape rank_D(d) x rank_C(d).
struct ChainMap {
  std::vector<SparseMatrix> components;

  SparseMatrix component(int d, std::size_t source_rank, std::size_t target_rank) const;
};

std::int64_t euler_characteristic(const ChainComplex& c);

/// H_d for d = 0..top via invariant factors of the boundary matrices.
std::vector<AbelianGroupDescriptor> homology(const ChainComplex& c);
/// As homology(), with one copy of Z removed from H_0 when present.
std::vector<AbelianGroupDescriptor> reduced_homology(const ChainComplex& c);

/// Oriented simplicial chains; a simplex is oriented by its vertex order, so the
/// basis of C_d is `k.simplices_of_dim(d)` in order.
ChainComplex simplicial_chain_complex(const SimplicialComplex& k);

/// Chain map induced by the inclusion of `sub` into `k`, matching vertices by
/// label. Throws InvalidArgument when `sub` is not a subcomplex or when the
/// vertex orders disagree (the inclusion would not preserve orientation).
ChainMap inclusion_map(const SimplicialComplex& sub, const SimplicialComplex& k);

/// (C x D)_n = sum_{p+q=n} C_p x D_q with d(a x b) = da x b + (-1)^p a x db.
ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d);
/// f x g : C x D -> C' x D'.
ChainMap tensor_product(const ChainMap& f, const ChainComplex& c, const ChainComplex& c2,
                        const ChainMap& g, const ChainComplex& d, const ChainComplex& d2);

ChainMap identity_map(const ChainComplex& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap negate(const ChainMap& f);

bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/// z -> (f z, g z) : Z -> X + Y.
ChainMap pair_map(const ChainMap& f, const ChainMap& g, const ChainComplex& z,
                  const ChainComplex& x, const ChainComplex& y);
/// (x, y) -> f x + g y : X + Y -> A.
ChainMap copair_map(const ChainMap& f, const ChainMap& g, const ChainComplex& x,
                    const ChainComplex& y, const ChainComplex& a);

/// cone(f)_n = C_{n-1} + D_n, d(c, x) = (-dc, f c + dx).
/// Throws InvalidArgument if `f` does not commute with the boundaries.
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& c, const ChainComplex& d);

/// Map cone(h) -> A that is zero on the shifted source and `phi` on W, for
/// h : Z -> W and phi : W -> A with phi h == 0 (checked).
ChainMap map_from_cone(const ChainMap& h, const ChainMap& phi, const ChainComplex& z,
                       const ChainComplex& w, const ChainComplex& a);

/// Chain model of the homotopy pushout X u_Z Y: the cone of z -> (f z, -g z).
ChainComplex double_mapping_cone(const ChainMap& f, const ChainMap& g, const ChainComplex& z,
                                 const ChainComplex& x, const ChainComplex& y);

/// Minimal cellular chains of S^k (k >= 0): one 0-cell and one k-cell.
ChainComplex sphere_chain_complex(int k);
/// Minimal cellular chains of D^k (k >= 1): cells in degrees 0, k-1, k, with
/// the top cell bounding the (k-1)-sphere. D^1 is the interval.
ChainComplex disk_chain_complex(int k);
/// Boundary inclusion S^{k-1} -> D^k for the models above.
ChainMap sphere_into_disk(int k);
/// The complex Z concentrated in degree 0.
ChainComplex point_chain_complex();

/// H_0 = Z, H_m = Z and all other H_d = 0 (for m = 0: H_0 = Z^2).
bool is_homology_sphere(const ChainComplex& c, int m);
bool is_homology_sphere(const SimplicialComplex& k, int m);

}  // namespace df
