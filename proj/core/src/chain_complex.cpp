#include "df/chain_complex.hpp"

#include <algorithm>
#include <tuple>

#include "df/errors.hpp"
#include "df/smith.hpp"

namespace df {

namespace {

struct Triplets {
  std::size_t rows;
  std::size_t cols;
  std::vector<std::tuple<std::size_t, std::size_t, Int>> entries;

  void add(std::size_t r, std::size_t c, const Int& v) {
    if (v != 0) entries.emplace_back(r, c, v);
  }

  SparseMatrix build() {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    SparseMatrix m(rows, cols);
    for (auto& [r, c, v] : entries) {
      auto& row = m.row(r);
      if (!row.empty() && row.back().first == c) {
        row.back().second += v;
        if (row.back().second == 0) row.pop_back();
      } else {
        row.emplace_back(c, std::move(v));
      }
    }
    return m;
  }
};

void add_block(Triplets& t, const SparseMatrix& block, std::size_t row_off, std::size_t col_off,
               const Int& scale = 1) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (const auto& [j, v] : block.row(i)) t.add(row_off + i, col_off + j, scale * v);
}

void check_shape(const SparseMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                          std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
}

}  // namespace

std::string AbelianGroupDescriptor::str() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out;
}

AbelianGroupDescriptor cokernel(const SparseMatrix& relations) {
  const auto f = invariant_factors(relations);
  return {relations.rows() - f.rank, f.torsion};
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<SparseMatrix> boundaries)
    : ranks_(std::move(ranks)), d_(std::move(boundaries)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (d_.size() + 1 != ranks_.size())
    throw InvalidArgument("chain complex needs one boundary matrix per positive degree");
  for (std::size_t k = 1; k < ranks_.size(); ++k)
    check_shape(d_[k - 1], ranks_[k - 1], ranks_[k], "boundary");
  for (std::size_t k = 1; k + 1 < ranks_.size(); ++k)
    if (!(d_[k - 1] * d_[k]).is_zero())
      throw InvalidArgument("boundary composite d_" + std::to_string(k) + " d_" +
                            std::to_string(k + 1) + " is nonzero");
}

std::size_t ChainComplex::rank(int d) const {
  if (d < 0 || d > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(d)];
}

SparseMatrix ChainComplex::boundary(int k) const {
  if (k >= 1 && k <= top_degree()) return d_[static_cast<std::size_t>(k - 1)];
  return SparseMatrix(rank(k - 1), rank(k));
}

SparseMatrix ChainMap::component(int d, std::size_t source_rank, std::size_t target_rank) const {
  if (d >= 0 && static_cast<std::size_t>(d) < components.size()) {
    const auto& m = components[static_cast<std::size_t>(d)];
    if (m.rows() == target_rank && m.cols() == source_rank) return m;
    if (!(m.rows() == 0 && m.cols() == 0))
      check_shape(m, target_rank, source_rank, "chain map component");
  }
  return SparseMatrix(target_rank, source_rank);
}

std::int64_t euler_characteristic(const ChainComplex& c) {
  std::int64_t chi = 0;
  for (int d = 0; d <= c.top_degree(); ++d) {
    const auto r = static_cast<std::int64_t>(c.rank(d));
    chi += (d % 2 == 0) ? r : -r;
  }
  return chi;
}

std::vector<AbelianGroupDescriptor> homology(const ChainComplex& c) {
  const int top = c.top_degree();
  std::vector<InvariantFactors> f(static_cast<std::size_t>(top) + 2);
  for (int k = 1; k <= top; ++k) f[static_cast<std::size_t>(k)] = invariant_factors(c.boundary(k));
  std::vector<AbelianGroupDescriptor> h;
  for (int d = 0; d <= top; ++d) {
    const auto& out = f[static_cast<std::size_t>(d)];
    const auto& in = f[static_cast<std::size_t>(d) + 1];
    h.push_back({c.rank(d) - out.rank - in.rank, in.torsion});
  }
  return h;
}

std::vector<AbelianGroupDescriptor> reduced_homology(const ChainComplex& c) {
  auto h = homology(c);
  if (!h.empty() && h[0].free_rank > 0) --h[0].free_rank;
  return h;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& k) {
  const int top = std::max(k.dimension(), 0);
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top; ++d) ranks.push_back(k.simplices_of_dim(d).size());
  std::vector<SparseMatrix> bd;
  for (int d = 1; d <= top; ++d) {
    Triplets t{ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)], {}};
    const auto& cells = k.simplices_of_dim(d);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const auto& s = cells[j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        for (std::size_t x = 0; x < s.size(); ++x)
          if (x != i) face.push_back(s[x]);
        t.add(*k.index_in_dim(face), j, Int(i % 2 == 0 ? 1 : -1));
      }
    }
    bd.push_back(t.build());
  }
  return ChainComplex(std::move(ranks), std::move(bd));
}

ChainMap inclusion_map(const SimplicialComplex& sub, const SimplicialComplex& k) {
  std::vector<std::uint32_t> to_k;
  for (const auto& l : sub.labels()) {
    auto v = k.find_vertex(l);
    if (!v) throw InvalidArgument("inclusion: vertex '" + l + "' missing from target");
    if (!to_k.empty() && *v <= to_k.back())
      throw InvalidArgument("inclusion: vertex order is not preserved");
    to_k.push_back(*v);
  }
  ChainMap f;
  const int top = std::max({sub.dimension(), k.dimension(), 0});
  for (int d = 0; d <= top; ++d) {
    const auto& src = sub.simplices_of_dim(d);
    Triplets t{k.simplices_of_dim(d).size(), src.size(), {}};
    for (std::size_t j = 0; j < src.size(); ++j) {
      Simplex image;
      for (auto v : src[j]) image.push_back(to_k[v]);
      auto idx = k.index_in_dim(image);
      if (!idx) throw InvalidArgument("inclusion: " + sub.simplex_label(src[j]) + " is not a simplex of the target");
      t.add(*idx, j, Int(1));
    }
    f.components.push_back(t.build());
  }
  return f;
}

namespace {

// offsets[n][p] = position of block C_p x D_{n-p} inside (C x D)_n.
struct TensorLayout {
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> ranks;

  TensorLayout(const ChainComplex& c, const ChainComplex& d) {
    const int top = c.top_degree() + d.top_degree();
    for (int n = 0; n <= top; ++n) {
      std::vector<std::size_t> off(static_cast<std::size_t>(c.top_degree()) + 1, 0);
      std::size_t total = 0;
      for (int p = 0; p <= c.top_degree(); ++p) {
        off[static_cast<std::size_t>(p)] = total;
        const int q = n - p;
        if (q >= 0 && q <= d.top_degree()) total += c.rank(p) * d.rank(q);
      }
      offsets.push_back(std::move(off));
      ranks.push_back(total);
    }
  }
  std::size_t at(int n, int p) const {
    return offsets[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)];
  }
};

}  // namespace

ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
  const TensorLayout lay(c, d);
  const int top = c.top_degree() + d.top_degree();
  std::vector<SparseMatrix> dc_t, dd_t;
  for (int p = 0; p <= c.top_degree(); ++p) dc_t.push_back(c.boundary(p).transposed());
  for (int q = 0; q <= d.top_degree(); ++q) dd_t.push_back(d.boundary(q).transposed());

  std::vector<SparseMatrix> bd;
  for (int n = 1; n <= top; ++n) {
    Triplets t{lay.ranks[static_cast<std::size_t>(n - 1)], lay.ranks[static_cast<std::size_t>(n)], {}};
    for (int p = 0; p <= c.top_degree(); ++p) {
      const int q = n - p;
      if (q < 0 || q > d.top_degree()) continue;
      const std::size_t rq = d.rank(q);
      const Int sign = (p % 2 == 0) ? 1 : -1;
      for (std::size_t i = 0; i < c.rank(p); ++i)
        for (std::size_t j = 0; j < rq; ++j) {
          const std::size_t col = lay.at(n, p) + i * rq + j;
          if (p >= 1)
            for (const auto& [r, v] : dc_t[static_cast<std::size_t>(p)].row(i))
              t.add(lay.at(n - 1, p - 1) + r * rq + j, col, v);
          if (q >= 1) {
            const std::size_t rq1 = d.rank(q - 1);
            for (const auto& [s, v] : dd_t[static_cast<std::size_t>(q)].row(j))
              t.add(lay.at(n - 1, p) + i * rq1 + s, col, sign * v);
          }
        }
    }
    bd.push_back(t.build());
  }
  return ChainComplex(lay.ranks, std::move(bd));
}

ChainMap tensor_product(const ChainMap& f, const ChainComplex& c, const ChainComplex& c2,
                        const ChainMap& g, const ChainComplex& d, const ChainComplex& d2) {
  const TensorLayout src(c, d);
  const TensorLayout dst(c2, d2);
  const int top = c.top_degree() + d.top_degree();
  ChainMap out;
  for (int n = 0; n <= top; ++n) {
    const std::size_t target_rank =
        n <= c2.top_degree() + d2.top_degree() ? dst.ranks[static_cast<std::size_t>(n)] : 0;
    Triplets t{target_rank, src.ranks[static_cast<std::size_t>(n)], {}};
    for (int p = 0; p <= c.top_degree(); ++p) {
      const int q = n - p;
      if (q < 0 || q > d.top_degree()) continue;
      if (p > c2.top_degree() || q > d2.top_degree()) continue;
      const auto fp = f.component(p, c.rank(p), c2.rank(p)).transposed();
      const auto gq = g.component(q, d.rank(q), d2.rank(q)).transposed();
      const std::size_t rq = d.rank(q);
      const std::size_t rq2 = d2.rank(q);
      for (std::size_t i = 0; i < c.rank(p); ++i)
        for (std::size_t j = 0; j < rq; ++j)
          for (const auto& [r, x] : fp.row(i))
            for (const auto& [s, y] : gq.row(j))
              t.add(dst.at(n, p) + r * rq2 + s, src.at(n, p) + i * rq + j, x * y);
    }
    out.components.push_back(t.build());
  }
  return out;
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap id;
  for (int d = 0; d <= c.top_degree(); ++d) {
    SparseMatrix m(c.rank(d), c.rank(d));
    for (std::size_t i = 0; i < c.rank(d); ++i) m.row(i).emplace_back(i, Int(1));
    id.components.push_back(std::move(m));
  }
  return id;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  const std::size_t n = std::min(g.components.size(), f.components.size());
  for (std::size_t d = 0; d < n; ++d) out.components.push_back(g.components[d] * f.components[d]);
  return out;
}

ChainMap negate(const ChainMap& f) {
  ChainMap out;
  for (const auto& m : f.components) out.components.push_back(m.negated());
  return out;
}

bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  const int top = std::max(source.top_degree(), target.top_degree());
  for (int d = 0; d <= top; ++d) {
    // Throws on shape mismatch.
    f.component(d, source.rank(d), target.rank(d));
  }
  for (int d = 1; d <= top; ++d) {
    const auto lhs = target.boundary(d) * f.component(d, source.rank(d), target.rank(d));
    const auto rhs = f.component(d - 1, source.rank(d - 1), target.rank(d - 1)) * source.boundary(d);
    if (lhs.to_dense() != rhs.to_dense()) return false;
  }
  return true;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const int top = std::max(a.top_degree(), b.top_degree());
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top; ++d) ranks.push_back(a.rank(d) + b.rank(d));
  std::vector<SparseMatrix> bd;
  for (int d = 1; d <= top; ++d) {
    Triplets t{ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)], {}};
    add_block(t, a.boundary(d), 0, 0);
    add_block(t, b.boundary(d), a.rank(d - 1), a.rank(d));
    bd.push_back(t.build());
  }
  return ChainComplex(std::move(ranks), std::move(bd));
}

ChainMap pair_map(const ChainMap& f, const ChainMap& g, const ChainComplex& z,
                  const ChainComplex& x, const ChainComplex& y) {
  ChainMap out;
  const int top = std::max({z.top_degree(), x.top_degree(), y.top_degree()});
  for (int d = 0; d <= top; ++d) {
    Triplets t{x.rank(d) + y.rank(d), z.rank(d), {}};
    add_block(t, f.component(d, z.rank(d), x.rank(d)), 0, 0);
    add_block(t, g.component(d, z.rank(d), y.rank(d)), x.rank(d), 0);
    out.components.push_back(t.build());
  }
  return out;
}

ChainMap copair_map(const ChainMap& f, const ChainMap& g, const ChainComplex& x,
                    const ChainComplex& y, const ChainComplex& a) {
  ChainMap out;
  const int top = std::max({a.top_degree(), x.top_degree(), y.top_degree()});
  for (int d = 0; d <= top; ++d) {
    Triplets t{a.rank(d), x.rank(d) + y.rank(d), {}};
    add_block(t, f.component(d, x.rank(d), a.rank(d)), 0, 0);
    add_block(t, g.component(d, y.rank(d), a.rank(d)), 0, x.rank(d));
    out.components.push_back(t.build());
  }
  return out;
}

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& c, const ChainComplex& d) {
  if (!is_chain_map(f, c, d)) throw InvalidArgument("mapping cone: map does not commute with boundaries");
  const int top = std::max(c.top_degree() + 1, d.top_degree());
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(c.rank(n - 1) + d.rank(n));
  std::vector<SparseMatrix> bd;
  for (int n = 1; n <= top; ++n) {
    Triplets t{ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)], {}};
    // rows: C_{n-2} + D_{n-1}; cols: C_{n-1} + D_n
    add_block(t, c.boundary(n - 1), 0, 0, Int(-1));
    add_block(t, f.component(n - 1, c.rank(n - 1), d.rank(n - 1)), c.rank(n - 2), 0);
    add_block(t, d.boundary(n), c.rank(n - 2), c.rank(n - 1));
    bd.push_back(t.build());
  }
  return ChainComplex(std::move(ranks), std::move(bd));
}

ChainMap map_from_cone(const ChainMap& h, const ChainMap& phi, const ChainComplex& z,
                       const ChainComplex& w, const ChainComplex& a) {
  const int top = std::max({z.top_degree() + 1, w.top_degree(), a.top_degree()});
  for (int d = 0; d <= std::max(z.top_degree(), w.top_degree()); ++d) {
    const auto comp = phi.component(d, w.rank(d), a.rank(d)) * h.component(d, z.rank(d), w.rank(d));
    if (!comp.is_zero()) throw InvalidArgument("map_from_cone: composite is not zero in degree " + std::to_string(d));
  }
  ChainMap out;
  for (int n = 0; n <= top; ++n) {
    Triplets t{a.rank(n), z.rank(n - 1) + w.rank(n), {}};
    add_block(t, phi.component(n, w.rank(n), a.rank(n)), 0, z.rank(n - 1));
    out.components.push_back(t.build());
  }
  return out;
}

ChainComplex double_mapping_cone(const ChainMap& f, const ChainMap& g, const ChainComplex& z,
                                 const ChainComplex& x, const ChainComplex& y) {
  return mapping_cone(pair_map(f, negate(g), z, x, y), z, direct_sum(x, y));
}

ChainComplex sphere_chain_complex(int k) {
  if (k < 0) throw InvalidArgument("sphere dimension must be non-negative");
  if (k == 0) return ChainComplex({2}, {});
  std::vector<std::size_t> ranks(static_cast<std::size_t>(k) + 1, 0);
  ranks.front() = 1;
  ranks.back() = 1;
  std::vector<SparseMatrix> bd;
  for (int d = 1; d <= k; ++d)
    bd.emplace_back(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)]);
  return ChainComplex(std::move(ranks), std::move(bd));
}

ChainComplex disk_chain_complex(int k) {
  if (k < 1) throw InvalidArgument("disk dimension must be at least 1");
  if (k == 1) {
    SparseMatrix d1(2, 1);
    d1.add(0, 0, Int(-1));
    d1.add(1, 0, Int(1));
    return ChainComplex({2, 1}, {d1});
  }
  std::vector<std::size_t> ranks(static_cast<std::size_t>(k) + 1, 0);
  ranks[0] = 1;
  ranks[static_cast<std::size_t>(k - 1)] = 1;
  ranks[static_cast<std::size_t>(k)] = 1;
  std::vector<SparseMatrix> bd;
  for (int d = 1; d <= k; ++d)
    bd.emplace_back(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)]);
  bd.back().add(0, 0, Int(1));
  return ChainComplex(std::move(ranks), std::move(bd));
}

ChainMap sphere_into_disk(int k) {
  const auto s = sphere_chain_complex(k - 1);
  const auto d = disk_chain_complex(k);
  ChainMap f;
  for (int n = 0; n <= d.top_degree(); ++n) {
    SparseMatrix m(d.rank(n), s.rank(n));
    for (std::size_t i = 0; i < s.rank(n); ++i) m.row(i).emplace_back(i, Int(1));
    f.components.push_back(std::move(m));
  }
  return f;
}

ChainComplex point_chain_complex() { return ChainComplex({1}, {}); }

bool is_homology_sphere(const ChainComplex& c, int m) {
  if (m < 0 || m > c.top_degree()) return false;
  const auto h = homology(c);
  for (int d = 0; d <= c.top_degree(); ++d) {
    const auto& g = h[static_cast<std::size_t>(d)];
    if (m == 0 && d == 0) {
      if (!(g.free_rank == 2 && g.torsion.empty())) return false;
    } else if (d == 0 || d == m) {
      if (!g.is_infinite_cyclic()) return false;
    } else if (!g.is_trivial()) {
      return false;
    }
  }
  return true;
}

bool is_homology_sphere(const SimplicialComplex& k, int m) {
  if (k.dimension() != m) return false;
  return is_homology_sphere(simplicial_chain_complex(k), m);
}

}  // namespace df
