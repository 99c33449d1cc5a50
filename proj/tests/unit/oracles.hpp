#pragma once

// Independent reference computations used to check the library. Everything
// here is deliberately naive: rational elimination, cofactor expansion, brute
// force enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "df/chain_complex.hpp"
#include "df/integer_matrix.hpp"
#include "df/simplicial_complex.hpp"

namespace oracle {

using Int = mpz_class;
using Dense = std::vector<std::vector<Int>>;

inline Dense to_dense(const df::IntegerMatrix& m) {
  Dense d(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline Dense to_dense(const df::SparseMatrix& m) { return to_dense(m.to_dense()); }

/// Rank over Q by fraction Gaussian elimination.
inline std::size_t rational_rank(const Dense& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<mpq_class>> a(m.size(), std::vector<mpq_class>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = m[i][j];
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Cofactor expansion; fine up to 6x6.
inline Int laplace_det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Int term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k the
/// gcd of all k x k minors. Small matrices only.
inline std::vector<Int> determinantal_invariants(const Dense& m) {
  std::vector<Int> out;
  if (m.empty() || m[0].empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    subsets(rows, k, [&](const std::vector<std::size_t>& r) {
      subsets(cols, k, [&](const std::vector<std::size_t>& c) {
        Dense minor(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(laplace_det(minor)).get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Betti numbers by rational ranks of the boundary maps.
inline std::vector<std::size_t> betti_numbers(const df::ChainComplex& c) {
  std::vector<std::size_t> ranks_d(static_cast<std::size_t>(c.top_degree()) + 2, 0);
  for (int k = 1; k <= c.top_degree(); ++k) ranks_d[static_cast<std::size_t>(k)] = rational_rank(to_dense(c.boundary(k)));
  std::vector<std::size_t> out;
  for (int d = 0; d <= c.top_degree(); ++d)
    out.push_back(c.rank(d) - ranks_d[static_cast<std::size_t>(d)] - ranks_d[static_cast<std::size_t>(d) + 1]);
  return out;
}

inline df::SimplicialComplex complex_of(const std::vector<std::vector<std::string>>& facets) {
  return df::SimplicialComplex::from_label_facets(facets);
}

/// Every simplicial complex on vertices 0..k-1 that uses all k vertices,
/// as lists of facets over labels "0".."k-1".
inline std::vector<df::SimplicialComplex> all_complexes(std::size_t k) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1U << k); ++m)
    if (__builtin_popcount(m) >= 2) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  std::vector<df::SimplicialComplex> out;
  std::set<std::uint32_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == masks.size()) {
      std::vector<df::Simplex> facets;
      for (std::uint32_t v = 0; v < k; ++v) facets.push_back({v});
      for (auto m : chosen) {
        df::Simplex s;
        for (std::uint32_t v = 0; v < k; ++v)
          if (m >> v & 1U) s.push_back(v);
        facets.push_back(s);
      }
      out.push_back(df::SimplicialComplex::from_facets(labels, facets));
      return;
    }
    rec(i + 1);
    const auto m = masks[i];
    bool closed = true;
    for (std::uint32_t v = 0; v < k && closed; ++v)
      if ((m >> v & 1U) && __builtin_popcount(m) > 2 && !chosen.count(m & ~(1U << v))) closed = false;
    if (closed) {
      chosen.insert(m);
      rec(i + 1);
      chosen.erase(m);
    }
  };
  rec(0);
  return out;
}

/// Random complex on `vertices` labelled vertices from up to `facets` random subsets.
inline df::SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t vertices, std::size_t facets,
                                            std::size_t max_size = 4) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<df::Simplex> fs;
  for (std::uint32_t v = 0; v < vertices; ++v) fs.push_back({v});
  for (std::size_t i = 0; i < facets; ++i) {
    df::Simplex s;
    for (std::uint32_t v = 0; v < vertices; ++v)
      if (rng() % 2) s.push_back(v);
    if (s.size() > max_size) s.resize(max_size);
    if (!s.empty()) fs.push_back(s);
  }
  return df::SimplicialComplex::from_facets(labels, fs);
}

/// Six-vertex real projective plane.
inline df::SimplicialComplex rp2() {
  return complex_of({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                     {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"}, {"2", "4", "6"}, {"3", "5", "6"}});
}

/// Seven-vertex torus.
inline df::SimplicialComplex torus() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({std::to_string(i), std::to_string((i + 1) % 7), std::to_string((i + 3) % 7)});
    facets.push_back({std::to_string(i), std::to_string((i + 2) % 7), std::to_string((i + 3) % 7)});
  }
  return complex_of(facets);
}

}  // namespace oracle
