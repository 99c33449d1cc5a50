#include <doctest.h>

#include <map>
#include <random>

#include "df/chain_complex.hpp"
#include "df/errors.hpp"
#include "df/example32.hpp"
#include "df/io.hpp"
#include "df/smith.hpp"
#include "oracles.hpp"

using df::Int;
using df::IntegerMatrix;
using df::SimplicialComplex;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

bool is_diagonal_chain(const IntegerMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < n && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    if (i + 1 < n && d(i + 1, i + 1) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

// Free rank plus the multiset of prime-power cyclic factors.
using Primary = std::pair<std::size_t, std::multiset<long>>;

void add_cyclic(std::multiset<long>& out, long n) {
  for (long p = 2; n > 1; ++p) {
    long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) out.insert(q);
  }
}

Primary primary(const df::AbelianGroupDescriptor& g) {
  Primary out{g.free_rank, {}};
  for (const auto& t : g.torsion) add_cyclic(out.second, t.get_si());
  return out;
}

long gcd(long a, long b) { return b == 0 ? a : gcd(b, a % b); }

// Kunneth: H_n(C x D) = sum_{p+q=n} H_p x H_q + sum_{p+q=n-1} Tor(H_p, H_q).
std::vector<Primary> kunneth(const std::vector<df::AbelianGroupDescriptor>& hc,
                             const std::vector<df::AbelianGroupDescriptor>& hd) {
  std::vector<Primary> out(hc.size() + hd.size());
  for (std::size_t p = 0; p < hc.size(); ++p)
    for (std::size_t q = 0; q < hd.size(); ++q) {
      const auto a = primary(hc[p]), b = primary(hd[q]);
      auto& tensor = out[p + q];
      tensor.first += a.first * b.first;
      for (long x : a.second) for (std::size_t i = 0; i < b.first; ++i) tensor.second.insert(x);
      for (long y : b.second) for (std::size_t i = 0; i < a.first; ++i) tensor.second.insert(y);
      for (long x : a.second)
        for (long y : b.second) add_cyclic(tensor.second, gcd(x, y));
      auto& tor = out[p + q + 1];
      for (long x : a.second)
        for (long y : b.second) add_cyclic(tor.second, gcd(x, y));
    }
  while (!out.empty() && out.back().first == 0 && out.back().second.empty()) out.pop_back();
  return out;
}

std::vector<Primary> primaries(const std::vector<df::AbelianGroupDescriptor>& h) {
  std::vector<Primary> out;
  for (const auto& g : h) out.push_back(primary(g));
  while (!out.empty() && out.back().first == 0 && out.back().second.empty()) out.pop_back();
  return out;
}

std::vector<std::string> strs(const std::vector<df::AbelianGroupDescriptor>& h) {
  std::vector<std::string> out;
  for (const auto& g : h) out.push_back(g.str());
  return out;
}

SimplicialComplex hexagon() {
  return oracle::complex_of({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const auto id = IntegerMatrix::identity(3);
  const auto s = df::smith_normal_form(id);
  CHECK(s.d == id);
  CHECK(s.u.is_identity());
  CHECK(s.v.is_identity());

  const auto m = IntegerMatrix::from_rows({{2, 4}, {6, 8}});
  const auto t = df::smith_normal_form(m);
  CHECK(t.d == IntegerMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(t.u * m * t.v == t.d);

  const IntegerMatrix zero(2, 3);
  CHECK(df::smith_normal_form(zero).d == zero);
  CHECK(df::smith_diagonal(zero).empty());
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 6);
    const auto s = df::smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_diagonal_chain(s.d));
    CHECK(df::is_unit(df::determinant(s.u)));
    CHECK(df::is_unit(df::determinant(s.v)));
    CHECK(df::smith_diagonal(m) == oracle::determinantal_invariants(oracle::to_dense(m)));
  }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto m = random_matrix(rng, n, n, 20);
    CHECK(df::determinant(m) == oracle::laplace_det(oracle::to_dense(m)));
  }
}

TEST_CASE("sparse invariant factors agree with dense smith form") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9, 3);
    // Sparsify.
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (rng() % 3) m(i, j) = 0;
    const auto f = df::invariant_factors(df::SparseMatrix::from_dense(m));
    const auto diag = df::smith_diagonal(m);
    CHECK(f.rank == diag.size());
    std::vector<Int> torsion;
    for (const auto& d : diag)
      if (d != 1) torsion.push_back(d);
    CHECK(f.torsion == torsion);
    CHECK(f.rank == oracle::rational_rank(oracle::to_dense(m)));
  }
}

TEST_CASE("homology examples") {
  CHECK(strs(df::homology(df::simplicial_chain_complex(hexagon()))) == std::vector<std::string>{"Z", "Z"});
  CHECK(strs(df::homology(df::simplicial_chain_complex(SimplicialComplex::simplex_boundary(3)))) ==
        std::vector<std::string>{"Z", "0", "Z"});
  CHECK(strs(df::homology(df::simplicial_chain_complex(oracle::rp2()))) == std::vector<std::string>{"Z", "Z/2", "0"});
  CHECK(strs(df::homology(df::simplicial_chain_complex(oracle::torus()))) ==
        std::vector<std::string>{"Z", "Z^2", "Z"});
}

TEST_CASE("betti numbers agree with rational ranks; euler-poincare") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const auto k = oracle::random_complex(rng, 3 + rng() % 5, 2 + rng() % 6);
    const auto c = df::simplicial_chain_complex(k);
    const auto h = df::homology(c);
    const auto betti = oracle::betti_numbers(c);
    REQUIRE(h.size() == betti.size());
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < h.size(); ++d) {
      CHECK(h[d].free_rank == betti[d]);
      chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(betti[d]);
    }
    CHECK(chi == df::euler_characteristic(c));
    CHECK(chi == df::euler_characteristic(k));
    for (int d = 2; d <= c.top_degree(); ++d) CHECK((c.boundary(d - 1) * c.boundary(d)).is_zero());
  }
}

TEST_CASE("boundary composition must vanish") {
  df::SparseMatrix d1(1, 1), d2(1, 1);
  d1.add(0, 0, 1);
  d2.add(0, 0, 1);
  CHECK_THROWS_AS(df::ChainComplex({1, 1, 1}, {d1, d2}), df::InvalidArgument);
}

TEST_CASE("tensor product examples") {
  const auto circle = df::simplicial_chain_complex(hexagon());
  const auto point = df::point_chain_complex();
  CHECK(df::homology(df::tensor_product(circle, point)) == df::homology(circle));
  CHECK(strs(df::homology(df::tensor_product(circle, circle))) == std::vector<std::string>{"Z", "Z^2", "Z"});
  const auto disk = df::simplicial_chain_complex(SimplicialComplex::full_simplex(2));
  const auto h = df::homology(df::tensor_product(disk, df::simplicial_chain_complex(oracle::torus())));
  CHECK(strs(h)[0] == "Z");
  CHECK(strs(h)[1] == "Z^2");
}

TEST_CASE("kunneth formula") {
  const std::vector<df::ChainComplex> cs{
      df::simplicial_chain_complex(hexagon()),
      df::simplicial_chain_complex(oracle::rp2()),
      df::simplicial_chain_complex(SimplicialComplex::simplex_boundary(3)),
      df::sphere_chain_complex(0),
      df::disk_chain_complex(3),
      df::ChainComplex({1, 1}, {[] {
                         df::SparseMatrix d(1, 1);
                         d.add(0, 0, 3);
                         return d;
                       }()}),  // Z/3 in degree 0
  };
  for (const auto& a : cs)
    for (const auto& b : cs) {
      const auto t = df::tensor_product(a, b);
      CHECK(primaries(df::homology(t)) == kunneth(df::homology(a), df::homology(b)));
      for (int d = 2; d <= t.top_degree(); ++d) CHECK((t.boundary(d - 1) * t.boundary(d)).is_zero());
    }
}

TEST_CASE("mapping cones") {
  const auto circle = df::simplicial_chain_complex(hexagon());
  CHECK(df::reduced_homology(df::mapping_cone(df::identity_map(circle), circle, circle)) ==
        std::vector<df::AbelianGroupDescriptor>(3));

  const auto pt = oracle::complex_of({{"1"}});
  const auto hex = hexagon();
  const auto incl = df::inclusion_map(pt, hex);
  const auto cone = df::mapping_cone(incl, df::simplicial_chain_complex(pt), circle);
  CHECK(strs(df::homology(cone)) == std::vector<std::string>{"0", "Z"});

  for (int k = 1; k <= 4; ++k) {
    const auto simplex = SimplicialComplex::full_simplex(k);
    const auto boundary = SimplicialComplex::simplex_boundary(k);
    const auto f = df::inclusion_map(boundary, simplex);
    const auto l = df::mapping_cone(f, df::simplicial_chain_complex(boundary), df::simplicial_chain_complex(simplex));
    const auto h = df::reduced_homology(l);
    for (std::size_t d = 0; d < h.size(); ++d) CHECK(h[d].is_infinite_cyclic() == (static_cast<int>(d) == k));
    for (std::size_t d = 0; d < h.size(); ++d)
      if (static_cast<int>(d) != k) CHECK(h[d].is_trivial());
  }

  df::ChainMap bad{{df::SparseMatrix(circle.rank(0), circle.rank(0)), df::SparseMatrix(circle.rank(1), circle.rank(1))}};
  bad.components[1].add(0, 0, 1);
  CHECK_THROWS_AS(df::mapping_cone(bad, circle, circle), df::InvalidArgument);
}

TEST_CASE("double mapping cone of two points into points is a circle") {
  const auto s0 = df::sphere_chain_complex(0);
  const auto pt = df::point_chain_complex();
  df::SparseMatrix collapse(1, 2);
  collapse.add(0, 0, 1);
  collapse.add(0, 1, 1);
  const df::ChainMap f{{collapse}};
  const auto c = df::double_mapping_cone(f, f, s0, pt, pt);
  CHECK(df::is_homology_sphere(c, 1));
}

TEST_CASE("minimal sphere and disk models") {
  for (int k = 0; k <= 5; ++k) CHECK(df::is_homology_sphere(df::sphere_chain_complex(k), k));
  for (int k = 1; k <= 5; ++k) {
    CHECK(df::reduced_homology(df::disk_chain_complex(k)) ==
          std::vector<df::AbelianGroupDescriptor>(static_cast<std::size_t>(k) + 1));
    CHECK(df::is_chain_map(df::sphere_into_disk(k), df::sphere_chain_complex(k - 1), df::disk_chain_complex(k)));
  }
}

TEST_CASE("homology sphere recognition") {
  for (int m = 0; m <= 4; ++m) CHECK(df::is_homology_sphere(SimplicialComplex::simplex_boundary(m + 1), m));
  CHECK_FALSE(df::is_homology_sphere(oracle::torus(), 2));
  CHECK_FALSE(df::is_homology_sphere(SimplicialComplex::simplex_boundary(3), 3));
  const auto m = df::read_complex(std::string(DF_SOURCE_DIR) + "/data/poincare.cplx");
  CHECK(df::is_homology_sphere(m, 3));
  const auto c = df::link_and_star(m, m.labels().front()).star_complement;
  CHECK(df::reduced_homology(df::simplicial_chain_complex(c)) ==
        std::vector<df::AbelianGroupDescriptor>(static_cast<std::size_t>(c.dimension()) + 1));
}

TEST_CASE("pipeline on standard spheres") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m + 2; n <= m + 4; ++n) {
      const auto rep = df::run_pipeline(SimplicialComplex::simplex_boundary(m + 1), m, n, "", false);
      CHECK(rep.ok());
      CHECK(rep.cone_reduced_homology.size() == static_cast<std::size_t>(n));
    }
  CHECK_THROWS_AS(df::run_pipeline(SimplicialComplex::simplex_boundary(3), 2, 3), df::InvalidArgument);
  // A non-sphere fails the first step.
  CHECK_FALSE(df::run_pipeline(oracle::torus(), 2, 5, "", false).ok());
}
