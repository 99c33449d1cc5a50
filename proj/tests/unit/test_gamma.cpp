#include <doctest.h>

#include <random>

#include "df/coxeter.hpp"
#include "df/davis_complex.hpp"
#include "df/errors.hpp"
#include "df/gamma_action.hpp"
#include "oracles.hpp"

using df::SignVector;
using df::SimplicialComplex;
using df::ThetaMap;

namespace {

// theta by hand: coordinate i of the image is the parity of flipped i-simplices.
std::uint32_t theta_oracle(const SimplicialComplex& k, std::uint64_t f) {
  std::uint32_t out = 0;
  const auto simplices = k.simplices();
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (f >> i & 1U) out ^= 1U << (simplices[i].size() - 1);
  return out;
}

bool is_chain(const std::vector<df::Simplex>& simplices, std::uint64_t mask) {
  std::vector<const df::Simplex*> chosen;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (mask >> i & 1U) chosen.push_back(&simplices[i]);
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b) {
      const auto& x = *chosen[a];
      const auto& y = *chosen[b];
      const auto& small = x.size() <= y.size() ? x : y;
      const auto& big = x.size() <= y.size() ? y : x;
      if (small.size() == big.size() || !std::includes(big.begin(), big.end(), small.begin(), small.end()))
        return false;
    }
  return true;
}

// An element of phi(Gamma) has non-discrete fixed set iff its support is a
// chain of K contained in a longer chain.
bool pseudo_free_oracle(const SimplicialComplex& k) {
  const auto simplices = k.simplices();
  const std::size_t m = simplices.size();
  const std::uint32_t all = (1U << (k.dimension() + 1)) - 1U;
  for (std::uint64_t e = 1; e < (std::uint64_t{1} << m); ++e) {
    const auto t = theta_oracle(k, e);
    if (t != 0 && t != all) continue;
    if (!is_chain(simplices, e)) continue;
    for (std::size_t i = 0; i < m; ++i)
      if (!(e >> i & 1U) && is_chain(simplices, e | (std::uint64_t{1} << i))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("theta examples") {
  const ThetaMap t(SimplicialComplex::full_simplex(1));
  CHECK(t.domain_size() == 3);
  CHECK(t.codomain_size() == 2);
  CHECK(t.surjective());
  CHECK(t.apply(SignVector::parse("-++")).str() == "-+");
  CHECK(t.apply(SignVector::parse("--+")).str() == "++");
  CHECK(t.apply(SignVector::parse("+--")).str() == "--");
  CHECK_THROWS_AS(t.apply(SignVector(2)), df::InvalidArgument);

  const ThetaMap hollow(SimplicialComplex::simplex_boundary(2));
  CHECK(hollow.class_sizes() == std::vector<std::size_t>{3, 3});
  CHECK(hollow.apply(SignVector::all_minus(6)).str() == "--");
}

TEST_CASE("theta is a homomorphism and matches the parity count") {
  std::mt19937_64 rng(2);
  std::vector<SimplicialComplex> ks{SimplicialComplex::full_simplex(1), SimplicialComplex::simplex_boundary(2),
                                    SimplicialComplex::full_simplex(2)};
  for (int i = 0; i < 10; ++i) ks.push_back(oracle::random_complex(rng, 2 + rng() % 3, 1 + rng() % 3, 3));
  for (const auto& k : ks) {
    const ThetaMap t(k);
    const std::size_t m = t.domain_size();
    REQUIRE(m <= 12);
    const std::uint64_t top = std::uint64_t{1} << m;
    for (std::uint64_t f = 0; f < top; ++f) {
      CHECK(t.apply_mask(f) == theta_oracle(k, f));
      CHECK(t.apply(SignVector::from_mask(f, m)).mask() == t.apply_mask(f));
    }
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = rng() % top, g = rng() % top;
      CHECK(t.apply_mask(f ^ g) == (t.apply_mask(f) ^ t.apply_mask(g)));
    }
  }
}

TEST_CASE("image subgroup sizes") {
  CHECK(df::gamma_image_subgroup(ThetaMap(SimplicialComplex::full_simplex(1))).size() == 4);
  CHECK(df::gamma_image_subgroup(ThetaMap(SimplicialComplex::simplex_boundary(2))).size() == 32);
  const auto img = df::gamma_image_subgroup(ThetaMap(SimplicialComplex::full_simplex(2)));
  CHECK(img.size() == std::size_t{1} << (7 - 3 + 1));
  CHECK(img.front().is_identity());
  std::vector<SimplicialComplex> big{SimplicialComplex::full_simplex(4)};
  CHECK_THROWS_AS(df::gamma_image_subgroup(ThetaMap(big[0]), 20), df::CapExceeded);
}

TEST_CASE("gamma membership") {
  std::mt19937_64 rng(6);
  for (const auto& k : {SimplicialComplex::full_simplex(1), SimplicialComplex::simplex_boundary(2),
                        SimplicialComplex::full_simplex(2)}) {
    const ThetaMap t(k);
    const auto sys = df::CoxeterSystem::from_complex(df::barycentric_subdivision(k));
    REQUIRE(sys.rank() == t.domain_size());
    CHECK(df::gamma_member(t, sys, {}));
    for (int trial = 0; trial < 300; ++trial) {
      df::CoxWord u(rng() % 10), v(rng() % 10);
      for (auto& x : u) x = static_cast<std::uint32_t>(rng() % sys.rank());
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % sys.rank());
      const bool mu = df::gamma_member(t, sys, u);
      CHECK(mu == df::gamma_member(t, sys, df::normal_form(sys, u)));
      CHECK(mu == df::gamma_contains(t, df::phi(sys, u)));
      const auto th = theta_oracle(k, df::phi(sys, u).mask());
      CHECK(mu == (th == 0 || th == (1U << t.codomain_size()) - 1U));
      if (mu && df::gamma_member(t, sys, v)) CHECK(df::gamma_member(t, sys, df::multiply(sys, u, v)));
    }
  }
}

TEST_CASE("pseudo-free examples") {
  const auto edge = df::pseudo_free_verdict(SimplicialComplex::full_simplex(1));
  CHECK(edge.ok);
  CHECK(edge.elements_checked == 3);
  CHECK(edge.cell_exhaustive);

  const auto hollow = df::pseudo_free_verdict(SimplicialComplex::simplex_boundary(2));
  CHECK(hollow.ok);
  CHECK(hollow.direct_ok);
  CHECK(hollow.comparison_ok);
  CHECK(hollow.routes_agree);
  CHECK(hollow.elements_checked == 31);
  CHECK(hollow.witnesses.empty());
}

TEST_CASE("pseudo-free verdict agrees with a chain oracle") {
  std::mt19937_64 rng(23);
  std::vector<SimplicialComplex> ks{SimplicialComplex::full_simplex(2), SimplicialComplex::cycle(4),
                                    oracle::complex_of({{"a", "b"}, {"b", "c"}})};
  for (int i = 0; i < 12; ++i) ks.push_back(oracle::random_complex(rng, 2 + rng() % 3, 1 + rng() % 3, 3));
  for (const auto& k : ks) {
    const auto r = df::pseudo_free_verdict(k);
    CHECK(r.direct_ok == pseudo_free_oracle(k));
    CHECK(r.routes_agree);
    CHECK(r.direct_ok == r.comparison_ok);
  }
}

TEST_CASE("a single reflection of bK is not pseudo-free") {
  const auto bk = df::barycentric_subdivision(SimplicialComplex::full_simplex(1));
  const df::DavisComplex p(bk);
  const auto fs = df::fixed_set_mask(p, 1U);
  CHECK_FALSE(fs.is_discrete);
  CHECK(fs.fixed_cells > 0);
}

TEST_CASE("comparison map") {
  const auto k = SimplicialComplex::full_simplex(1);
  const ThetaMap t(k);
  const df::ComparisonMap cmp(t);
  // Corner points go to corner points via the parity rule.
  CHECK(cmp.map_point({-1, 1, -1}) == std::vector<int>{-1, -1});
  CHECK(cmp.map_point({0, 1, 1}) == std::vector<int>{0, 1});

  const auto r = df::comparison_map_check(k);
  const df::DavisComplex p(df::barycentric_subdivision(k));
  CHECK(r.equivariant);
  CHECK(r.injective_on_cubes);
  CHECK(r.exhaustive);
  CHECK(r.pairs_checked == 4 * p.cell_count());

  const auto hollow = df::comparison_map_check(SimplicialComplex::simplex_boundary(2));
  CHECK(hollow.equivariant);
  CHECK(hollow.injective_on_cubes);
}
