#include <doctest.h>

#include "df/heisenberg.hpp"

using df::Eisenstein;
using df::GammaElement;
using df::HeisenbergElement;

namespace {

HeisenbergElement h(long xa, long xb, long ya, long yb, long za, long zb) {
  return {{xa, xb}, {ya, yb}, {za, zb}};
}

}  // namespace

TEST_CASE("eisenstein arithmetic") {
  const auto w = Eisenstein::omega();
  CHECK(w * w == Eisenstein{-1, -1});
  CHECK(w * w * w == Eisenstein{1, 0});
  CHECK((Eisenstein{1, 0} + w) * w == Eisenstein{-1, 0});
  CHECK(Eisenstein{2, 0} * Eisenstein{3, 1} == Eisenstein{6, 2});
  CHECK(w.norm() == 1);
  CHECK(Eisenstein{2, 1}.norm() == 3);
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      const Eisenstein u{a, b}, v{b - 1, a + 2};
      CHECK((u * v).norm() == u.norm() * v.norm());
      CHECK(u * v == v * u);
      CHECK(u - u == Eisenstein{});
    }
}

TEST_CASE("heisenberg group examples") {
  const auto x = h(1, 0, 0, 0, 0, 0), y = h(0, 0, 1, 0, 0, 0);
  CHECK(hei_commutator(x, y) == h(0, 0, 0, 0, 1, 0));
  CHECK(hei_mul(x, y) == h(1, 0, 1, 0, 1, 0));
  CHECK(hei_mul(y, x) == h(1, 0, 1, 0, 0, 0));
  CHECK(hei_mul(x, hei_inv(x)).is_identity());
  const auto g = h(2, -1, 3, 4, -5, 7);
  CHECK(df::to_matrix(hei_mul(g, x)) == df::mat_mul(df::to_matrix(g), df::to_matrix(x)));
}

TEST_CASE("order three automorphism") {
  const auto g = h(1, 0, 0, 0, 0, 0);
  // (x, y, z) -> (w^2 x, w^2 y, w z)
  CHECK(df::c3_act(1, g) == h(-1, -1, 0, 0, 0, 0));
  CHECK(df::c3_act(3, g) == g);
  CHECK(df::c3_act(-1, g) == df::c3_act(2, g));
  const auto z = h(0, 0, 0, 0, 1, 0);
  CHECK(df::c3_act(1, z) == h(0, 0, 0, 0, 0, 1));
  const auto a = h(1, 2, -3, 1, 0, 5), b = h(-2, 0, 1, 1, 4, -1);
  CHECK(df::c3_act(1, hei_mul(a, b)) == hei_mul(df::c3_act(1, a), df::c3_act(1, b)));
}

TEST_CASE("semidirect product") {
  const auto [p, q] = df::nonabelian_witness();
  CHECK_FALSE(df::gamma_mul(p, q) == df::gamma_mul(q, p));
  const GammaElement r{{}, 1};
  CHECK(df::gamma_mul(df::gamma_mul(r, r), r) == GammaElement{});
  const GammaElement s{h(1, 1, 0, 2, 3, 0), 2};
  CHECK(df::gamma_mul(s, df::gamma_inv(s)) == GammaElement{});
  CHECK(df::gamma_mul(df::gamma_inv(s), s) == GammaElement{});
}

TEST_CASE("selftest passes") {
  const auto report = df::heisenberg_selftest(2000, 99);
  CHECK(report.ok());
  CHECK(report.checks.size() == 9);
  for (const auto& c : report.checks) {
    CHECK(c.trials > 0);
    CHECK(c.failures == 0);
  }
}
