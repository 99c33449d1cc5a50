#include "df/heisenberg.hpp"

#include <functional>
#include <random>

namespace df {

std::string Eisenstein::str() const {
  if (b == 0) return a.get_str();
  std::string out;
  if (a != 0) out = a.get_str() + (b < 0 ? "-" : "+");
  else if (b < 0) out = "-";
  Int mag = abs(b);
  if (mag != 1) out += mag.get_str();
  return out + "w";
}

Eisenstein operator+(const Eisenstein& u, const Eisenstein& v) { return {u.a + v.a, u.b + v.b}; }
Eisenstein operator-(const Eisenstein& u, const Eisenstein& v) { return {u.a - v.a, u.b - v.b}; }
Eisenstein operator-(const Eisenstein& u) { return {-u.a, -u.b}; }

Eisenstein eis_mul(const Eisenstein& u, const Eisenstein& v) {
  const Int bd = u.b * v.b;
  return {u.a * v.a - bd, u.a * v.b + u.b * v.a - bd};
}

std::string HeisenbergElement::str() const { return "(" + x.str() + ", " + y.str() + ", " + z.str() + ")"; }

HeisenbergElement hei_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

HeisenbergElement hei_inv(const HeisenbergElement& g) { return {-g.x, -g.y, g.x * g.y - g.z}; }

HeisenbergElement hei_commutator(const HeisenbergElement& g, const HeisenbergElement& h) {
  return hei_mul(hei_mul(g, h), hei_mul(hei_inv(g), hei_inv(h)));
}

HeisenbergElement c3_act(long long k, const HeisenbergElement& g) {
  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w * w;
  HeisenbergElement out = g;
  for (long long i = 0, n = ((k % 3) + 3) % 3; i < n; ++i) out = {w2 * out.x, w2 * out.y, w * out.z};
  return out;
}

std::string GammaElement::str() const { return "[" + h.str() + ", " + std::to_string(k) + "]"; }

GammaElement gamma_mul(const GammaElement& a, const GammaElement& b) {
  return {hei_mul(a.h, c3_act(a.k, b.h)), (a.k + b.k) % 3};
}

GammaElement gamma_inv(const GammaElement& a) { return {c3_act(-a.k, hei_inv(a.h)), (3 - a.k) % 3}; }

std::pair<GammaElement, GammaElement> nonabelian_witness() {
  return {GammaElement{{{1, 0}, {0, 0}, {0, 0}}, 0}, GammaElement{{{0, 0}, {1, 0}, {0, 0}}, 0}};
}

EisMatrix to_matrix(const HeisenbergElement& g) {
  EisMatrix m{};
  for (int i = 0; i < 3; ++i) m[i][i] = {1, 0};
  m[0][1] = g.x;
  m[1][2] = g.y;
  m[0][2] = g.z;
  return m;
}

EisMatrix mat_mul(const EisMatrix& p, const EisMatrix& q) {
  EisMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + p[i][k] * q[k][j];
  return r;
}

bool SelftestReport::ok() const {
  for (const auto& c : checks)
    if (c.failures) return false;
  return true;
}

SelftestReport heisenberg_selftest(std::size_t samples, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  auto eis = [&] { return Eisenstein{dist(rng), dist(rng)}; };
  auto hei = [&] { return HeisenbergElement{eis(), eis(), eis()}; };
  auto gam = [&] { return GammaElement{hei(), static_cast<int>(rng() % 3)}; };

  const Eisenstein w = Eisenstein::omega();
  const Eisenstein w2 = w * w;
  EisMatrix d{}, d_inv{};
  d[0][0] = d_inv[0][0] = {1, 0};
  d[1][1] = w;
  d[2][2] = w2;
  d_inv[1][1] = w2;
  d_inv[2][2] = w;

  SelftestReport rep;
  rep.samples = samples;
  rep.seed = seed;
  auto run = [&](const std::string& name, const std::function<std::string()>& trial) {
    SelftestCheck c{name, 0, 0, {}};
    for (std::size_t i = 0; i < samples; ++i) {
      ++c.trials;
      std::string fail = trial();
      if (!fail.empty()) {
        if (!c.failures) c.first_failure = fail;
        ++c.failures;
      }
    }
    rep.checks.push_back(std::move(c));
  };

  run("matrix-oracle", [&]() -> std::string {
    auto g = hei(), h = hei();
    return to_matrix(hei_mul(g, h)) == mat_mul(to_matrix(g), to_matrix(h)) ? "" : g.str() + " * " + h.str();
  });
  run("inverse", [&]() -> std::string {
    auto g = hei();
    return hei_mul(g, hei_inv(g)).is_identity() && hei_mul(hei_inv(g), g).is_identity() ? "" : g.str();
  });
  run("gamma-associativity", [&]() -> std::string {
    auto a = gam(), b = gam(), c = gam();
    return gamma_mul(gamma_mul(a, b), c) == gamma_mul(a, gamma_mul(b, c)) ? "" : a.str() + b.str() + c.str();
  });
  run("gamma-inverse", [&]() -> std::string {
    auto a = gam();
    const GammaElement e{};
    return gamma_mul(a, gamma_inv(a)) == e && gamma_mul(gamma_inv(a), a) == e ? "" : a.str();
  });
  run("c3-automorphism", [&]() -> std::string {
    auto g = hei(), h = hei();
    for (int k = 0; k < 3; ++k)
      if (!(c3_act(k, hei_mul(g, h)) == hei_mul(c3_act(k, g), c3_act(k, h)))) return g.str() + " " + h.str();
    return "";
  });
  run("c3-order-3", [&]() -> std::string {
    auto g = hei();
    return c3_act(3, g) == g && !(g.x.is_zero() && g.y.is_zero() && g.z.is_zero()) == !(c3_act(1, g) == g) ? ""
                                                                                                              : g.str();
  });
  run("c3-is-D-conjugation", [&]() -> std::string {
    auto g = hei();
    return to_matrix(c3_act(1, g)) == mat_mul(mat_mul(d, to_matrix(g)), d_inv) ? "" : g.str();
  });
  run("center", [&]() -> std::string {
    auto g = hei();
    const HeisenbergElement central{{}, {}, eis()};
    if (!(hei_mul(central, g) == hei_mul(g, central))) return central.str() + " vs " + g.str();
    // A non-central element fails to commute with one of the two basic generators.
    const HeisenbergElement ex{{1, 0}, {}, {}}, ey{{}, {1, 0}, {}};
    const bool central_g = g.x.is_zero() && g.y.is_zero();
    const bool commutes = hei_mul(g, ex) == hei_mul(ex, g) && hei_mul(g, ey) == hei_mul(ey, g);
    return central_g == commutes ? "" : g.str();
  });
  run("commutator-central", [&]() -> std::string {
    auto g = hei(), h = hei();
    auto c = hei_commutator(g, h);
    return c.x.is_zero() && c.y.is_zero() ? "" : g.str() + " " + h.str();
  });
  return rep;
}

}  // namespace df
