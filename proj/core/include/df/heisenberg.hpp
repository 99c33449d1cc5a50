#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "df/integer.hpp"

namespace df {

/// a + b w with w^2 = -1 - w.
struct Eisenstein {
  Int a = 0;
  Int b = 0;

  static Eisenstein omega() { return {0, 1}; }
  Int norm() const { return a * a - a * b + b * b; }
  bool is_zero() const { return a == 0 && b == 0; }
  std::string str() const;

  friend bool operator==(const Eisenstein& u, const Eisenstein& v) { return u.a == v.a && u.b == v.b; }
};

Eisenstein operator+(const Eisenstein& u, const Eisenstein& v);
Eisenstein operator-(const Eisenstein& u, const Eisenstein& v);
Eisenstein operator-(const Eisenstein& u);
Eisenstein eis_mul(const Eisenstein& u, const Eisenstein& v);
inline Eisenstein operator*(const Eisenstein& u, const Eisenstein& v) { return eis_mul(u, v); }

/// Upper unitriangular matrix with x at (0,1), y at (1,2), z at (0,2).
struct HeisenbergElement {
  Eisenstein x, y, z;

  static HeisenbergElement identity() { return {}; }
  bool is_identity() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  std::string str() const;

  friend bool operator==(const HeisenbergElement& g, const HeisenbergElement& h) {
    return g.x == h.x && g.y == h.y && g.z == h.z;
  }
};

HeisenbergElement hei_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement hei_inv(const HeisenbergElement& g);
HeisenbergElement hei_commutator(const HeisenbergElement& g, const HeisenbergElement& h);

/// Conjugation by diag(1, w, w^2), applied k times (k taken mod 3).
HeisenbergElement c3_act(long long k, const HeisenbergElement& g);

struct GammaElement {
  HeisenbergElement h;
  int k = 0;  ///< in {0,1,2}

  std::string str() const;
  friend bool operator==(const GammaElement& a, const GammaElement& b) { return a.h == b.h && a.k == b.k; }
};

GammaElement gamma_mul(const GammaElement& a, const GammaElement& b);
GammaElement gamma_inv(const GammaElement& a);

/// Fixed non-commuting pair inside the Heisenberg part; their commutator is central.
std::pair<GammaElement, GammaElement> nonabelian_witness();

using EisMatrix = std::array<std::array<Eisenstein, 3>, 3>;

EisMatrix to_matrix(const HeisenbergElement& g);
EisMatrix mat_mul(const EisMatrix& p, const EisMatrix& q);

struct SelftestCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SelftestReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<SelftestCheck> checks;
  bool ok() const;
};

/// Randomized property suite against the matrix model. Entries drawn from [-bound, bound].
SelftestReport heisenberg_selftest(std::size_t samples, std::uint64_t seed, long bound = 50);

}  // namespace df
