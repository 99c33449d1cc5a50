#include <doctest.h>

#include <map>
#include <random>

#include "df/coxeter.hpp"
#include "df/errors.hpp"

using df::CoxeterSystem;
using df::CoxWord;
using df::IntegerMatrix;

namespace {

CoxeterSystem dinf() { return CoxeterSystem({"a", "b"}, {}); }
CoxeterSystem klein() { return CoxeterSystem({"a", "b"}, {{0, 1}}); }

CoxeterSystem random_system(std::mt19937_64& rng, std::size_t max_gens = 5) {
  const std::size_t n = 1 + rng() % max_gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng() % 2) pairs.emplace_back(i, j);
  return CoxeterSystem(labels, pairs);
}

CoxWord random_word(std::mt19937_64& rng, const CoxeterSystem& sys, std::size_t max_len = 12) {
  CoxWord w(rng() % (max_len + 1));
  for (auto& x : w) x = static_cast<std::uint32_t>(rng() % sys.rank());
  return w;
}

bool shortlex_less(const CoxWord& a, const CoxWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void all_words(std::size_t rank, std::size_t len, const std::function<void(const CoxWord&)>& f) {
  CoxWord w;
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == len) return;
    for (std::uint32_t s = 0; s < rank; ++s) {
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::string key(const IntegerMatrix& m) {
  std::string k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k += m(i, j).get_str() + ",";
  return k;
}

}  // namespace

TEST_CASE("normal form examples") {
  const auto d = dinf();
  CHECK(df::normal_form(d, d.parse_word("a a")).empty());
  CHECK(df::normal_form(klein(), klein().parse_word("b a")) == klein().parse_word("a b"));
  CHECK(df::normal_form(d, d.parse_word("a b a b")) == CoxWord{0, 1, 0, 1});
  CHECK(d.format_word({}) == "e");
  CHECK(d.format_word({0, 1}) == "a b");
  CHECK(d.parse_word("ab") == CoxWord{0, 1});
  CHECK(d.parse_word("e").empty());
}

TEST_CASE("tits matrix examples") {
  const auto d = dinf();
  CHECK(df::tits_matrix(d, {0}) == IntegerMatrix::from_rows({{-1, 2}, {0, 1}}));
  const auto ab = df::tits_matrix(d, {0, 1});
  CHECK(ab == IntegerMatrix::from_rows({{3, -2}, {2, -1}}));
  CHECK(ab(0, 0) + ab(1, 1) == 2);
  CHECK(df::tits_matrix(d, d.parse_word("a b b a")).is_identity());
}

TEST_CASE("torsion examples") {
  CHECK(df::is_torsion(dinf(), {0}));
  CHECK(df::is_torsion(dinf(), {1}));
  CHECK_FALSE(df::is_torsion(dinf(), {0, 1}));
  CHECK(df::is_torsion(klein(), {0, 1}));
  CHECK(df::is_torsion(dinf(), {0, 1, 0}));
  CHECK(df::is_torsion(dinf(), {}));
}

TEST_CASE("phi and commutator subgroup examples") {
  const CoxeterSystem sys({"s", "t", "u"}, {});
  CHECK(df::phi(sys, sys.parse_word("s")).str() == "-++");
  CHECK(df::phi(sys, sys.parse_word("s t s")).str() == "+-+");
  CHECK(df::phi(sys, {}).is_identity());
  CHECK(df::in_commutator_subgroup(dinf(), dinf().parse_word("a b a b")));
  CHECK_FALSE(df::in_commutator_subgroup(dinf(), {0}));
  CHECK(df::in_commutator_subgroup(klein(), klein().parse_word("a b a b")));
  CHECK(df::normal_form(klein(), klein().parse_word("a b a b")).empty());
}

TEST_CASE("ball examples") {
  const auto b = df::ball(dinf(), 3);
  CHECK(b.size() == 7);
  CHECK(b.front().empty());
  CHECK(df::ball(klein(), 2).size() == 4);
  CHECK(df::ball(dinf(), 0).size() == 1);
  CHECK_THROWS_AS(df::ball(dinf(), 30), df::CapExceeded);
  // Free product of three Z/2: 1 + 3 + 3*2 + 3*4 elements up to length 3.
  CHECK(df::ball(CoxeterSystem({"a", "b", "c"}, {}), 3).size() == 22);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(shortlex_less(b[i - 1], b[i]));
}

TEST_CASE("normal form is the shortlex least word with the same tits matrix") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    const auto sys = random_system(rng, 4);
    std::map<std::string, CoxWord> least;
    std::vector<CoxWord> words;
    all_words(sys.rank(), sys.rank() <= 3 ? 7 : 5, [&](const CoxWord& w) {
      words.push_back(w);
      auto [it, inserted] = least.try_emplace(key(df::tits_matrix(sys, w)), w);
      if (!inserted && shortlex_less(w, it->second)) it->second = w;
    });
    for (const auto& w : words) CHECK(df::normal_form(sys, w) == least.at(key(df::tits_matrix(sys, w))));
  }
}

TEST_CASE("normal form and tits matrix decide the same word problem") {
  std::mt19937_64 rng(12345);
  std::size_t equal_pairs = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto sys = random_system(rng);
    const auto u = random_word(rng, sys);
    // Half the time derive v from u by random relations so equal pairs occur.
    CoxWord v;
    if (trial % 2) {
      v = u;
      for (int step = 0; step < 4; ++step) {
        const auto pos = v.empty() ? 0 : rng() % (v.size() + 1);
        const auto s = static_cast<std::uint32_t>(rng() % sys.rank());
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), {s, s});
      }
    } else {
      v = random_word(rng, sys);
    }
    const bool nf_equal = df::normal_form(sys, u) == df::normal_form(sys, v);
    const bool tits_equal = df::tits_matrix(sys, u) == df::tits_matrix(sys, v);
    CHECK(nf_equal == tits_equal);
    equal_pairs += nf_equal;
  }
  CHECK(equal_pairs > 5000);
}

TEST_CASE("normal form properties") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto sys = random_system(rng);
    const auto u = random_word(rng, sys), v = random_word(rng, sys);
    const auto nu = df::normal_form(sys, u);
    CHECK(df::normal_form(sys, nu) == nu);
    CHECK(nu.size() <= u.size());
    CHECK(df::phi(sys, df::multiply(sys, u, v)) == df::phi(sys, u) * df::phi(sys, v));
    CHECK(df::normal_form(sys, df::multiply(sys, u, df::inverse(sys, u))).empty());
    // Torsion elements have order at most two, so M^2 == I decides torsion.
    const auto m = df::tits_matrix(sys, u);
    CHECK(df::is_torsion(sys, u) == (m * m).is_identity());
  }
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(CoxeterSystem({"a", "b"}, {{0, 0}}), df::InvalidArgument);
  CHECK_THROWS_AS(CoxeterSystem({"a", "b"}, {{0, 2}}), df::InvalidArgument);
  CHECK_THROWS_AS(dinf().parse_word("a z"), df::ParseError);
}
