#include <doctest.h>

#include <random>
#include <sstream>

#include "df/errors.hpp"
#include "df/io.hpp"
#include "oracles.hpp"

namespace {

df::SimplicialComplex complex_from(const std::string& text) {
  std::istringstream in(text);
  return df::parse_complex(in, "mem");
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const df::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("complex files") {
  const auto k = complex_from("a b c\n");
  CHECK(k == df::SimplicialComplex::from_label_facets({{"a", "b", "c"}}));
  CHECK(k.simplex_count() == 7);

  const auto commented = complex_from("# header\n\na b\n  # indented comment\nb c\nb a\n");
  CHECK(commented.simplices_of_dim(1).size() == 2);
  CHECK(commented.facets().size() == 2);

  CHECK_THROWS_AS(complex_from(""), df::ParseError);
  CHECK_THROWS_AS(complex_from("# only comments\n"), df::ParseError);
  const auto msg = error_of([] { complex_from("a b\n\nc c\n"); });
  CHECK(msg.find("mem:3:") != std::string::npos);
  CHECK_THROWS_AS(df::read_complex("/nonexistent/file.cplx"), df::ParseError);
}

TEST_CASE("emit and parse round trip") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = oracle::random_complex(rng, 1 + rng() % 6, rng() % 5);
    const auto back = complex_from(df::emit_complex(k));
    CHECK(back.simplex_count() == k.simplex_count());
    CHECK(back.vertex_count() == k.vertex_count());
    for (const auto& s : k.simplices()) {
      df::Simplex t;
      for (auto v : s) t.push_back(back.vertex_index(k.labels()[v]));
      std::sort(t.begin(), t.end());
      CHECK(back.contains(t));
    }
  }
}

TEST_CASE("group tables") {
  std::istringstream z3("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(df::parse_group_table(z3).order() == 3);
  std::istringstream short_table("2\n0 1\n1\n");
  CHECK_THROWS_AS(df::parse_group_table(short_table), df::ParseError);
  std::istringstream range("2\n0 1\n1 5\n");
  CHECK(error_of([&] { df::parse_group_table(range, "t"); }).find("t:3:") != std::string::npos);
  std::istringstream not_group("2\n0 0\n0 0\n");
  CHECK_THROWS_AS(df::parse_group_table(not_group), df::InvalidArgument);
}

TEST_CASE("matrix files") {
  std::istringstream in("# comment\n2 3\n1 -2 3\n4 5 123456789012345678901234567890\n");
  const auto m = df::parse_matrix(in);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(0, 1) == -2);
  CHECK(m(1, 2) == df::Int("123456789012345678901234567890"));
  std::istringstream bad("1 2\n3 x\n");
  CHECK(error_of([&] { df::parse_matrix(bad, "m"); }).find("m:2:") != std::string::npos);
  std::istringstream empty("0 0\n");
  CHECK(df::parse_matrix(empty).rows() == 0);
}

TEST_CASE("coxeter system files") {
  std::istringstream in("a b c\na c\n");
  const auto sys = df::parse_coxeter_system(in);
  CHECK(sys.rank() == 3);
  CHECK(sys.commute(0, 2));
  CHECK_FALSE(sys.commute(0, 1));
  std::istringstream unknown("a b\na q\n");
  CHECK(error_of([&] { df::parse_coxeter_system(unknown, "c"); }).find("c:2:") != std::string::npos);
  std::istringstream self("a b\na a\n");
  CHECK_THROWS_AS(df::parse_coxeter_system(self), df::ParseError);
}
