#include <doctest.h>

#include "df/dihedral_census.hpp"
#include "df/errors.hpp"
#include "df/unil.hpp"

using df::UNilKind;

TEST_CASE("unil table") {
  CHECK(df::unil_group(0) == UNilKind::zero);
  CHECK(df::unil_group(1) == UNilKind::zero);
  CHECK(df::unil_group(2) == UNilKind::z2_plus_z4_infty);
  CHECK(df::unil_group(3) == UNilKind::z2_infty);
  CHECK(df::unil_group(6) == UNilKind::z2_plus_z4_infty);
  CHECK(df::unil_group(7) == UNilKind::z2_infty);
  CHECK(df::unil_group(-1) == UNilKind::z2_infty);
  CHECK(df::unil_group(-2) == UNilKind::z2_plus_z4_infty);
  CHECK(df::to_string(UNilKind::zero) == "0");
  CHECK(df::to_string(UNilKind::z2_infty) == "(Z/2)^inf");
  CHECK(df::to_string(UNilKind::z2_plus_z4_infty) == "(Z/2)^inf + (Z/4)^inf");
}

TEST_CASE("unil has period four and epsilon alternates") {
  for (long long n = -40; n < 40; ++n) {
    CHECK(df::unil_group(n) == df::unil_group(n + 4));
    CHECK(df::epsilon(n) * df::epsilon(n + 1) == -1);
    CHECK(df::epsilon(n) == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("structure set is a singleton exactly when the summand or the count vanishes") {
  for (long long n = 5; n <= 40; ++n)
    for (long long mid = 0; mid <= 10; ++mid) {
      const auto s = df::structure_set(n, mid);
      const bool vanishing = n % 4 == 0 || n % 4 == 1;
      CHECK(s.singleton == (vanishing || mid == 0));
      CHECK_FALSE(s.outside_hypotheses);
      CHECK(s.index_count == static_cast<std::size_t>(mid));
    }
}

TEST_CASE("structure set examples") {
  const auto six = df::structure_set(6, 1);
  CHECK_FALSE(six.singleton);
  CHECK(six.summand == UNilKind::z2_plus_z4_infty);
  CHECK(six.str().find("(Z/2)^inf + (Z/4)^inf") != std::string::npos);
  CHECK(df::structure_set(8, 3).singleton);
  CHECK(df::structure_set(8, 3).str() == "singleton");
  CHECK(df::structure_set(7, 0).singleton);
  const auto lower = df::structure_set(7, 2, df::Confidence::ball_lower_bound);
  CHECK(lower.str().find("at least") != std::string::npos);
  CHECK_THROWS_AS(df::structure_set(6, -1), df::InvalidArgument);
  const auto small = df::structure_set(3, 1);
  CHECK(small.outside_hypotheses);
  CHECK(small.str().find("outside-theorem-hypotheses") != std::string::npos);
}

TEST_CASE("hypothesis checklist") {
  const auto plain = df::hypothesis_checklist();
  REQUIRE(plain.size() == 5);
  CHECK(plain[0].status == df::ChecklistStatus::not_checked);
  CHECK(plain[1].status == df::ChecklistStatus::not_checked);
  for (std::size_t i = 2; i < 5; ++i) CHECK(plain[i].status == df::ChecklistStatus::assumed);

  df::PropertyReport r;
  r.centralizers = df::Verdict::pass;
  r.unique_maximal = df::Verdict::fail;
  const auto checked = df::hypothesis_checklist(&r);
  CHECK(checked[0].status == df::ChecklistStatus::checked_pass);
  CHECK(checked[1].status == df::ChecklistStatus::checked_fail);
  for (std::size_t i = 0; i < 5; ++i) CHECK(checked[i].number == static_cast<int>(i) + 1);
}
