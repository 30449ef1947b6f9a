#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "wonder/enumerate.hpp"
#include "wonder/system.hpp"

using namespace wonder;

namespace {
const RankOneTable& table() {
  static RankOneTable t = RankOneTable::builtin();
  return t;
}

bool fails_exactly(const ValidationReport& rep, Axiom which) {
  for (int k = 0; k < kAxiomCount; ++k) {
    bool expect_pass = k != (int)which;
    if (rep.verdicts[k].pass != expect_pass) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("the rank-1 A1 system validates") {
  auto rep = validate(fixtures::a1_rank1(), table());
  CHECK(rep.valid());
}

TEST_CASE("A2 cardinality failure") {
  auto sys = fixtures::a1_rank1();
  sys.a_rows.pop_back();
  auto rep = validate(sys, table());
  CHECK(!rep.valid());
  CHECK(fails_exactly(rep, Axiom::A2));
}

TEST_CASE("the four-color A2 system validates with correct row sums") {
  auto sys = fixtures::a2_full();
  auto rep = validate(sys, table());
  CHECK(rep.valid());
  CHECK(coroot_row(sys, 0) == std::vector<int>{2, -1});
  CHECK(coroot_row(sys, 1) == std::vector<int>{-1, 2});
}

TEST_CASE("fabricated A row on a system without simple sigma") {
  auto sys = fixtures::a1a1_diag();
  sys.a_rows = {{"D1", {0}}};
  auto rep = validate(sys, table());
  CHECK(fails_exactly(rep, Axiom::A3));
}

TEST_CASE("validation is order independent") {
  auto sys = fixtures::a2_full();
  std::swap(sys.sigma[0], sys.sigma[1]);
  for (auto& r : sys.a_rows) std::swap(r.c[0], r.c[1]);
  std::reverse(sys.a_rows.begin(), sys.a_rows.end());
  CHECK(validate(sys, table()).valid());
}

TEST_CASE("colors of the rank-0 A1 system") {
  auto cs = colors(fixtures::a1_rank0());
  REQUIRE(cs.colors.size() == 1);
  CHECK(cs.colors[0].kind == Color::B);
  CHECK(cs.colors[0].name == "b_1");
  CHECK(cs.delta_of[0] == std::vector<int>{0});
  CHECK(defect(fixtures::a1_rank0()) == 1);
}

TEST_CASE("colors of the diagonal A1xA1 system merge") {
  auto sys = fixtures::a1a1_diag();
  auto cs = colors(sys);
  REQUIRE(cs.colors.size() == 1);
  CHECK(cs.colors[0].kind == Color::B);
  CHECK(cs.colors[0].roots == std::vector<int>{0, 1});
  CHECK(cs.c_full[0] == std::vector<int>{2});
  CHECK(defect(sys) == 0);
}

TEST_CASE("colors of the doubled-root system") {
  auto sys = fixtures::a1_double();
  auto cs = colors(sys);
  REQUIRE(cs.colors.size() == 1);
  CHECK(cs.colors[0].kind == Color::TwoA);
  CHECK(cs.colors[0].name == "2a_1");
  CHECK(cs.c_full[0] == std::vector<int>{2});  // half of <alpha^vee, 2alpha>
}

TEST_CASE("full pairing of the rank-1 system") {
  auto cs = colors(fixtures::a1_rank1());
  REQUIRE(cs.colors.size() == 2);
  CHECK(cs.c_full[0] == std::vector<int>{1});
  CHECK(cs.c_full[1] == std::vector<int>{1});
  CHECK(defect(fixtures::a1_rank1()) == 1);
}

TEST_CASE("delta_of is empty exactly on sp") {
  SphericalSystem sys;
  sys.rs = RootSystem::parse("B3");
  sys.sp = {2};
  sys.sigma = {{0, 1, 1}};
  REQUIRE(validate(sys, table()).valid());
  auto cs = colors(sys);
  CHECK(cs.delta_of[2].empty());
  CHECK(!cs.delta_of[0].empty());
  CHECK(!cs.delta_of[1].empty());
}

TEST_CASE("a-row partition property") {
  auto sys = fixtures::a2_full();
  auto cs = colors(sys);
  for (size_t k = 0; k < cs.colors.size(); ++k) {
    bool in_some = false;
    for (int i = 0; i < sys.rs.rank(); ++i)
      in_some = in_some ||
                std::find(cs.delta_of[i].begin(), cs.delta_of[i].end(), (int)k) !=
                    cs.delta_of[i].end();
    CHECK(in_some);
  }
}

TEST_CASE("colorset-level pairing invariants over the B2 corpus") {
  for (const auto& sys : enumerate_systems(RootSystem::parse("B2"), table())) {
    auto cs = colors(sys);
    auto sigma_pos = simple_sigma_positions(sys);
    for (int alpha = 0; alpha < sys.rs.rank(); ++alpha) {
      if (sigma_pos[alpha] < 0) continue;
      // the rows of A(alpha) sum to the coroot row, restated on the colors
      std::vector<int> sum(sys.sigma.size(), 0);
      for (int c : cs.delta_of[alpha])
        for (size_t j = 0; j < sys.sigma.size(); ++j) sum[j] += cs.c_full[c][j];
      CHECK(sum == coroot_row(sys, alpha));
    }
    // a-rows stay capped at 1 in the full pairing
    for (const auto& color : cs.colors)
      if (color.kind == Color::A)
        for (size_t j = 0; j < sys.sigma.size(); ++j)
          CHECK(cs.c_full[&color - cs.colors.data()][j] <= 1);
  }
}

TEST_CASE("twelve hand-broken mutations fail exactly their axiom") {
  // independence: a duplicated sigma entry
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A1");
    s.sigma = {{1}, {1}};
    s.a_rows = {{"D1", {1, 1}}, {"D2", {1, 1}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::Independence));
  }
  // lattice: a negative coefficient
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{1, -1}};
    CHECK(fails_exactly(validate(s, table()), Axiom::Lattice));
  }
  // A1, cap clause: an entry above 1
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{1, 0}, {0, 1}};
    s.a_rows = {{"Dp1", {1, -1}}, {"Dm1", {1, 0}}, {"Dp2", {2, 1}}, {"Dm2", {-3, 1}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::A1));
  }
  // A1, simple clause: pairing 1 against a non-simple sigma
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{1, 0}, {1, 1}};
    s.a_rows = {{"Dp1", {1, 1}}, {"Dm1", {1, 0}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::A1));
  }
  // A2, cardinality clause
  {
    auto s = fixtures::a1_rank1();
    s.a_rows.pop_back();
    CHECK(fails_exactly(validate(s, table()), Axiom::A2));
  }
  // A2, sum clause
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{1, 0}, {0, 1}};
    s.a_rows = {{"Dp1", {1, 0}}, {"Dm1", {1, 0}}, {"Dp2", {0, 1}}, {"Dm2", {-1, 1}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::A2));
  }
  // A3: a row in no A(alpha)
  {
    auto s = fixtures::a1a1_diag();
    s.a_rows = {{"D1", {0}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::A3));
  }
  // Sigma1, parity clause
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{2, 0}, {0, 1}};
    s.a_rows = {{"Dp2", {-1, 1}}, {"Dm2", {-1, 1}}};
    CHECK(fails_exactly(validate(s, table()), Axiom::Sigma1));
  }
  // Sigma1, sign clause
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("B2");
    s.sp = {1};
    s.sigma = {{2, 0}, {2, 2}};
    CHECK(fails_exactly(validate(s, table()), Axiom::Sigma1));
  }
  // Sigma2: orthogonal pair with differing pairings
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A1xA1xA1");
    s.sigma = {{1, 1, 0}, {0, 1, 1}};
    CHECK(fails_exactly(validate(s, table()), Axiom::Sigma2));
  }
  // S, no matching entry
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sigma = {{1, 2}};
    CHECK(fails_exactly(validate(s, table()), Axiom::S));
  }
  // S, sp rule rejects
  {
    SphericalSystem s;
    s.rs = RootSystem::parse("A2");
    s.sp = {0};
    s.sigma = {{1, 1}};
    CHECK(fails_exactly(validate(s, table()), Axiom::S));
  }
}
