#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wonder/enumerate.hpp"
#include "wonder/quotient.hpp"

using namespace wonder;

namespace {
const RankOneTable& table() {
  static RankOneTable t = RankOneTable::builtin();
  return t;
}
}  // namespace

TEST_CASE("is_distinguished on the A2 system") {
  auto sys = fixtures::a2_full();
  auto cs = colors(sys);
  int dm1 = cs.find("Dm1"), dm2 = cs.find("Dm2"), dp1 = cs.find("Dp1");
  REQUIRE(dm1 >= 0);

  auto cert = is_distinguished(cs, std::vector<int>{dm1, dm2});
  REQUIRE(cert);
  // exact verification: sums are (0, 0)
  CHECK((*cert)[0] * Rational(1) + (*cert)[1] * Rational(-1) == Rational(0));

  CHECK(!is_distinguished(cs, std::vector<int>{dm1}));
  CHECK(is_distinguished(cs, std::vector<int>{dp1}));
  CHECK(is_distinguished(cs, std::vector<int>{}));
}

TEST_CASE("enumerate_distinguished on the rank-1 system") {
  auto sys = fixtures::a1_rank1();
  auto cs = colors(sys);
  auto subsets = enumerate_distinguished(cs);
  CHECK(subsets.size() == 4);  // every subset of two nonnegative rows
}

TEST_CASE("enumerate_distinguished on the diagonal system") {
  auto cs = colors(fixtures::a1a1_diag());
  auto subsets = enumerate_distinguished(cs);
  CHECK(subsets.size() == 2);  // empty and the single color
}

TEST_CASE("parallel scan equals the serial reference") {
  for (auto sys : {fixtures::a2_full(), fixtures::a1a1_product(), fixtures::a1a1_shared_comb()}) {
    auto cs = colors(sys);
    auto a = enumerate_distinguished(cs);
    auto b = enumerate_distinguished_serial(cs);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].color_indices == b[k].color_indices);
      CHECK(a[k].certificate == b[k].certificate);
    }
  }
}

TEST_CASE("simplex agrees with the vertex-enumeration oracle") {
  for (auto sys : {fixtures::a1_rank1(), fixtures::a2_full(), fixtures::a1a1_product(),
                   fixtures::a1a1_shared_comb(), fixtures::a1a1_diag()}) {
    auto cs = colors(sys);
    int m = (int)cs.colors.size();
    int ncols = (int)sys.sigma.size();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<std::vector<int>> rows;
      std::vector<int> subset;
      for (int d = 0; d < m; ++d)
        if (mask & (1u << d)) {
          subset.push_back(d);
          rows.push_back(cs.c_full[d]);
        }
      bool lp = is_distinguished(cs, subset).has_value();
      bool oracle = oracles::distinguished_oracle(rows, ncols);
      CHECK(lp == oracle);
    }
  }
}

TEST_CASE("monoid basis") {
  // kernel of (1,-1),(-1,1) over N^2 is generated by (1,1)
  CHECK(monoid_basis({{1, -1}, {-1, 1}}, 2) == std::vector<std::vector<int>>{{1, 1}});
  // a single positive row: only the trivial solution
  CHECK(monoid_basis({{1}}, 1).empty());
  // no constraints: the units, in input order
  CHECK(monoid_basis({}, 2) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  // c(D, sigma) = 0 forced on the first coordinate only
  CHECK(monoid_basis({{2, 0}}, 2) == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("quotient of the rank-1 system by one color") {
  auto sys = fixtures::a1_rank1();
  auto cs = colors(sys);
  auto qr = quotient_by(sys, cs, std::vector<int>{0}, table());
  CHECK(qr.quotient.sigma.empty());
  CHECK(qr.quotient.sp.empty());
  CHECK(qr.quotient.a_rows.empty());
  REQUIRE(qr.surviving_colors.size() == 1);
  CHECK(qr.surviving_colors[0].first == 1);  // D2 survives as the single b-color

  auto cls = classify_quotient(sys, cs, std::vector<int>{0}, table());
  CHECK(cls.minimal);
  CHECK(cls.essential);
  CHECK(cls.rank0);
  CHECK(cls.defect_relation == DefectRelation::Constant);  // 1 -> 1
}

TEST_CASE("quotient of the rank-1 system by both colors") {
  auto sys = fixtures::a1_rank1();
  auto cs = colors(sys);
  auto qr = quotient_by(sys, cs, std::vector<int>{0, 1}, table());
  CHECK(qr.quotient.sigma.empty());
  CHECK(qr.quotient.sp == std::vector<int>{0});
  CHECK(qr.surviving_colors.empty());
  auto cls = classify_quotient(sys, cs, std::vector<int>{0, 1}, table());
  CHECK(!cls.minimal);
  CHECK(cls.defect_relation == DefectRelation::Lower);
}

TEST_CASE("quotient of the A2 system by the two negative colors") {
  auto sys = fixtures::a2_full();
  auto cs = colors(sys);
  std::vector<int> subset{cs.find("Dm1"), cs.find("Dm2")};
  auto qr = quotient_by(sys, cs, subset, table());
  REQUIRE(qr.quotient.sigma.size() == 1);
  CHECK(qr.quotient.sigma[0] == Weight{1, 1});
  CHECK(qr.sigma_expansion == std::vector<std::vector<int>>{{1, 1}});
  CHECK(qr.quotient.sp.empty());
  CHECK(qr.quotient.a_rows.empty());
  auto m = match_spherical_root(qr.quotient.rs, qr.quotient.sigma[0], table());
  REQUIRE(m);
  CHECK(m->entry->name == "a(n)");

  auto cls = classify_quotient(sys, cs, subset, table());
  CHECK(cls.essential);

  // survivors map onto the two b-colors
  REQUIRE(qr.surviving_colors.size() == 2);
}

TEST_CASE("identity quotient") {
  for (auto sys : {fixtures::a2_full(), fixtures::a1a1_shared_comb(), fixtures::a1_rank1()}) {
    auto cs = colors(sys);
    auto qr = quotient_by(sys, cs, std::vector<int>{}, table());
    CHECK(qr.quotient == sys);
    CHECK(qr.surviving_colors.size() == cs.colors.size());
  }
}

TEST_CASE("every quotient of every corpus system validates and is free") {
  for (const char* g : {"A1", "A1xA1", "A2", "B2"}) {
    auto rs = RootSystem::parse(g);
    for (const auto& sys : enumerate_systems(rs, table())) {
      auto cs = colors(sys);
      for (const auto& d : enumerate_distinguished(cs)) {
        auto qr = quotient_by(sys, cs, d.color_indices, table());  // validates internally
        CHECK(qr.quotient.sigma.size() <= sys.sigma.size());
      }
    }
  }
}

TEST_CASE("tower property on nested pairs") {
  for (auto sys : {fixtures::a2_full(), fixtures::a1a1_product()}) {
    auto cs = colors(sys);
    auto all = enumerate_distinguished(cs);
    for (const auto& d1 : all)
      for (const auto& d2 : all) {
        // nested pairs: d1 contained in d2
        if (!std::includes(d2.color_indices.begin(), d2.color_indices.end(),
                           d1.color_indices.begin(), d1.color_indices.end()))
          continue;
        auto q1 = quotient_by(sys, cs, d1.color_indices, table());
        // image of d2 minus d1 inside the quotient
        std::vector<int> rest;
        for (int c : d2.color_indices)
          if (std::find(d1.color_indices.begin(), d1.color_indices.end(), c) ==
              d1.color_indices.end())
            rest.push_back(c);
        std::vector<int> image;
        for (auto [oldc, newc] : q1.surviving_colors)
          if (std::find(rest.begin(), rest.end(), oldc) != rest.end()) image.push_back(newc);
        std::sort(image.begin(), image.end());
        auto qcs = colors(q1.quotient);
        REQUIRE(is_distinguished(qcs, image));
        auto q12 = quotient_by(q1.quotient, qcs, image, table());
        auto q2 = quotient_by(sys, cs, d2.color_indices, table());
        CHECK(canonical_form(q12.quotient) == canonical_form(q2.quotient));
      }
  }
}

TEST_CASE("certificate denominators stay modest") {
  auto sys = fixtures::a2_full();
  auto cs = colors(sys);
  for (const auto& d : enumerate_distinguished(cs))
    for (const auto& a : d.certificate) CHECK(a.den() <= 16);
}

TEST_CASE("enumeration bound is enforced") {
  // a wide product system with 2 colors per factor exceeds max_colors = 4
  SphericalSystem s;
  s.rs = RootSystem::parse("A1xA1xA1");
  s.sigma = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int k = 0; k < 3; ++k) {
    std::vector<int> row(3, 0);
    row[k] = 1;
    s.a_rows.push_back({"Dp" + std::to_string(k + 1), row});
    s.a_rows.push_back({"Dm" + std::to_string(k + 1), row});
  }
  auto cs = colors(s);
  REQUIRE(cs.colors.size() == 6);
  CHECK_THROWS_AS(enumerate_distinguished(cs, 4), bound_exceeded);
  CHECK(enumerate_distinguished(cs, 6).size() > 0);
}
