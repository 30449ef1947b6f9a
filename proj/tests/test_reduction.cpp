#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "wonder/enumerate.hpp"
#include "wonder/reduction.hpp"

using namespace wonder;

namespace {
const RankOneTable& table() {
  static RankOneTable t = RankOneTable::builtin();
  return t;
}

SphericalSystem parse_fixture(const char* group, std::vector<int> sp, std::vector<Weight> sigma,
                              std::vector<ARow> rows = {}) {
  SphericalSystem s;
  s.rs = RootSystem::parse(group);
  s.sp = std::move(sp);
  s.sigma = std::move(sigma);
  s.a_rows = std::move(rows);
  REQUIRE(validate(s, table()).valid());
  return s;
}
}  // namespace

TEST_CASE("localize") {
  auto sys = fixtures::a2_full();
  // identity
  auto full = localize(sys, std::vector<int>{0, 1}, table());
  CHECK(full == sys);

  // down to one root: the rank-1 system survives
  auto loc = localize(sys, std::vector<int>{0}, table());
  CHECK(loc.rs.spec_string() == "A1");
  CHECK(loc.sigma == std::vector<Weight>{{1}});
  REQUIRE(loc.a_rows.size() == 2);
  CHECK(loc.a_rows[0].name == "Dp1");
  CHECK(loc.a_rows[0].c == std::vector<int>{1});

  // support not contained: rank drops to zero
  auto diag = fixtures::a1a1_diag();
  auto loc0 = localize(diag, std::vector<int>{0}, table());
  CHECK(loc0.sigma.empty());
  CHECK(loc0.rs.spec_string() == "A1");
}

TEST_CASE("localization soundness across subsets") {
  for (auto sys : {fixtures::a2_full(), fixtures::a1a1_product(), fixtures::a1a1_shared_comb()}) {
    for (unsigned mask = 0; mask < (1u << sys.rs.rank()); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < sys.rs.rank(); ++i)
        if (mask & (1u << i)) subset.push_back(i);
      CHECK_NOTHROW(localize(sys, subset, table()));  // validates internally
    }
  }
}

TEST_CASE("cuspidality") {
  CHECK(is_cuspidal(fixtures::a1_rank1()));
  CHECK(!is_cuspidal(fixtures::a1_rank0()));
  SphericalSystem s;
  s.rs = RootSystem::parse("A2");
  s.sigma = {{1, 0}};
  s.a_rows = {{"D1", {1}}, {"D2", {1}}};
  CHECK(!is_cuspidal(s));
}

TEST_CASE("decomposition of the product system") {
  auto sys = fixtures::a1a1_product();
  auto cs = colors(sys);
  auto dec = find_decomposition(sys, cs, table());
  REQUIRE(dec);
  // each side kills one factor's pair and keeps the other's root
  auto q1 = quotient_by(sys, cs, dec->first.color_indices, table());
  auto q2 = quotient_by(sys, cs, dec->second.color_indices, table());
  std::set<Weight> covered;
  for (auto& w : q1.quotient.sigma) covered.insert(w);
  for (auto& w : q2.quotient.sigma) covered.insert(w);
  for (auto& w : sys.sigma) CHECK(covered.count(w));
}

TEST_CASE("rank-1 and rank-0 systems do not decompose") {
  auto s1 = fixtures::a1_rank1();
  CHECK(!find_decomposition(s1, colors(s1), table()));
  auto s0 = fixtures::a1_rank0();
  CHECK(!find_decomposition(s0, colors(s0), table()));
  auto diag = fixtures::a1a1_diag();
  CHECK(!find_decomposition(diag, colors(diag), table()));
  auto shared = fixtures::a1a1_shared_comb();
  CHECK(!find_decomposition(shared, colors(shared), table()));
}

TEST_CASE("positive combs") {
  auto s1 = fixtures::a1_rank1();
  auto combs = positive_combs(s1);
  REQUIRE(combs.size() == 2);
  CHECK(combs[0].n == 1);
  CHECK(combs[1].n == 1);

  auto a2 = fixtures::a2_full();
  combs = positive_combs(a2);
  REQUIRE(combs.size() == 2);  // Dp1 and Dp2 only
  CHECK(a2.a_rows[combs[0].a_index].name == "Dp1");
  CHECK(a2.a_rows[combs[1].a_index].name == "Dp2");

  CHECK(positive_combs(fixtures::a1a1_diag()).empty());
}

TEST_CASE("comb split of the shared comb") {
  auto sys = fixtures::a1a1_shared_comb();
  auto combs = positive_combs(sys);
  REQUIRE(combs.size() == 1);
  CHECK(combs[0].n == 2);
  CHECK_THROWS_AS(comb_split(sys, positive_combs(fixtures::a1_rank1())[0], table()),
                  std::invalid_argument);

  auto parts = comb_split(sys, combs[0], table());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].sigma == std::vector<Weight>{{1, 0}});
  CHECK(parts[1].sigma == std::vector<Weight>{{0, 1}});
  for (const auto& p : parts) {
    auto pc = positive_combs(p);
    bool has_1comb = false;
    for (const auto& c : pc) has_1comb = has_1comb || c.n == 1;
    CHECK(has_1comb);
  }
}

TEST_CASE("comb fibration criterion") {
  auto s1 = fixtures::a1_rank1();
  auto combs = positive_combs(s1);
  CHECK(comb_fibration_applies(s1, combs[0]));  // no non-simple sigma

  // mechanically: S_D meeting the support of a non-simple sigma blocks it
  SphericalSystem sys;
  sys.rs = RootSystem::parse("A2");
  sys.sigma = {{1, 0}, {1, 1}};
  sys.a_rows = {{"D1", {1, 0}}, {"D2", {1, -1}}};
  auto pc = positive_combs(sys);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].s_d == std::vector<int>{0});
  CHECK(!comb_fibration_applies(sys, pc[0]));
}

TEST_CASE("tails of hand-built fixtures") {
  // B4 with a 2b(2) tail
  auto sys = parse_fixture("B4", {3}, {{1, 0, 0, 0}, {0, 0, 2, 2}},
                           {{"D1", {1, 0}}, {"D2", {1, 0}}});
  auto cs = colors(sys);
  auto tails = find_tails(sys, cs, table());
  REQUIRE(tails.size() == 1);
  CHECK(tails[0].kind == TailKind::TwoB);
  CHECK(tails[0].m == 2);
  CHECK(tails[0].tilde_sigma == std::vector<int>{1});
  CHECK(!tails[0].witness.color_indices.empty());

  auto stripped = strip_tail(sys, tails[0], table());
  CHECK(stripped.rs.spec_string() == "A1");
  CHECK(stripped.sigma.size() == 1);

  // the A1 rank-1 system has no tails
  auto s1 = fixtures::a1_rank1();
  CHECK(find_tails(s1, colors(s1), table()).empty());
}

TEST_CASE("full-support b(4) tail hinges on the short root being parabolic") {
  // sigma is the whole b(4) chain; with alpha4 parabolic the tail exists
  auto with = parse_fixture("B4", {1, 2, 3}, {{1, 1, 1, 1}});
  auto tails = find_tails(with, colors(with), table());
  bool b4 = false;
  for (const auto& t : tails) b4 = b4 || (t.kind == TailKind::B && t.m == 4);
  CHECK(b4);

  // same sigma, alpha4 not parabolic: still a valid system, no b(4) tail
  auto without = parse_fixture("B4", {1, 2}, {{1, 1, 1, 1}});
  for (const auto& t : find_tails(without, colors(without), table()))
    CHECK(!(t.kind == TailKind::B && t.m == 4));
}

TEST_CASE("b(1) tail side condition") {
  // sigma = [alpha2] on B2 with equal rows: a b(1) tail
  auto sys = parse_fixture("B2", {}, {{0, 1}}, {{"D1", {1}}, {"D2", {1}}});
  auto cs = colors(sys);
  auto tails = find_tails(sys, cs, table());
  REQUIRE(tails.size() == 1);
  CHECK(tails[0].kind == TailKind::B);
  CHECK(tails[0].m == 1);

  // differing rows break the m = 1 condition
  auto sys3 = parse_fixture("B2", {}, {{1, 0}, {0, 1}},
                            {{"D1", {1, 0}}, {"D2", {1, -1}}, {"D3", {0, 1}}, {"D4", {-2, 1}}});
  bool b1 = false;
  for (const auto& t : find_tails(sys3, colors(sys3), table()))
    if (t.kind == TailKind::B && t.m == 1) b1 = true;
  CHECK(!b1);  // A(alpha2) rows differ
}

TEST_CASE("primitivity") {
  CHECK(!is_primitive(fixtures::a1_rank1(), table()));  // has combs
  CHECK(!is_primitive(fixtures::a1_rank0(), table()));  // not cuspidal
  CHECK(!is_primitive(fixtures::a1a1_product(), table()));  // decomposable

  auto p1 = primitive_1combs(fixtures::a1_rank1(), table());
  CHECK(p1.size() == 2);
  CHECK(primitive_1combs(fixtures::a1a1_product(), table()).empty());
}

TEST_CASE("reductive criterion") {
  auto cert = is_reductive_system(fixtures::a1_rank1());
  REQUIRE(cert);
  CHECK((*cert)[0].is_positive());

  CHECK(!is_reductive_system(fixtures::a2_full()));  // opposite rows block strict positivity
  CHECK(!is_reductive_system(fixtures::a1_rank0())); // empty sum cannot be positive

  SphericalSystem all_sp;
  all_sp.rs = RootSystem::parse("A1");
  all_sp.sp = {0};
  CHECK(is_reductive_system(all_sp));  // no colors at all
}

TEST_CASE("strictness and spherical closure") {
  auto s1 = fixtures::a1_rank1();
  CHECK(!is_strict(s1, table()));            // 2*alpha exists
  CHECK(is_spherically_closed(s1, table())); // simple sigma exempt

  auto dbl = fixtures::a1_double();
  CHECK(is_strict(dbl, table()));  // 4*alpha matches nothing

  SphericalSystem empty;
  empty.rs = RootSystem::parse("A1");
  empty.sp = {0};
  CHECK(is_strict(empty, table()));

  auto diag = fixtures::a1a1_diag();
  CHECK(is_strict(diag, table()));  // 2(alpha+alpha') absent from the table
}

TEST_CASE("reduce: localization to the rank-1 leaf") {
  SphericalSystem s;
  s.rs = RootSystem::parse("A2");
  s.sigma = {{1, 0}};
  s.a_rows = {{"D1", {1}}, {"D2", {1}}};
  auto tree = reduce(s, table());
  REQUIRE(tree.children.size() == 1);
  CHECK(tree.children[0].label.rfind("localize", 0) == 0);
  std::vector<const ReductionNode*> leaves;
  tree.leaves(leaves);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0]->flag == LeafFlag::Primitive1Comb);
  CHECK(leaves[0]->system.rs.spec_string() == "A1");
}

TEST_CASE("reduce: decomposition into two rank-1 leaves") {
  auto tree = reduce(fixtures::a1a1_product(), table());
  REQUIRE(tree.children.size() == 2);
  CHECK(tree.children[0].label.rfind("decompose", 0) == 0);
  std::vector<const ReductionNode*> leaves;
  tree.leaves(leaves);
  REQUIRE(leaves.size() == 2);
  for (auto* l : leaves) {
    // each branch localizes down to the rank-1 system on its factor
    CHECK(l->flag == LeafFlag::Primitive1Comb);
    CHECK(l->system.rs.spec_string() == "A1");
    CHECK(l->system.sigma.size() == 1);
  }
}

TEST_CASE("reduce: shared comb splits") {
  auto tree = reduce(fixtures::a1a1_shared_comb(), table());
  REQUIRE(tree.children.size() == 2);
  CHECK(tree.children[0].label.rfind("comb_split", 0) == 0);
  std::vector<const ReductionNode*> leaves;
  tree.leaves(leaves);
  for (auto* l : leaves)
    CHECK((l->flag == LeafFlag::Primitive1Comb || l->flag == LeafFlag::Rank0));
}

TEST_CASE("reduce terminates with sound leaves on the A1xA1 corpus") {
  auto rs = RootSystem::parse("A1xA1");
  for (const auto& sys : enumerate_systems(rs, table())) {
    auto tree = reduce(sys, table());
    std::vector<const ReductionNode*> leaves;
    tree.leaves(leaves);
    for (auto* l : leaves) {
      bool ok = l->flag == LeafFlag::Primitive || l->flag == LeafFlag::Primitive1Comb ||
                l->flag == LeafFlag::Rank0;
      CHECK(ok);
    }
  }
}
