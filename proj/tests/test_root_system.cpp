#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace flagradon;
using testsup::make_rs;

TEST_CASE("classical positive root counts") {
  CHECK(make_rs(Family::A, 2)->num_positive_roots() == 3);
  CHECK(make_rs(Family::A, 5)->num_positive_roots() == 15);  // n(n+1)/2
  CHECK(make_rs(Family::B, 3)->num_positive_roots() == 9);   // n^2
  CHECK(make_rs(Family::C, 4)->num_positive_roots() == 16);
  CHECK(make_rs(Family::D, 4)->num_positive_roots() == 12);  // n(n-1)
  CHECK(make_rs(Family::D, 5)->num_positive_roots() == 20);
}

TEST_CASE("A2 positive roots are the closure of the simple ones") {
  auto rs = make_rs(Family::A, 2);
  REQUIRE(rs->positive_roots().size() == 3);
  CHECK(rs->positive_roots()[0].rb == std::vector<long long>{0, 1});
  CHECK(rs->positive_roots()[1].rb == std::vector<long long>{1, 0});
  CHECK(rs->positive_roots()[2].rb == std::vector<long long>{1, 1});
}

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(CartanType::classical(Family::D, 2), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::classical(Family::B, 1), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::classical(Family::C, 0), InvalidCartanType);
  CHECK_NOTHROW(CartanType::classical(Family::A, 1));
  CHECK_NOTHROW(CartanType::classical(Family::D, 3));
}

TEST_CASE("Bourbaki matrices carry the short/long data") {
  auto b3 = make_rs(Family::B, 3);
  CHECK(b3->cartan(2, 3) == -2);
  CHECK(b3->cartan(3, 2) == -1);
  auto c3 = make_rs(Family::C, 3);
  CHECK(c3->cartan(2, 3) == -1);
  CHECK(c3->cartan(3, 2) == -2);
  auto d4 = make_rs(Family::D, 4);
  CHECK(d4->cartan(2, 4) == -1);
  CHECK(d4->cartan(3, 4) == 0);
}

TEST_CASE("generic Cartan matrices") {
  // B2 presented as a generic matrix closes to 4 positive roots.
  RootSystem rs(CartanType::generic({{2, -2}, {-1, 2}}));
  CHECK(rs.num_positive_roots() == 4);

  CHECK_THROWS_AS(CartanType::generic({{2, -2}, {-2, 2}}),
                  InvalidCartanType);  // affine: symmetrization is singular
  CHECK_THROWS_AS(CartanType::generic({{2, -1}, {0, 2}}),
                  InvalidCartanType);  // zero pattern not symmetric
  CHECK_THROWS_AS(CartanType::generic({{2, 1}, {1, 2}}),
                  InvalidCartanType);  // positive off-diagonal
  CHECK_THROWS_AS(CartanType::generic({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                  InvalidCartanType);  // affine A_2 loop
}

TEST_CASE("pairing") {
  auto rs = make_rs(Family::A, 2);
  // <fw_i, alpha_j_check> = delta_ij
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Coroot c{std::vector<long long>(2, 0)};
      c.cb[static_cast<size_t>(j - 1)] = 1;
      CHECK(rs->pairing(rs->fundamental_weight(i), c) == (i == j ? 1 : 0));
    }
  const Root highest{{1, 1}};
  CHECK(rs->pairing(rs->rho(), rs->coroot_of(highest)) == 2);
  const Weight w = rs->weight_from({0, -2}) + rs->rho();
  CHECK(rs->pairing(w, rs->coroot_of(Root{{1, 0}})) == 1);

  Coroot wrong{std::vector<long long>(3, 0)};
  CHECK_THROWS_AS(rs->pairing(rs->rho(), wrong), DimensionMismatch);
}

TEST_CASE("root_as_weight in A2") {
  auto rs = make_rs(Family::A, 2);
  CHECK(rs->root_as_weight(Root{{1, 0}}) == rs->weight_from({2, -1}));
  CHECK(rs->root_as_weight(Root{{0, 1}}) == rs->weight_from({-1, 2}));
  CHECK(rs->root_as_weight(Root{{1, 1}}) == rs->weight_from({1, 1}));
}

TEST_CASE("closure under simple reflections") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = make_rs(f, n);
    for (const auto& alpha : rs->positive_roots())
      for (int i = 1; i <= n; ++i)
        CHECK(rs->is_root(rs->reflect_root(i, alpha)));
  }
}

TEST_CASE("rho pairs to one with every simple coroot and positively with all") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = make_rs(f, n);
    CHECK(std::all_of(rs->rho().fw.begin(), rs->rho().fw.end(),
                      [](long long c) { return c == 1; }));
    for (const auto& c : rs->positive_coroots())
      CHECK(rs->pairing(rs->rho(), c) >= 1);
  }
}

TEST_CASE("epsilon coordinates") {
  SUBCASE("rho in A2 is (1,0,-1)") {
    auto rs = make_rs(Family::A, 2);
    auto eps = rs->weight_to_epsilon(rs->rho());
    REQUIRE(eps.size() == 3);
    CHECK(eps[0] == Rational(1, 1));
    CHECK(eps[1] == Rational(0, 1));
    CHECK(eps[2] == Rational(-1, 1));
  }
  SUBCASE("fw_p in A_n per the closed formula") {
    auto rs = make_rs(Family::A, 4);
    const int n = 4, p = 2;
    auto eps = rs->weight_to_epsilon(rs->fundamental_weight(p));
    for (int j = 1; j <= n + 1; ++j)
      CHECK(eps[static_cast<size_t>(j - 1)] ==
            Rational(j <= p ? n + 1 - p : -p, n + 1));
  }
  SUBCASE("spin weight of B3 is (1/2,1/2,1/2)") {
    auto rs = make_rs(Family::B, 3);
    auto eps = rs->weight_to_epsilon(rs->fundamental_weight(3));
    for (const auto& e : eps) CHECK(e == Rational(1, 2));
  }
  SUBCASE("generic family has no epsilon display") {
    RootSystem rs(CartanType::generic({{2, -1}, {-1, 2}}));
    CHECK_THROWS_AS(rs.weight_to_epsilon(rs.rho()), UnsupportedFamily);
  }
}

TEST_CASE("epsilon round trip") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 4},
                      {Family::D, 4}}) {
    auto rs = make_rs(f, n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long long> fw(static_cast<size_t>(n));
      for (auto& c : fw) c = testsup::rand_int(-6, 6);
      const Weight w = rs->weight_from(fw);
      CHECK(rs->epsilon_to_weight(rs->weight_to_epsilon(w)) == w);
    }
  }
}

TEST_CASE("weight arithmetic") {
  auto rs = make_rs(Family::A, 2);
  const Weight a = rs->weight_from({1, -2});
  const Weight b = rs->weight_from({0, 5});
  CHECK(a + b == rs->weight_from({1, 3}));
  CHECK(a - b == rs->weight_from({1, -7}));
  CHECK(-3 * a == rs->weight_from({-3, 6}));
  CHECK_THROWS_AS(a + Weight({1, 2, 3}), DimensionMismatch);
}
