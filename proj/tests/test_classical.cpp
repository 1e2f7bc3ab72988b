#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagradon/classical.hpp"
#include "test_support.hpp"

using namespace flagradon;

TEST_CASE("table verdicts for the worked cases") {
  SUBCASE("A4 p=3 q=1: the vanishing band and both single rows") {
    CHECK(oracle_radon({Family::A, 4, 3, 1, 2}).kind == VerdictKind::Vanishes);
    CHECK(oracle_radon({Family::A, 4, 3, 1, 3}).kind == VerdictKind::Vanishes);
    const auto at_q = oracle_radon({Family::A, 4, 3, 1, 1});
    CHECK(at_q.kind == VerdictKind::SingleTerm);
    CHECK(at_q.b == 3);
    CHECK(at_q.c == 2);
    const auto at_qstar = oracle_radon({Family::A, 4, 3, 1, 4});
    CHECK(at_qstar.kind == VerdictKind::SingleTerm);
    CHECK(at_qstar.b == 2);
    CHECK(at_qstar.c == 0);
    CHECK(oracle_radon({Family::A, 4, 3, 1, 5}).kind ==
          VerdictKind::NoStatement);
  }
  SUBCASE("C3 p=2 q=1 a=1") {
    const auto v = oracle_radon({Family::C, 3, 2, 1, 1});
    CHECK(v.kind == VerdictKind::SingleTerm);
    CHECK(v.b == 2);
    CHECK(v.c == 2);
  }
  SUBCASE("B4 p=n q=1 a=3 sits in the spin band") {
    CHECK(oracle_radon({Family::B, 4, 4, 1, 3}).kind == VerdictKind::Vanishes);
  }
  SUBCASE("D parity split at the two spin nodes") {
    CHECK(oracle_radon({Family::D, 6, 5, 6, 5}).kind == VerdictKind::Vanishes);
    CHECK(oracle_radon({Family::D, 6, 5, 6, 6}).kind ==
          VerdictKind::NoStatement);
    const auto v = oracle_radon({Family::D, 5, 4, 5, 5});
    CHECK(v.kind == VerdictKind::SingleTerm);
    CHECK(v.b == 3);
    CHECK(v.c == 0);
  }
}

TEST_CASE("extremal table verdicts") {
  SUBCASE("A4 p=4 q=2") {
    const auto v = oracle_extremal(Family::A, 4, 4, 2);
    CHECK(v.r == 3);
    CHECK(v.s == 1);
    CHECK(v.epi);
    CHECK(!v.iso);
  }
  SUBCASE("D5 spinor pair, n odd") {
    const auto v = oracle_extremal(Family::D, 5, 4, 5);
    CHECK(v.r == 5);
    CHECK(v.s == 3);
    CHECK(v.epi);
    CHECK(v.iso);
  }
  SUBCASE("C2 p=1 q=2") {
    const auto v = oracle_extremal(Family::C, 2, 1, 2);
    CHECK(v.r == 2);
    CHECK(v.s == 1);
    CHECK(!v.epi);
    CHECK(!v.iso);
  }
  SUBCASE("A2 p=2 q=1 is an isomorphism") {
    CHECK(oracle_extremal(Family::A, 2, 2, 1).iso);
  }
  SUBCASE("D epi boundary at rank seven") {
    // q < p <= n-2 with 2n-2p-q-1 < 0: the comparison map is not onto.
    const auto v = oracle_extremal(Family::D, 7, 5, 4);
    CHECK(v.r == 4);
    CHECK(v.s == 4);
    CHECK(!v.epi);
    CHECK(!v.iso);
    CHECK(oracle_extremal(Family::D, 7, 4, 3).epi);  // 2n-2p-q-1 = 2
  }
}

TEST_CASE("engine confirms the D epi boundary cases") {
  for (auto [n, p, q] : {std::tuple{7, 5, 4}, {8, 6, 4}, {8, 6, 5}}) {
    auto rs = testsup::make_rs(Family::D, n);
    Transform t(make_correspondence(rs,
                                    node_difference(full_node_set(n), {p}),
                                    node_difference(full_node_set(n), {q})));
    const auto rep = t.classify_extremal();
    const auto v = oracle_extremal(Family::D, n, p, q);
    CHECK(rep.concentrated);
    CHECK(rep.phi_epi == v.epi);
    CHECK(!rep.phi_epi);
    CHECK(rep.phi_iso == v.iso);
    CHECK(!rep.epi_violations.empty());
  }
}

TEST_CASE("A verdicts respect the diagram flip") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        if (p == q) continue;
        for (long long a = 1; a <= 2 * n + 2; ++a) {
          const auto v = oracle_radon({Family::A, n, p, q, a});
          const auto w =
              oracle_radon({Family::A, n, n + 1 - p, n + 1 - q, a});
          CHECK(v.kind == w.kind);
          CHECK(v.b == w.b);
          CHECK(v.c == w.c);
        }
        const auto ve = oracle_extremal(Family::A, n, p, q);
        const auto we = oracle_extremal(Family::A, n, n + 1 - p, n + 1 - q);
        CHECK(ve.r == we.r);
        CHECK(ve.s == we.s);
        CHECK(ve.iso == we.iso);
      }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate({Family::A, 3, 2, 2, 1}), InvalidSpec);
  CHECK_THROWS_AS(validate({Family::D, 2, 1, 2, 1}), InvalidSpec);
  CHECK_THROWS_AS(validate({Family::B, 3, 0, 2, 1}), InvalidSpec);
  CHECK_THROWS_AS(validate({Family::C, 3, 1, 2, 0}), InvalidSpec);
  CHECK_NOTHROW(validate({Family::B, 2, 2, 1, 7}));
}

TEST_CASE("small sweeps are clean") {
  CHECK(sweep_compare(Family::A, 4, 10).empty());
  CHECK(sweep_compare(Family::B, 3, 8).empty());
  CHECK(sweep_compare(Family::C, 3, 9).empty());
  CHECK(sweep_compare(Family::D, 4, 10).empty());
}
