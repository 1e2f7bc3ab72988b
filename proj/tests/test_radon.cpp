#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flagradon/radon.hpp"
#include "test_support.hpp"

using namespace flagradon;
using testsup::flatten;
using testsup::make_rs;

namespace {

Transform make_transform(std::shared_ptr<const RootSystem> rs, NodeSet I,
                         NodeSet J) {
  return Transform(make_correspondence(std::move(rs), std::move(I), std::move(J)));
}

// Maximal-parabolic shorthand: I = I_0 \ {p}, J = I_0 \ {q}.
Transform maximal(std::shared_ptr<const RootSystem> rs, int p, int q) {
  const int n = rs->rank();
  return make_transform(std::move(rs),
                        node_difference(full_node_set(n), {p}),
                        node_difference(full_node_set(n), {q}));
}

}  // namespace

TEST_CASE("gamma strata") {
  SUBCASE("A2, I={1}, J={2}") {
    auto rs = make_rs(Family::A, 2);
    auto t = make_transform(rs, {1}, {2});
    REQUIRE(t.gamma_strata().size() == 2);
    CHECK(t.gamma_strata()[0].size() == 1);
    CHECK(t.gamma_strata()[1].size() == 1);
    CHECK(t.gamma_strata()[0][0].is_identity());
  }
  SUBCASE("I inside J leaves only the identity") {
    auto rs = make_rs(Family::A, 3);
    auto t = make_transform(rs, {1}, {1, 2});
    REQUIRE(t.gamma_strata().size() == 1);
    CHECK(t.gamma_strata()[0].size() == 1);
  }
  SUBCASE("A4 maximal pair p=3, q=1: index and depth") {
    auto rs = make_rs(Family::A, 4);
    auto t = maximal(rs, 3, 1);
    std::size_t count = 0;
    for (const auto& s : t.gamma_strata()) count += s.size();
    // |W_I| / |W_{I cap J}| computed by the brute-force coset oracle
    const auto brute = testsup::brute_min_coset_reps(
        *rs, node_intersection(t.spec().I, t.spec().J), t.spec().I);
    CHECK(count == brute.size());
    CHECK(count == 3);
    // top stratum index = #(Delta_I+ \ Delta_J)
    CHECK(t.gamma_strata().size() - 1 == 2);
  }
}

TEST_CASE("gamma_lambda on the A2 micro-cases") {
  auto rs = make_rs(Family::A, 2);
  auto t = make_transform(rs, {1}, {2});
  SUBCASE("lambda = -2 fw_2: only the identity survives") {
    const auto entries = t.gamma_lambda(rs->weight_from({0, -2}));
    REQUIRE(entries.size() == 2);
    CHECK(!entries[0].singular);
    CHECK(entries[0].x.is_identity());
    CHECK(*entries[0].m == 0);
    CHECK(*entries[0].mu == rs->weight_from({-1, 0}));
    CHECK(entries[1].singular);
  }
  SUBCASE("lambda = -3 fw_2: both survive") {
    const auto entries = t.gamma_lambda(rs->weight_from({0, -3}));
    REQUIRE(entries.size() == 2);
    CHECK(!entries[0].singular);
    CHECK(*entries[0].m == 0);
    CHECK(*entries[0].mu == rs->weight_from({-2, 1}));
    CHECK(*entries[0].degree == 0);
    CHECK(!entries[1].singular);
    CHECK(entries[1].len_x == 1);
    CHECK(*entries[1].m == 0);
    CHECK(*entries[1].mu == rs->weight_from({-3, 0}));
    CHECK(*entries[1].degree == -1);
  }
  SUBCASE("non-dominant lambda is rejected") {
    CHECK_THROWS_AS(t.gamma_lambda(rs->weight_from({-1, 0})), NotDominant);
  }
}

TEST_CASE("a vanishing band weight kills every entry") {
  auto rs = make_rs(Family::A, 4);
  auto t = maximal(rs, 3, 1);
  for (const auto& e : t.gamma_lambda((-2) * rs->fundamental_weight(3)))
    CHECK(e.singular);
}

TEST_CASE("xi_lambda") {
  auto rs = make_rs(Family::A, 2);
  auto t = make_transform(rs, {1}, {2});
  SUBCASE("two elements for lambda = -3 fw_2") {
    const auto xi = t.xi_lambda(rs->weight_from({0, -3}));
    REQUIRE(xi.size() == 2);
    CHECK(xi[0].len == 1);
    CHECK(xi[0] == simple_reflection(*rs, 2));
    CHECK(xi[1].len == 2);
  }
  SUBCASE("empty in the vanishing band") {
    auto rs4 = make_rs(Family::A, 4);
    auto t4 = maximal(rs4, 3, 1);
    CHECK(t4.xi_lambda((-2) * rs4->fundamental_weight(3)).empty());
  }
}

TEST_CASE("xi equals the sorted survivors with additive lengths") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
    auto rs = make_rs(f, n);
    for (int trial = 0; trial < 15; ++trial) {
      const NodeSet I = testsup::random_subset(n);
      const NodeSet J = testsup::random_subset(n);
      if (I == J) continue;
      Transform t(make_correspondence(rs, I, J));
      const Weight lam = testsup::random_dominant(*rs, t.spec().I);
      std::set<Weight> from_gamma;
      for (const auto& e : t.gamma_lambda(lam)) {
        if (e.singular) continue;
        const auto yx = multiply(*rs, *e.y, e.x);
        CHECK(yx.len == e.y->len + e.x.len);
        from_gamma.insert(yx.key);
      }
      std::set<Weight> from_xi;
      for (const auto& w : t.xi_lambda(lam)) from_xi.insert(w.key);
      CHECK(from_gamma == from_xi);
    }
  }
}

TEST_CASE("resolution terms") {
  auto rs = make_rs(Family::A, 2);
  auto t = make_transform(rs, {1}, {2});
  const Weight lam = rs->weight_from({0, -3});
  const auto terms = t.bgg_terms(lam);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].first == 0);
  REQUIRE(terms[0].second.size() == 1);
  CHECK(terms[0].second[0] == lam);  // stratum zero is always {lambda}
  REQUIRE(terms[1].second.size() == 1);
  CHECK(terms[1].second[0] == rs->weight_from({-2, -2}));
}

TEST_CASE("euler class") {
  SUBCASE("vanishing band gives the empty class") {
    auto rs = make_rs(Family::A, 4);
    auto t = maximal(rs, 3, 1);
    CHECK(t.euler_class((-2) * rs->fundamental_weight(3)).empty());
  }
  SUBCASE("single survivor at a = q_*") {
    auto rs = make_rs(Family::A, 4);
    auto t = maximal(rs, 3, 1);
    const auto cls = t.euler_class((-4) * rs->fundamental_weight(3));
    REQUIRE(cls.size() == 1);
    const auto& [w, c] = *cls.terms().begin();
    CHECK(w == (-2) * rs->fundamental_weight(1));
    CHECK(c == 1);
  }
  SUBCASE("two-term class in the A2 micro-case") {
    auto rs = make_rs(Family::A, 2);
    auto t = make_transform(rs, {1}, {2});
    const auto cls = t.euler_class(rs->weight_from({0, -3}));
    GrothendieckClass want;
    want.add(rs->weight_from({-2, 1}), 1);
    want.add(rs->weight_from({-3, 0}), -1);
    CHECK(cls == want);
  }
}

TEST_CASE("classify") {
  auto rs = make_rs(Family::A, 4);
  auto t = maximal(rs, 3, 1);
  SUBCASE("vanishing band") {
    const auto rep = t.classify((-2) * rs->fundamental_weight(3));
    CHECK(rep.vanishes);
    CHECK(!rep.single_term);
    CHECK(rep.euler.empty());
    CHECK(rep.concentrated_deg0_sufficient);  // vacuous
  }
  SUBCASE("single term at a = q with the l_pq shift") {
    const auto rep = t.classify((-1) * rs->fundamental_weight(3));
    REQUIRE(rep.single_term);
    CHECK(rep.single_term->weight == (-3) * rs->fundamental_weight(1));
    CHECK(rep.single_term->shift == 2);  // (p-q)(p_*-q)
    CHECK(!rep.vanishes);
  }
  SUBCASE("C3 p=2 q=1 a=4 lands without shift") {
    auto c3 = make_rs(Family::C, 3);
    auto tc = maximal(c3, 2, 1);
    const auto rep = tc.classify((-4) * c3->fundamental_weight(2));
    REQUIRE(rep.single_term);
    CHECK(rep.single_term->weight == (-4) * c3->fundamental_weight(1));
    CHECK(rep.single_term->shift == 0);
  }
  SUBCASE("epi candidate appears for antidominant twists") {
    auto a2 = make_rs(Family::A, 2);
    auto ta = make_transform(a2, {1}, {2});
    const auto rep = ta.classify(a2->weight_from({0, -3}));
    REQUIRE(rep.epi_candidate);
    // (w_J w_{I cap J}) dot lambda = s_2 dot lambda
    CHECK(*rep.epi_candidate == a2->weight_from({-2, 1}));
  }
}

TEST_CASE("entry identities on random correspondences") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = make_rs(f, n);
    for (int trial = 0; trial < 12; ++trial) {
      const NodeSet I = testsup::random_subset(n);
      const NodeSet J = testsup::random_subset(n);
      if (I == J) continue;
      Transform t(make_correspondence(rs, I, J));
      const Weight lam = testsup::random_dominant(*rs, t.spec().I);
      const Weight shifted = lam + rs->rho();
      const auto idxInotJ = [&] {
        auto di = delta_plus_indices(*rs, t.spec().I);
        auto dj = delta_plus_indices(*rs, t.spec().J);
        std::vector<std::size_t> out;
        std::set_difference(di.begin(), di.end(), dj.begin(), dj.end(),
                            std::back_inserter(out));
        return out;
      }();
      const auto idxJnotI = [&] {
        auto di = delta_plus_indices(*rs, t.spec().I);
        auto dj = delta_plus_indices(*rs, t.spec().J);
        std::vector<std::size_t> out;
        std::set_difference(dj.begin(), dj.end(), di.begin(), di.end(),
                            std::back_inserter(out));
        return out;
      }();
      for (const auto& e : t.gamma_lambda(lam)) {
        if (e.singular) continue;
        const Weight xi = act(*rs, e.x, shifted);
        // l(x) counts the I-not-J inversions of x(lambda+rho)
        int neg = 0;
        for (std::size_t k : idxInotJ)
          if (rs->pairing(xi, rs->positive_coroots()[k]) < 0) ++neg;
        CHECK(neg == e.len_x);
        // m(x) counts the positive J-not-I pairings
        int pos = 0;
        for (std::size_t k : idxJnotI)
          if (rs->pairing(xi, rs->positive_coroots()[k]) > 0) ++pos;
        CHECK(pos == *e.m);
        // degree identity through the double coset length
        const auto yx = multiply(*rs, *e.y, e.x);
        CHECK(e.len_x - *e.m ==
              yx.len - static_cast<int>(idxJnotI.size()));
        CHECK(cone_membership(*rs, *e.mu, t.spec().J).in_cone);
      }
    }
  }
}

TEST_CASE("infinitesimal character test") {
  SUBCASE("zero weight never vanishes") {
    auto rs = make_rs(Family::A, 2);
    auto t = make_transform(rs, {1}, {2});
    CHECK(!t.infinitesimal_vanishing_test(rs->zero_weight()));
  }
  SUBCASE("A2 extremal weight") {
    auto rs = make_rs(Family::A, 2);
    auto t = make_transform(rs, {1}, {2});
    CHECK(!t.infinitesimal_vanishing_test(rs->weight_from({0, -2})));
  }
  SUBCASE("soundness: never true when some entry survives") {
    for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
      auto rs = make_rs(f, n);
      for (int trial = 0; trial < 60; ++trial) {
        const NodeSet I = testsup::random_subset(n);
        const NodeSet J = testsup::random_subset(n);
        if (I == J) continue;
        Transform t(make_correspondence(rs, I, J));
        const Weight lam = testsup::random_dominant(*rs, t.spec().I);
        if (!t.infinitesimal_vanishing_test(lam)) continue;
        for (const auto& e : t.gamma_lambda(lam)) CHECK(e.singular);
      }
    }
  }
}

TEST_CASE("extremal pairs") {
  SUBCASE("A2") {
    auto rs = make_rs(Family::A, 2);
    auto p = make_transform(rs, {1}, {2}).extremal_pair();
    REQUIRE(p);
    CHECK(p->lambda == rs->weight_from({0, -2}));
    CHECK(p->mu == rs->weight_from({-1, 0}));
    CHECK(p->free_directions.empty());
  }
  SUBCASE("C3 maximal p=1 q=2") {
    auto rs = make_rs(Family::C, 3);
    auto p = maximal(rs, 1, 2).extremal_pair();
    REQUIRE(p);
    CHECK(p->lambda == (-2) * rs->fundamental_weight(1));
    CHECK(p->mu == (-1) * rs->fundamental_weight(2));
  }
  SUBCASE("D5 spinor pair") {
    auto rs = make_rs(Family::D, 5);
    auto p = maximal(rs, 4, 5).extremal_pair();
    REQUIRE(p);
    CHECK(p->lambda == (-5) * rs->fundamental_weight(4));
    CHECK(p->mu == (-3) * rs->fundamental_weight(5));
  }
  SUBCASE("free directions outside the union") {
    auto rs = make_rs(Family::A, 3);
    auto p = make_transform(rs, {1}, {3}).extremal_pair();
    REQUIRE(p);
    CHECK(p->free_directions == NodeSet{2});
    CHECK(p->lambda[1] == 0);  // canonical representative
  }
}

TEST_CASE("extremal classification") {
  SUBCASE("A2 p=2 q=1 is an isomorphism") {
    auto rs = make_rs(Family::A, 2);
    const auto rep = maximal(rs, 2, 1).classify_extremal();
    CHECK(rep.concentrated);
    CHECK(rep.phi_epi);
    CHECK(rep.phi_iso);
    CHECK(rep.iso_violations.empty());
  }
  SUBCASE("A4 p=4 q=2 is epi but not iso") {
    auto rs = make_rs(Family::A, 4);
    const auto rep = maximal(rs, 4, 2).classify_extremal();
    CHECK(rep.concentrated);
    CHECK(rep.phi_epi);
    CHECK(!rep.phi_iso);
    CHECK(!rep.iso_violations.empty());
  }
  SUBCASE("C2 p=1 q=2 is concentrated but not epi") {
    auto rs = make_rs(Family::C, 2);
    const auto rep = maximal(rs, 1, 2).classify_extremal();
    CHECK(rep.concentrated);
    CHECK(!rep.phi_epi);
    CHECK(!rep.epi_violations.empty());
  }
}

TEST_CASE("extremal sign pattern and nesting") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 4}, {Family::C, 3},
                      {Family::D, 4}}) {
    auto rs = make_rs(f, n);
    for (int trial = 0; trial < 12; ++trial) {
      const NodeSet I = testsup::random_subset(n);
      const NodeSet J = testsup::random_subset(n);
      if (I == J) continue;
      Transform t(make_correspondence(rs, I, J));
      const auto pair = t.extremal_pair();
      REQUIRE(pair);
      const Weight shifted = pair->lambda + rs->rho();
      const auto di = delta_plus_indices(*rs, t.spec().I);
      for (std::size_t k : di)
        CHECK(rs->pairing(shifted, rs->positive_coroots()[k]) > 0);
      const auto rep = t.classify_extremal();
      if (rep.phi_iso) CHECK(rep.phi_epi);
      if (rep.phi_epi) CHECK(rep.concentrated);
    }
  }
}

TEST_CASE("infinitesimal test agrees with a full orbit scan") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}}) {
    auto rs = make_rs(f, n);
    const auto whole_group = flatten(enumerate_parabolic(*rs, full_node_set(n)));
    for (int trial = 0; trial < 40; ++trial) {
      const NodeSet I = testsup::random_subset(n);
      const NodeSet J = testsup::random_subset(n);
      if (I == J) continue;
      Transform t(make_correspondence(rs, I, J));
      const Weight lam = testsup::random_dominant(*rs, t.spec().I, 3);
      bool hit = false;
      for (const auto& w : whole_group) {
        const Weight image = dot_action(*rs, w, lam);
        if (cone_membership(*rs, image, t.spec().J).in_cone) {
          hit = true;
          break;
        }
      }
      CHECK(t.infinitesimal_vanishing_test(lam) == !hit);
    }
  }
}

// The engine is not limited to the classical families: any finite-type
// Cartan matrix goes through the same code paths, self-checks included.
TEST_CASE("generic route handles an exceptional system") {
  auto g2 = std::make_shared<const RootSystem>(
      CartanType::generic({{2, -1}, {-3, 2}}));
  CHECK(g2->num_positive_roots() == 6);
  CHECK(flatten(enumerate_parabolic(*g2, full_node_set(2))).size() == 12);

  Transform t(make_correspondence(g2, {1}, {2}));
  const auto pair = t.extremal_pair();
  REQUIRE(pair);
  const auto rep = t.classify_extremal();
  CHECK(rep.concentrated);
  for (long long a = 1; a <= 8; ++a) {
    // classify runs both Euler routes and the m(x) cross-check internally
    const auto r = t.classify(g2->weight_from({0, -a}));
    CHECK(r.entries.size() == 2);
  }

  auto f4 = std::make_shared<const RootSystem>(CartanType::generic(
      {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  CHECK(f4->num_positive_roots() == 24);
  Transform tf(make_correspondence(f4, {1, 2, 3}, {2, 3, 4}));
  const auto rf = tf.classify((-2) * f4->fundamental_weight(4));
  CHECK(!rf.entries.empty());
}

TEST_CASE("budget propagates") {
  auto rs = make_rs(Family::B, 3);
  // W_I is enumerated at construction; {2,3} spans a subsystem with 8
  // elements, over the tiny cap.
  CHECK_THROWS_AS(Transform(make_correspondence(rs, {2, 3}, {1}), Budget{5}),
                  BudgetExceeded);
  // W_J is only touched by the double-coset route.
  Transform t(make_correspondence(rs, {1}, {2, 3}), Budget{5});
  CHECK_THROWS_AS(t.euler_class(rs->weight_from({0, -1, -1})),
                  BudgetExceeded);
}
