#include "flagradon/radon.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace flagradon {

void GrothendieckClass::add(const Weight& w, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Transform::Transform(CorrespondenceSpec spec, Budget budget)
    : spec_(std::move(spec)), budget_(budget) {
  const RootSystem& rs = *spec_.rs;
  meet_ = node_intersection(spec_.I, spec_.J);
  gamma_ = gamma_ij(spec_);
  gamma_strata_ = min_coset_reps(rs, meet_, spec_.I, budget_);
  for (const auto& stratum : gamma_strata_)
    for (const auto& x : stratum) gamma_flat_.push_back(&x);

  idx_J_plus_ = delta_plus_indices(rs, spec_.J);
  const auto idx_I = delta_plus_indices(rs, spec_.I);
  std::set<std::size_t> in_I(idx_I.begin(), idx_I.end());
  for (std::size_t k : idx_J_plus_)
    if (!in_I.count(k)) idx_J_not_I_.push_back(k);
  std::set<std::size_t> in_J(idx_J_plus_.begin(), idx_J_plus_.end());
  for (std::size_t k : idx_I)
    if (!in_J.count(k)) idx_I_not_J_.push_back(k);
  idx_meet_plus_ = delta_plus_indices(rs, meet_);

  w_J_ = longest_element(rs, spec_.J);
  w_meet_ = longest_element(rs, meet_);
  if (w_J_.len != static_cast<int>(idx_J_plus_.size()) ||
      w_meet_.len != static_cast<int>(idx_meet_plus_.size()))
    throw ConsistencyError("longest element length != positive root count");
  if (static_cast<int>(gamma_strata_.size()) - 1 !=
      static_cast<int>(idx_I_not_J_.size()))
    throw ConsistencyError("Gamma depth != #(Delta_I+ \\ Delta_J)");
}

void Transform::require_dominant(const Weight& lambda) const {
  if (lambda.rank() != rs().rank())
    throw DimensionMismatch("weight rank mismatch");
  if (!cone_membership(rs(), lambda, spec_.I).in_cone)
    throw NotDominant("lambda is not I-dominant");
}

std::vector<GammaEntry> Transform::gamma_lambda(const Weight& lambda) const {
  require_dominant(lambda);
  const RootSystem& rsys = rs();
  const Weight shifted = lambda + rsys.rho();
  const auto& coroots = rsys.positive_coroots();

  std::vector<GammaEntry> entries;
  entries.reserve(gamma_flat_.size());
  for (const WeylElement* xp : gamma_flat_) {
    const WeylElement& x = *xp;
    const Weight xi = act(rsys, x, shifted);
    for (std::size_t k : idx_meet_plus_)
      if (rsys.pairing(xi, coroots[k]) <= 0)
        throw ConsistencyError("coset representative fails positivity on the meet");

    GammaEntry e;
    e.x = x;
    e.len_x = x.len;
    auto sorted = dominance_sort(rsys, xi, spec_.J);
    if (!sorted) {
      entries.push_back(std::move(e));
      continue;
    }
    const int m_lengths = w_J_.len - sorted->y.len - w_meet_.len;
    int m_count = 0;
    for (std::size_t k : idx_J_not_I_)
      if (rsys.pairing(xi, coroots[k]) > 0) ++m_count;
    if (m_lengths != m_count)
      throw ConsistencyError("the two m(x) computations disagree");

    e.singular = false;
    e.y = std::move(sorted->y);
    e.m = m_lengths;
    e.mu = sorted->sorted - rsys.rho();
    e.degree = m_lengths - x.len;
    entries.push_back(std::move(e));
  }
  return entries;
}

const std::vector<WeylElement>& Transform::wj_elements() const {
  std::call_once(wj_once_, [this] {
    auto strata = enumerate_parabolic(rs(), spec_.J, budget_);
    for (auto& stratum : strata)
      for (auto& w : stratum) wj_flat_.push_back(std::move(w));
  });
  return wj_flat_;
}

std::vector<WeylElement> Transform::xi_lambda(const Weight& lambda) const {
  require_dominant(lambda);
  const RootSystem& rsys = rs();
  const auto& wj = wj_elements();
  const long long pairs = static_cast<long long>(wj.size()) *
                          static_cast<long long>(gamma_flat_.size());
  if (pairs > budget_.max_elements)
    throw BudgetExceeded("double coset scan exceeds budget", pairs);

  const Weight shifted = lambda + rsys.rho();
  const auto& coroots = rsys.positive_coroots();
  std::vector<Weight> xi_x;
  xi_x.reserve(gamma_flat_.size());
  for (const WeylElement* x : gamma_flat_) xi_x.push_back(act(rsys, *x, shifted));

  std::vector<WeylElement> out;
  for (const auto& y : wj) {
    for (std::size_t xi_idx = 0; xi_idx < gamma_flat_.size(); ++xi_idx) {
      const Weight image = act(rsys, y, xi_x[xi_idx]);
      bool regular_dominant = true;
      for (std::size_t k : idx_J_plus_) {
        if (rsys.pairing(image, coroots[k]) <= 0) {
          regular_dominant = false;
          break;
        }
      }
      if (!regular_dominant) continue;
      const WeylElement& x = *gamma_flat_[xi_idx];
      WeylElement w;
      w.word.reserve(y.word.size() + x.word.size());
      w.word.insert(w.word.end(), y.word.begin(), y.word.end());
      w.word.insert(w.word.end(), x.word.begin(), x.word.end());
      w.key = act(rsys, y, x.key);
      w.len = inversion_count(rsys, w);
      if (w.len != y.len + x.len)
        throw ConsistencyError("length not additive across W_J x Gamma");
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    return std::tie(a.len, a.key) < std::tie(b.len, b.key);
  });
  return out;
}

std::vector<std::pair<int, std::vector<Weight>>> Transform::bgg_terms(
    const Weight& lambda) const {
  require_dominant(lambda);
  std::vector<std::pair<int, std::vector<Weight>>> out;
  for (std::size_t k = 0; k < gamma_strata_.size(); ++k) {
    std::vector<Weight> ws;
    for (const auto& x : gamma_strata_[k])
      ws.push_back(dot_action(rs(), x, lambda));
    out.emplace_back(static_cast<int>(k), std::move(ws));
  }
  return out;
}

GrothendieckClass Transform::euler_from_entries(
    const std::vector<GammaEntry>& entries, const Weight& lambda) const {
  GrothendieckClass by_gamma;
  std::set<Weight> survivors;
  for (const auto& e : entries) {
    if (e.singular) continue;
    const long long sign = ((e.len_x - *e.m) % 2 == 0) ? 1 : -1;
    by_gamma.add(*e.mu, sign);
    survivors.insert(act(rs(), *e.y, e.x.key));  // key of y_x x
  }

  const auto xi = xi_lambda(lambda);
  const long long outer =
      (idx_J_not_I_.size() % 2 == 0) ? 1 : -1;
  GrothendieckClass by_xi;
  std::set<Weight> xi_keys;
  for (const auto& w : xi) {
    const long long sign = (w.len % 2 == 0) ? outer : -outer;
    by_xi.add(dot_action(rs(), w, lambda), sign);
    xi_keys.insert(w.key);
  }
  if (survivors != xi_keys)
    throw ConsistencyError("{y_x x} and the double coset scan disagree");
  if (!(by_gamma == by_xi))
    throw ConsistencyError("Euler class differs between the two routes");
  return by_gamma;
}

GrothendieckClass Transform::euler_class(const Weight& lambda) const {
  return euler_from_entries(gamma_lambda(lambda), lambda);
}

RadonReport Transform::classify(const Weight& lambda) const {
  RadonReport rep;
  rep.lambda = lambda;
  rep.entries = gamma_lambda(lambda);
  rep.euler = euler_from_entries(rep.entries, lambda);

  const GammaEntry* only = nullptr;
  int surviving = 0;
  bool concentrated = true;
  for (const auto& e : rep.entries) {
    if (e.singular) continue;
    ++surviving;
    only = &e;
    if (e.len_x < *e.m) concentrated = false;
  }
  rep.vanishes = (surviving == 0);
  if (surviving == 1)
    rep.single_term = SingleTerm{*only->mu, *only->degree};
  rep.concentrated_deg0_sufficient = concentrated;

  const auto& coroots = rs().positive_coroots();
  const Weight shifted = lambda + rs().rho();
  bool anti = true;
  for (std::size_t k : idx_J_not_I_)
    if (rs().pairing(shifted, coroots[k]) >= 0) {
      anti = false;
      break;
    }
  if (anti) {
    rep.epi_candidate =
        dot_action(rs(), multiply(rs(), w_J_, w_meet_), lambda);
    rep.epi_sufficient = true;
    for (const auto& e : rep.entries) {
      if (e.singular || e.x.is_identity()) continue;
      if (e.len_x <= *e.m) {
        rep.epi_sufficient = false;
        break;
      }
    }
  }
  return rep;
}

bool Transform::infinitesimal_vanishing_test(const Weight& lambda) const {
  const RootSystem& rsys = rs();
  Weight nu = lambda + rsys.rho();
  // Weak sort to the dominant chamber first; zero coordinates stay put.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= rsys.rank(); ++i) {
      if (nu[i - 1] < 0) {
        nu = rsys.reflect_weight(i, nu);
        moved = true;
        break;
      }
    }
  }
  auto positive_on_J = [this](const Weight& w) {
    for (int j : spec_.J)
      if (w[j - 1] <= 0) return false;
    return true;
  };
  if (positive_on_J(nu)) return false;

  // nu has a zero coordinate blocking J; scan its (smaller, singular) orbit.
  std::set<Weight> seen{nu};
  std::queue<Weight> work;
  work.push(nu);
  while (!work.empty()) {
    Weight w = std::move(work.front());
    work.pop();
    for (int i = 1; i <= rsys.rank(); ++i) {
      Weight next = rsys.reflect_weight(i, w);
      if (seen.count(next)) continue;
      if (positive_on_J(next)) return false;
      if (static_cast<long long>(seen.size()) >= budget_.max_elements)
        throw BudgetExceeded("orbit scan exceeded budget",
                             static_cast<long long>(seen.size()));
      seen.insert(next);
      work.push(std::move(next));
    }
  }
  return true;
}

std::optional<ExtremalPair> Transform::extremal_pair() const {
  const RootSystem& rsys = rs();
  Weight lambda = rsys.zero_weight();
  for (int i : node_difference(spec_.J, spec_.I))
    lambda.fw[static_cast<size_t>(i - 1)] = -gamma_[i - 1];
  // On I the coordinates stay zero; on the meet this forces
  // gamma(alpha_i_check) = 0 or the system has no solution.
  for (int i : meet_)
    if (gamma_[i - 1] != 0) return std::nullopt;
  Weight mu = lambda + gamma_;
  for (int i : spec_.J)
    if (mu[i - 1] != 0) return std::nullopt;
  NodeSet free = node_difference(full_node_set(rsys.rank()),
                                 node_union(spec_.I, spec_.J));
  return ExtremalPair{std::move(lambda), std::move(mu), std::move(free)};
}

ExtremalReport Transform::classify_extremal() const {
  auto pair = extremal_pair();
  if (!pair)
    throw NoExtremalPair("the correspondence admits no extremal line-bundle pair");

  const RootSystem& rsys = rs();
  ExtremalReport rep;
  rep.lambda = pair->lambda;
  rep.mu = pair->mu;
  rep.free_directions = pair->free_directions;
  rep.entries = gamma_lambda(pair->lambda);

  // Identity facts for an extremal weight.
  const auto& coroots = rsys.positive_coroots();
  const Weight shifted = pair->lambda + rsys.rho();
  for (std::size_t k : idx_J_not_I_)
    if (rsys.pairing(shifted, coroots[k]) >= 0)
      throw ConsistencyError("extremal weight not antidominant off I");
  for (std::size_t k : delta_plus_indices(rsys, spec_.I))
    if (rsys.pairing(shifted, coroots[k]) <= 0)
      throw ConsistencyError("extremal weight not dominant regular on I");
  if (dot_action(rsys, multiply(rsys, w_J_, w_meet_), pair->lambda) != pair->mu)
    throw ConsistencyError("extremal target weight mismatch");
  const GammaEntry& first = rep.entries.front();
  if (!first.x.is_identity() || first.singular || *first.m != 0)
    throw ConsistencyError("identity entry of an extremal weight must survive at m=0");

  rep.concentrated = true;
  rep.phi_iso = true;
  bool strict = true;
  for (const auto& e : rep.entries) {
    if (e.singular) continue;
    if (e.len_x < *e.m) {
      rep.concentrated = false;
      rep.concentration_violations.push_back(e);
    }
    if (e.x.is_identity()) continue;
    rep.phi_iso = false;
    rep.iso_violations.push_back(e);
    if (e.len_x <= *e.m) {
      strict = false;
      rep.epi_violations.push_back(e);
    }
  }
  rep.phi_epi = rep.concentrated && strict;
  if (rep.phi_iso && !rep.phi_epi)
    throw ConsistencyError("classification nesting violated");

  // Lambda-free restatement of the concentration test, evaluated on
  // x(rho) - gamma; must agree with the direct route.
  bool cond2 = true;
  std::size_t entry_idx = 0;
  for (const WeylElement* xp : gamma_flat_) {
    const Weight probe = xp->key - gamma_;
    bool regular = true;
    int positive = 0;
    for (std::size_t k : idx_J_not_I_) {
      const long long v = rsys.pairing(probe, coroots[k]);
      if (v == 0) regular = false;
      if (v > 0) ++positive;
    }
    if (regular != !rep.entries[entry_idx].singular)
      throw ConsistencyError("regularity differs between the two extremal routes");
    if (regular && positive > xp->len) cond2 = false;
    ++entry_idx;
  }
  if (cond2 != rep.concentrated)
    throw ConsistencyError("concentration differs between the two extremal routes");
  return rep;
}

}  // namespace flagradon
