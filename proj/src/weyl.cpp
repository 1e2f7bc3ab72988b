#include "flagradon/weyl.hpp"

#include <algorithm>
#include <map>

namespace flagradon {

WeylElement identity_element(const RootSystem& rs) {
  return WeylElement{{}, rs.rho(), 0};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return WeylElement{{i}, rs.reflect_weight(i, rs.rho()), 1};
}

Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = rs.reflect_weight(*it, out);
  return out;
}

Root act_on_root(const RootSystem& rs, const WeylElement& w, const Root& r) {
  Root out = r;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = rs.reflect_root(*it, out);
  return out;
}

Weight dot_action(const RootSystem& rs, const WeylElement& w,
                  const Weight& lambda) {
  return act(rs, w, lambda + rs.rho()) - rs.rho();
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (const auto& alpha : rs.positive_roots()) {
    Root image = act_on_root(rs, w, alpha);
    if (std::all_of(image.rb.begin(), image.rb.end(),
                    [](long long x) { return x <= 0; }))
      ++count;
  }
  return count;
}

std::optional<DominanceResult> dominance_sort(const RootSystem& rs,
                                              const Weight& xi,
                                              const NodeSet& J) {
  Weight cur = xi;
  std::vector<int> word;  // y = s_{word[0]} ... s_{word[last]} applied to xi
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J) {
      if (cur[i - 1] < 0) {
        cur = rs.reflect_weight(i, cur);
        word.insert(word.begin(), i);
        moved = true;
        break;
      }
    }
  }
  // cur is weakly J-dominant; a zero simple coordinate on J means the full
  // Delta_J orbit is singular.
  for (int i : J)
    if (cur[i - 1] == 0) return std::nullopt;
  WeylElement y{std::move(word), Weight{}, 0};
  y.len = static_cast<int>(y.word.size());
  y.key = act(rs, y, rs.rho());
  return DominanceResult{std::move(y), std::move(cur)};
}

WeylElement element_from_key(const RootSystem& rs, const Weight& key) {
  // Sort the key back to rho; the sorting word is a reduced word of w^{-1}
  // read in reverse.
  auto sorted = dominance_sort(rs, key, full_node_set(rs.rank()));
  if (!sorted || sorted->sorted != rs.rho())
    throw Error("element_from_key: weight is not in the orbit of rho");
  WeylElement w;
  w.word.assign(sorted->y.word.rbegin(), sorted->y.word.rend());
  w.len = static_cast<int>(w.word.size());
  w.key = key;
  return w;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a,
                     const WeylElement& b) {
  return element_from_key(rs, act(rs, a, b.key));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  WeylElement v;
  v.word.assign(w.word.rbegin(), w.word.rend());
  v.len = w.len;
  v.key = act(rs, v, rs.rho());
  return v;
}

WeylElement longest_element(const RootSystem& rs, const NodeSet& I) {
  // w_I is the unique element sorting the I-antidominant regular weight
  // -sum_{i in I} fw_i into the dominant chamber.
  Weight xi = rs.zero_weight();
  for (int i : I) xi.fw[static_cast<size_t>(i - 1)] = -1;
  auto sorted = dominance_sort(rs, xi, I);
  if (!sorted) throw Error("longest_element: unexpected singular sort");
  return std::move(sorted->y);
}

namespace {

std::vector<std::vector<WeylElement>> bfs_parabolic(
    const RootSystem& rs, const NodeSet& I, const Budget& budget) {
  std::vector<std::vector<WeylElement>> strata;
  strata.push_back({identity_element(rs)});
  long long total = 1;
  while (true) {
    const auto& frontier = strata.back();
    std::map<Weight, WeylElement> next;
    for (const auto& w : frontier) {
      for (int i : I) {
        // l(s_i w) = l(w) + 1 exactly when <w(rho), alpha_i_check> > 0.
        if (w.key[i - 1] <= 0) continue;
        Weight key = rs.reflect_weight(i, w.key);
        if (next.count(key)) continue;
        WeylElement nw;
        nw.word.reserve(w.word.size() + 1);
        nw.word.push_back(i);
        nw.word.insert(nw.word.end(), w.word.begin(), w.word.end());
        nw.len = w.len + 1;
        nw.key = key;
        next.emplace(std::move(key), std::move(nw));
      }
    }
    if (next.empty()) break;
    total += static_cast<long long>(next.size());
    if (total > budget.max_elements)
      throw BudgetExceeded("Weyl enumeration exceeded budget", total);
    std::vector<WeylElement> stratum;
    stratum.reserve(next.size());
    for (auto& [k, w] : next) stratum.push_back(std::move(w));
    strata.push_back(std::move(stratum));
  }
  return strata;
}

}  // namespace

std::vector<std::vector<WeylElement>> enumerate_parabolic(
    const RootSystem& rs, const NodeSet& I, const Budget& budget) {
  return bfs_parabolic(rs, I, budget);
}

std::vector<std::vector<WeylElement>> min_coset_reps(const RootSystem& rs,
                                                     const NodeSet& K,
                                                     const NodeSet& I,
                                                     const Budget& budget) {
  if (!node_subset(K, I))
    throw InvalidSpec("min_coset_reps requires K to be a subset of I");
  auto strata = bfs_parabolic(rs, I, budget);
  std::vector<std::vector<WeylElement>> reps;
  for (auto& stratum : strata) {
    std::vector<WeylElement> keep;
    for (auto& x : stratum) {
      // x is minimal in W_K x iff x^{-1}(alpha_i) > 0 for all i in K,
      // i.e. iff the key is positive on K.
      bool minimal = true;
      for (int i : K) {
        if (x.key[i - 1] < 0) {
          minimal = false;
          break;
        }
      }
      if (minimal) keep.push_back(std::move(x));
    }
    reps.push_back(std::move(keep));
  }
  while (!reps.empty() && reps.back().empty()) reps.pop_back();
  return reps;
}

}  // namespace flagradon
