#pragma once

// Weyl group elements and actions.
//
// An element is carried as a reduced word together with its canonical key
// w(rho); the key alone determines the element, so equality and hashing go
// through it. Lengths are reduced-word lengths; inversion_count provides the
// independent root-counting computation of the same number.

#include <optional>
#include <vector>

#include "flagradon/root_system.hpp"

namespace flagradon {

struct WeylElement {
  std::vector<int> word;  // reduced word of 1-based simple reflection labels
  Weight key;             // image of rho
  int len = 0;

  bool is_identity() const { return len == 0; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.key == b.key;
  }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) {
    return a.key <=> b.key;
  }
};

struct Budget {
  long long max_elements = 10'000'000;
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);

// Linear action; the word is applied right to left.
Weight act(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
Root act_on_root(const RootSystem& rs, const WeylElement& w, const Root& r);

// Shifted affine action w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElement& w,
                  const Weight& lambda);

// #{alpha in Delta+ : w(alpha) < 0}; equals len for every valid element.
int inversion_count(const RootSystem& rs, const WeylElement& w);

// Rebuild the canonical reduced-word form from a key.
WeylElement element_from_key(const RootSystem& rs, const Weight& key);

WeylElement multiply(const RootSystem& rs, const WeylElement& a,
                     const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// Longest element of the parabolic subgroup W_I.
WeylElement longest_element(const RootSystem& rs, const NodeSet& I);

// All of W_I, stratified by length (index k holds the elements of length k).
// Deterministic: each stratum is sorted by key.
std::vector<std::vector<WeylElement>> enumerate_parabolic(
    const RootSystem& rs, const NodeSet& I, const Budget& budget = {});

// Minimal-length representatives of the cosets W_K x inside W_I (K subset of
// I), stratified by length. Characterized by x^{-1}(alpha_i) > 0 for i in K.
std::vector<std::vector<WeylElement>> min_coset_reps(
    const RootSystem& rs, const NodeSet& K, const NodeSet& I,
    const Budget& budget = {});

struct DominanceResult {
  WeylElement y;   // element of W_J with y(xi) strictly dominant on Delta_J+
  Weight sorted;   // y(xi)
};

// Sorts xi into the strictly J-dominant chamber. Empty when xi pairs to zero
// with some coroot of Delta_J (the singular case).
std::optional<DominanceResult> dominance_sort(const RootSystem& rs,
                                              const Weight& xi,
                                              const NodeSet& J);

}  // namespace flagradon
