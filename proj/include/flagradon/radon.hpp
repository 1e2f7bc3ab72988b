#pragma once

// Grothendieck-group image of the integral transform attached to the
// correspondence X_I <- X_{I cap J} -> X_J, applied to the induced module of
// a line bundle O(lambda), plus the vanishing / single-term / concentration
// classification and the extremal-case analysis.

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "flagradon/bwb.hpp"
#include "flagradon/parabolic.hpp"
#include "flagradon/weyl.hpp"

namespace flagradon {

// One row per coset representative x: either the shifted weight x(lambda+rho)
// is singular for Delta_J (the term dies), or it contributes the class of
// O(mu) placed in cohomological degree m(x) - l(x).
struct GammaEntry {
  WeylElement x;
  int len_x = 0;
  bool singular = true;
  std::optional<WeylElement> y;  // the J-dominance sorting element y_x
  std::optional<int> m;          // Bott degree shift attached to x
  std::optional<Weight> mu;      // (y_x x) dot lambda
  std::optional<int> degree;     // m(x) - l(x)
};

// Formal signed sum of J-dominant weights. Zero coefficients are never kept.
class GrothendieckClass {
 public:
  void add(const Weight& w, long long coeff);
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Weight, long long>& terms() const { return terms_; }
  friend bool operator==(const GrothendieckClass&,
                         const GrothendieckClass&) = default;

 private:
  std::map<Weight, long long> terms_;
};

struct SingleTerm {
  Weight weight;
  int shift = 0;  // R = D O(weight)[-shift]
};

struct RadonReport {
  Weight lambda;
  std::vector<GammaEntry> entries;
  GrothendieckClass euler;
  bool vanishes = false;
  std::optional<SingleTerm> single_term;
  // True when every surviving entry has l(x) >= m(x): sufficient for
  // concentration in degree 0, not equivalent to it in general.
  bool concentrated_deg0_sufficient = false;
  // Present when (lambda+rho) pairs strictly negatively with every coroot of
  // Delta_J+ \ Delta_I; then O((w_J w_{I cap J}) dot lambda) carries the
  // canonical comparison map, and epi_sufficient reports the strict-length
  // sufficient condition for surjectivity.
  std::optional<Weight> epi_candidate;
  bool epi_sufficient = false;
};

struct ExtremalPair {
  Weight lambda;  // in the I-zero face
  Weight mu;      // = lambda + gamma_ij, in the J-zero face
  NodeSet free_directions;  // nodes outside I and J: one free parameter each
};

struct ExtremalReport {
  Weight lambda;
  Weight mu;
  NodeSet free_directions;
  std::vector<GammaEntry> entries;
  bool concentrated = false;  // iff l(x) >= m(x) for all surviving x
  bool phi_epi = false;       // iff additionally l(x) > m(x) for all x != e
  bool phi_iso = false;       // iff the only surviving entry is x = e
  std::vector<GammaEntry> concentration_violations;
  std::vector<GammaEntry> epi_violations;
  std::vector<GammaEntry> iso_violations;
};

// All computations for one fixed correspondence. Construction enumerates the
// coset representatives once; everything else is per-weight work. Instances
// are immutable after construction apart from a lazily built W_J table, and
// all outputs are deterministic.
class Transform {
 public:
  explicit Transform(CorrespondenceSpec spec, Budget budget = {});

  const CorrespondenceSpec& spec() const { return spec_; }
  const RootSystem& rs() const { return *spec_.rs; }
  const Weight& gamma() const { return gamma_; }

  // Gamma stratified by length; stratum k holds the representatives of
  // length k and the top stratum index equals #(Delta_I+ \ Delta_J).
  const std::vector<std::vector<WeylElement>>& gamma_strata() const {
    return gamma_strata_;
  }

  std::vector<GammaEntry> gamma_lambda(const Weight& lambda) const;

  // The double-coset reformulation: elements w of W_J W_I with w(lambda+rho)
  // strictly dominant regular on Delta_J+, sorted by (length, key).
  std::vector<WeylElement> xi_lambda(const Weight& lambda) const;

  // Terms of the resolution, stratum by stratum: (k, {x dot lambda}).
  std::vector<std::pair<int, std::vector<Weight>>> bgg_terms(
      const Weight& lambda) const;

  // Signed sum over surviving entries; computed along both the Gamma route
  // and the Xi route, which must agree.
  GrothendieckClass euler_class(const Weight& lambda) const;

  RadonReport classify(const Weight& lambda) const;

  // Weaker vanishing test through the infinitesimal character: true when no
  // point of the full orbit of lambda+rho is strictly positive on J.
  bool infinitesimal_vanishing_test(const Weight& lambda) const;

  std::optional<ExtremalPair> extremal_pair() const;
  ExtremalReport classify_extremal() const;

 private:
  CorrespondenceSpec spec_;
  Budget budget_;
  NodeSet meet_;  // I cap J
  Weight gamma_;
  std::vector<std::vector<WeylElement>> gamma_strata_;
  std::vector<const WeylElement*> gamma_flat_;
  std::vector<std::size_t> idx_J_plus_;
  std::vector<std::size_t> idx_J_not_I_;
  std::vector<std::size_t> idx_I_not_J_;
  std::vector<std::size_t> idx_meet_plus_;
  WeylElement w_J_;
  WeylElement w_meet_;
  // W_J is only needed by the Xi route; built on first use, thread-safely.
  mutable std::once_flag wj_once_;
  mutable std::vector<WeylElement> wj_flat_;

  void require_dominant(const Weight& lambda) const;
  const std::vector<WeylElement>& wj_elements() const;
  GrothendieckClass euler_from_entries(const std::vector<GammaEntry>& entries,
                                       const Weight& lambda) const;
};

}  // namespace flagradon
