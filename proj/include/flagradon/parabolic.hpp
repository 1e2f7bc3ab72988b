#pragma once

// Parabolic subset combinatorics for a double fibration
// X_I <- X_{I cap J} -> X_J.

#include <memory>
#include <vector>

#include "flagradon/root_system.hpp"

namespace flagradon {

struct CorrespondenceSpec {
  std::shared_ptr<const RootSystem> rs;
  NodeSet I;
  NodeSet J;
};

// Validates I != J, both within 1..rank, and canonicalizes (sorts, dedups).
CorrespondenceSpec make_correspondence(std::shared_ptr<const RootSystem> rs,
                                       NodeSet I, NodeSet J);

// Positive roots supported on I, in the global root order.
std::vector<Root> delta_plus(const RootSystem& rs, const NodeSet& I);

// Indices into rs.positive_roots() of the members of delta_plus(rs, I);
// cheaper to combine with the aligned coroot table.
std::vector<std::size_t> delta_plus_indices(const RootSystem& rs,
                                            const NodeSet& I);

// Sum of the positive roots in Delta_J+ that are not in Delta_I: the weight
// of the relative canonical bundle along the projection to X_J.
Weight gamma_ij(const CorrespondenceSpec& spec);

// Sum over Delta+ \ Delta_S of all positive roots, as a weight. This is the
// integral stand-in the pushforward rule uses instead of a half-sum.
Weight two_rho_complement(const RootSystem& rs, const NodeSet& S);

struct ConeMembership {
  bool in_cone = false;       // lambda(alpha_i_check) >= 0 for all i in I
  bool in_zero_face = false;  // lambda(alpha_i_check) == 0 for all i in I
};

ConeMembership cone_membership(const RootSystem& rs, const Weight& lambda,
                               const NodeSet& I);

}  // namespace flagradon
