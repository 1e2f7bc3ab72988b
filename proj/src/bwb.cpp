#include "flagradon/bwb.hpp"

namespace flagradon {

PushforwardResult bwb_pushforward(const RootSystem& rs, const NodeSet& I,
                                  const NodeSet& J, const Weight& lambda) {
  if (!node_subset(I, J))
    throw NotNested("pushforward needs I nested inside J");
  if (!cone_membership(rs, lambda, I).in_cone)
    throw NotDominant("pushforward weight is not I-dominant");

  const Weight xi = lambda + rs.rho() - two_rho_complement(rs, I);
  auto sorted = dominance_sort(rs, xi, J);
  if (!sorted) return std::nullopt;

  Weight mu = sorted->sorted - (rs.rho() - two_rho_complement(rs, J));
  const WeylElement wJ = longest_element(rs, J);
  const WeylElement wI = longest_element(rs, I);
  const WeylElement wJw = multiply(rs, wJ, sorted->y);
  const int degree = wJw.len - wI.len;

  const int bound = static_cast<int>(delta_plus_indices(rs, J).size() -
                                     delta_plus_indices(rs, I).size());
  if (degree < 0 || degree > bound)
    throw ConsistencyError("pushforward degree out of range");
  return PushforwardTerm{std::move(mu), degree};
}

}  // namespace flagradon
