#include "flagradon/parabolic.hpp"

#include <algorithm>

namespace flagradon {

namespace {

NodeSet canonicalize(NodeSet s, int rank, const char* which) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < 1 || i > rank)
      throw InvalidSpec(std::string(which) + " contains a node outside 1..rank");
  return s;
}

bool supported_on(const Root& r, const NodeSet& I) {
  for (int j = 0; j < static_cast<int>(r.rb.size()); ++j)
    if (r.rb[static_cast<size_t>(j)] != 0 && !node_contains(I, j + 1))
      return false;
  return true;
}

}  // namespace

CorrespondenceSpec make_correspondence(std::shared_ptr<const RootSystem> rs,
                                       NodeSet I, NodeSet J) {
  if (!rs) throw InvalidSpec("correspondence needs a root system");
  I = canonicalize(std::move(I), rs->rank(), "I");
  J = canonicalize(std::move(J), rs->rank(), "J");
  if (I == J) throw InvalidSpec("correspondence requires I != J");
  return CorrespondenceSpec{std::move(rs), std::move(I), std::move(J)};
}

std::vector<std::size_t> delta_plus_indices(const RootSystem& rs,
                                            const NodeSet& I) {
  std::vector<std::size_t> out;
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (supported_on(roots[k], I)) out.push_back(k);
  return out;
}

std::vector<Root> delta_plus(const RootSystem& rs, const NodeSet& I) {
  std::vector<Root> out;
  for (std::size_t k : delta_plus_indices(rs, I))
    out.push_back(rs.positive_roots()[k]);
  return out;
}

Weight gamma_ij(const CorrespondenceSpec& spec) {
  const RootSystem& rs = *spec.rs;
  Weight g = rs.zero_weight();
  auto in_J = delta_plus_indices(rs, spec.J);
  for (std::size_t k : in_J) {
    if (supported_on(rs.positive_roots()[k], spec.I)) continue;
    g += rs.positive_root_weights()[k];
  }
  return g;
}

Weight two_rho_complement(const RootSystem& rs, const NodeSet& S) {
  Weight g = rs.zero_weight();
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (!supported_on(roots[k], S)) g += rs.positive_root_weights()[k];
  return g;
}

ConeMembership cone_membership(const RootSystem& rs, const Weight& lambda,
                               const NodeSet& I) {
  if (lambda.rank() != rs.rank())
    throw DimensionMismatch("weight rank mismatch");
  ConeMembership m{true, true};
  for (int i : I) {
    if (lambda[i - 1] < 0) m.in_cone = false;
    if (lambda[i - 1] != 0) m.in_zero_face = false;
  }
  m.in_zero_face = m.in_zero_face && m.in_cone;
  return m;
}

}  // namespace flagradon
