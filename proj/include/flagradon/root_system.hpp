#pragma once

// Finite root-system data with exact integer arithmetic.
//
// Conventions used throughout the library:
//   - Weights live in fundamental-weight coordinates: coord i of a weight
//     lambda is the pairing <lambda, alpha_i_check>. All weight arithmetic
//     is plain integer vector arithmetic.
//   - Roots are stored in simple-root coordinates, coroots in simple-coroot
//     coordinates.
//   - cartan(i, j) = <alpha_i, alpha_j_check>, so row i of the Cartan matrix
//     is alpha_i written in fundamental-weight coordinates.
//   - Dynkin nodes are labelled 1..rank (Bourbaki).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flagradon/errors.hpp"

namespace flagradon {

enum class Family { A, B, C, D, Generic };

std::string family_name(Family f);
Family family_from_string(const std::string& s);

using IntMatrix = std::vector<std::vector<long long>>;

// Sorted list of distinct 1-based node labels.
using NodeSet = std::vector<int>;

NodeSet full_node_set(int rank);
NodeSet node_union(const NodeSet& a, const NodeSet& b);
NodeSet node_intersection(const NodeSet& a, const NodeSet& b);
NodeSet node_difference(const NodeSet& a, const NodeSet& b);
bool node_subset(const NodeSet& a, const NodeSet& b);
bool node_contains(const NodeSet& a, int i);

struct CartanType {
  Family family = Family::Generic;
  int rank = 0;
  IntMatrix cartan;  // rank x rank

  static CartanType classical(Family f, int rank);
  static CartanType generic(IntMatrix m);
};

struct Weight {
  std::vector<long long> fw;  // fundamental-weight coordinates

  Weight() = default;
  explicit Weight(std::vector<long long> c) : fw(std::move(c)) {}

  int rank() const { return static_cast<int>(fw.size()); }
  long long operator[](int i) const { return fw[static_cast<size_t>(i)]; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long long k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) {
    return a.fw <=> b.fw;
  }
};

struct Root {
  std::vector<long long> rb;  // simple-root coordinates

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root& a, const Root& b) {
    return a.rb <=> b.rb;
  }
};

struct Coroot {
  std::vector<long long> cb;  // simple-coroot coordinates

  friend bool operator==(const Coroot&, const Coroot&) = default;
};

// Exact rational, reduced, positive denominator. Only needed for the
// epsilon-coordinate display of classical weights.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  friend bool operator==(const Rational&, const Rational&) = default;
  Rational& operator+=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator*(long long k, Rational r) {
    return Rational(k * r.num, r.den);
  }
  std::string str() const;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType ct);

  Family family() const { return type_.family; }
  int rank() const { return type_.rank; }
  const CartanType& type() const { return type_; }
  long long cartan(int i, int j) const;  // <alpha_i, alpha_j_check>

  // Positive roots in a fixed deterministic order (lexicographic on
  // simple-root coordinates), with aligned coroots and weight forms.
  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  const std::vector<Coroot>& positive_coroots() const { return pos_coroots_; }
  const std::vector<Weight>& positive_root_weights() const {
    return pos_root_weights_;
  }
  std::size_t num_positive_roots() const { return pos_roots_.size(); }

  const Weight& rho() const { return rho_; }
  Weight zero_weight() const;
  Weight fundamental_weight(int node) const;
  Weight weight_from(std::vector<long long> fw) const;

  Coroot coroot_of(const Root& r) const;
  bool is_root(const Root& r) const;

  long long pairing(const Weight& w, const Coroot& c) const;

  Weight root_as_weight(const Root& r) const;

  // Simple reflection s_i (1-based node label) in each basis.
  Weight reflect_weight(int i, const Weight& w) const;
  Root reflect_root(int i, const Root& r) const;
  Coroot reflect_coroot(int i, const Coroot& c) const;

  // Bourbaki epsilon coordinates (classical families only). Length is
  // rank+1 for family A, rank otherwise.
  std::vector<Rational> weight_to_epsilon(const Weight& w) const;
  // Inverse of weight_to_epsilon; for family A the trace direction is
  // projected away, so it is a left inverse modulo trace.
  Weight epsilon_to_weight(const std::vector<Rational>& eps) const;

 private:
  CartanType type_;
  std::vector<Root> pos_roots_;
  std::vector<Coroot> pos_coroots_;
  std::vector<Weight> pos_root_weights_;
  std::map<std::vector<long long>, std::size_t> root_index_;
  Weight rho_;

  void generate_roots();
};

}  // namespace flagradon
