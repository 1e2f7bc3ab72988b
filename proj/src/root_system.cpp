#include "flagradon/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace flagradon {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Generic: return "generic";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  if (s == "generic") return Family::Generic;
  throw InvalidCartanType("unknown family '" + s + "'");
}

NodeSet full_node_set(int rank) {
  NodeSet s(static_cast<size_t>(rank));
  std::iota(s.begin(), s.end(), 1);
  return s;
}

NodeSet node_union(const NodeSet& a, const NodeSet& b) {
  NodeSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

NodeSet node_intersection(const NodeSet& a, const NodeSet& b) {
  NodeSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

NodeSet node_difference(const NodeSet& a, const NodeSet& b) {
  NodeSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}

bool node_subset(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool node_contains(const NodeSet& a, int i) {
  return std::binary_search(a.begin(), a.end(), i);
}

Weight& Weight::operator+=(const Weight& o) {
  if (fw.size() != o.fw.size()) throw DimensionMismatch("weight rank mismatch");
  for (size_t i = 0; i < fw.size(); ++i) fw[i] += o.fw[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (fw.size() != o.fw.size()) throw DimensionMismatch("weight rank mismatch");
  for (size_t i = 0; i < fw.size(); ++i) fw[i] -= o.fw[i];
  return *this;
}

Weight operator*(long long k, Weight a) {
  for (auto& c : a.fw) c *= k;
  return a;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num * o.den + o.num * den, den * o.den);
  return *this;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

IntMatrix zero_matrix(int n) {
  return IntMatrix(static_cast<size_t>(n),
                   std::vector<long long>(static_cast<size_t>(n), 0));
}

// Leading principal minors via fraction-free elimination; exact as long as
// intermediates fit __int128, which they do for any rank we enumerate.
bool positive_definite(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<__int128>> a(static_cast<size_t>(n),
                                       std::vector<__int128>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;  // Bareiss pivot equals the k-th minor
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return true;
}

void validate_generic(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw InvalidCartanType("empty Cartan matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw InvalidCartanType("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 2) throw InvalidCartanType("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0)
        throw InvalidCartanType("off-diagonal Cartan entries must be <= 0");
      if ((m[i][j] == 0) != (m[j][i] == 0))
        throw InvalidCartanType("Cartan zero pattern must be symmetric");
    }
  }
  // Symmetrizer d > 0 with d_i * a_ij = d_j * a_ji, propagated along edges.
  std::vector<long long> d(static_cast<size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 0) continue;
        // want d_j = d_i * a_ij / a_ji
        long long num = d[i] * (-m[i][j]);
        long long den = -m[j][i];
        if (num % den != 0) {
          // rescale the whole component found so far
          long long g = std::gcd(num, den);
          long long f = den / g;
          for (auto& x : d)
            if (x != 0) x *= f;
          num = d[i] * (-m[i][j]);
        }
        long long dj = num / den;
        if (d[j] == 0) {
          d[j] = dj;
          q.push(j);
        } else if (d[j] != dj) {
          throw InvalidCartanType("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  IntMatrix sym = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym[i][j] = d[i] * m[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym[i][j] != sym[j][i])
        throw InvalidCartanType("Cartan matrix is not symmetrizable");
  if (!positive_definite(sym))
    throw InvalidCartanType("Cartan matrix is not of finite type");
}

}  // namespace

CartanType CartanType::classical(Family f, int rank) {
  int min_rank = 1;
  switch (f) {
    case Family::A: min_rank = 1; break;
    case Family::B:
    case Family::C: min_rank = 2; break;
    case Family::D: min_rank = 3; break;
    case Family::Generic:
      throw InvalidCartanType("generic type needs an explicit matrix");
  }
  if (rank < min_rank)
    throw InvalidCartanType("rank " + std::to_string(rank) +
                            " out of range for family " + family_name(f));
  IntMatrix m = zero_matrix(rank);
  for (int i = 0; i < rank; ++i) m[i][i] = 2;
  auto link = [&m](int i, int j, long long aij, long long aji) {
    m[i - 1][j - 1] = aij;
    m[j - 1][i - 1] = aji;
  };
  const int chain_end = (f == Family::D) ? rank - 1 : rank;
  for (int i = 1; i < chain_end; ++i) link(i, i + 1, -1, -1);
  switch (f) {
    case Family::A:
      break;
    case Family::B:
      link(rank - 1, rank, -2, -1);  // alpha_rank is the short root
      break;
    case Family::C:
      link(rank - 1, rank, -1, -2);  // alpha_rank is the long root
      break;
    case Family::D:
      link(rank - 2, rank, -1, -1);
      break;
    case Family::Generic:
      break;
  }
  return CartanType{f, rank, std::move(m)};
}

CartanType CartanType::generic(IntMatrix m) {
  validate_generic(m);
  return CartanType{Family::Generic, static_cast<int>(m.size()), std::move(m)};
}

RootSystem::RootSystem(CartanType ct) : type_(std::move(ct)) {
  if (type_.family == Family::Generic) {
    validate_generic(type_.cartan);
  } else {
    type_ = CartanType::classical(type_.family, type_.rank);
  }
  rho_ = Weight(std::vector<long long>(static_cast<size_t>(rank()), 1));
  generate_roots();
}

long long RootSystem::cartan(int i, int j) const {
  return type_.cartan[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

Weight RootSystem::zero_weight() const {
  return Weight(std::vector<long long>(static_cast<size_t>(rank()), 0));
}

Weight RootSystem::fundamental_weight(int node) const {
  auto w = zero_weight();
  w.fw[static_cast<size_t>(node - 1)] = 1;
  return w;
}

Weight RootSystem::weight_from(std::vector<long long> fw) const {
  if (static_cast<int>(fw.size()) != rank())
    throw DimensionMismatch("weight coordinate count does not match rank");
  return Weight(std::move(fw));
}

Root RootSystem::reflect_root(int i, const Root& r) const {
  long long pair = 0;
  for (int j = 1; j <= rank(); ++j)
    pair += r.rb[static_cast<size_t>(j - 1)] * cartan(j, i);
  Root out = r;
  out.rb[static_cast<size_t>(i - 1)] -= pair;
  return out;
}

Coroot RootSystem::reflect_coroot(int i, const Coroot& c) const {
  long long pair = 0;
  for (int j = 1; j <= rank(); ++j)
    pair += c.cb[static_cast<size_t>(j - 1)] * cartan(i, j);
  Coroot out = c;
  out.cb[static_cast<size_t>(i - 1)] -= pair;
  return out;
}

Weight RootSystem::reflect_weight(int i, const Weight& w) const {
  if (w.rank() != rank()) throw DimensionMismatch("weight rank mismatch");
  const long long wi = w.fw[static_cast<size_t>(i - 1)];
  Weight out = w;
  for (int j = 1; j <= rank(); ++j)
    out.fw[static_cast<size_t>(j - 1)] -= wi * cartan(i, j);
  return out;
}

void RootSystem::generate_roots() {
  const int n = rank();
  std::map<std::vector<long long>, Coroot> seen;
  std::queue<std::pair<Root, Coroot>> work;
  for (int i = 1; i <= n; ++i) {
    Root r{std::vector<long long>(static_cast<size_t>(n), 0)};
    Coroot c{std::vector<long long>(static_cast<size_t>(n), 0)};
    r.rb[static_cast<size_t>(i - 1)] = 1;
    c.cb[static_cast<size_t>(i - 1)] = 1;
    seen.emplace(r.rb, c);
    work.push({std::move(r), std::move(c)});
  }
  // Finite-type validation bounds this loop; the cap is a safety net only.
  constexpr size_t kMaxRoots = 1u << 20;
  while (!work.empty()) {
    auto [r, c] = std::move(work.front());
    work.pop();
    for (int i = 1; i <= n; ++i) {
      Root r2 = reflect_root(i, r);
      if (seen.count(r2.rb)) continue;
      Coroot c2 = reflect_coroot(i, c);
      seen.emplace(r2.rb, c2);
      work.push({std::move(r2), std::move(c2)});
      if (seen.size() > kMaxRoots)
        throw InvalidCartanType("root generation did not close");
    }
  }
  for (auto& [rb, c] : seen) {
    const bool pos = std::all_of(rb.begin(), rb.end(),
                                 [](long long x) { return x >= 0; });
    const bool neg = std::all_of(rb.begin(), rb.end(),
                                 [](long long x) { return x <= 0; });
    if (!pos && !neg)
      throw InvalidCartanType("generated a root with mixed signs");
    if (!pos) continue;
    root_index_.emplace(rb, pos_roots_.size());
    pos_roots_.push_back(Root{rb});
    pos_coroots_.push_back(c);
  }
  // std::map iteration already gave lexicographic order on coordinates.
  pos_root_weights_.reserve(pos_roots_.size());
  for (const auto& r : pos_roots_) pos_root_weights_.push_back(root_as_weight(r));
}

Coroot RootSystem::coroot_of(const Root& r) const {
  std::vector<long long> key = r.rb;
  const bool negative = std::all_of(key.begin(), key.end(),
                                    [](long long x) { return x <= 0; });
  if (negative)
    for (auto& x : key) x = -x;
  auto it = root_index_.find(key);
  if (it == root_index_.end()) throw Error("coroot_of: not a root");
  Coroot c = pos_coroots_[it->second];
  if (negative)
    for (auto& x : c.cb) x = -x;
  return c;
}

bool RootSystem::is_root(const Root& r) const {
  std::vector<long long> key = r.rb;
  if (std::all_of(key.begin(), key.end(), [](long long x) { return x <= 0; }))
    for (auto& x : key) x = -x;
  return root_index_.count(key) > 0;
}

long long RootSystem::pairing(const Weight& w, const Coroot& c) const {
  if (w.rank() != rank() || static_cast<int>(c.cb.size()) != rank())
    throw DimensionMismatch("pairing with mismatched rank");
  long long s = 0;
  for (int j = 0; j < rank(); ++j)
    s += w.fw[static_cast<size_t>(j)] * c.cb[static_cast<size_t>(j)];
  return s;
}

Weight RootSystem::root_as_weight(const Root& r) const {
  Weight w = zero_weight();
  for (int i = 1; i <= rank(); ++i) {
    const long long ci = r.rb[static_cast<size_t>(i - 1)];
    if (ci == 0) continue;
    for (int j = 1; j <= rank(); ++j)
      w.fw[static_cast<size_t>(j - 1)] += ci * cartan(i, j);
  }
  return w;
}

std::vector<Rational> RootSystem::weight_to_epsilon(const Weight& w) const {
  if (w.rank() != rank()) throw DimensionMismatch("weight rank mismatch");
  const int n = rank();
  switch (family()) {
    case Family::A: {
      std::vector<Rational> eps(static_cast<size_t>(n + 1));
      for (int p = 1; p <= n; ++p) {
        const long long wp = w[p - 1];
        if (wp == 0) continue;
        for (int j = 1; j <= n + 1; ++j) {
          long long num = (j <= p) ? (n + 1 - p) : -p;
          eps[static_cast<size_t>(j - 1)] += wp * Rational(num, n + 1);
        }
      }
      return eps;
    }
    case Family::B: {
      std::vector<Rational> eps(static_cast<size_t>(n));
      for (int p = 1; p < n; ++p)
        for (int j = 1; j <= p; ++j)
          eps[static_cast<size_t>(j - 1)] += w[p - 1] * Rational(1, 1);
      for (int j = 1; j <= n; ++j)
        eps[static_cast<size_t>(j - 1)] += w[n - 1] * Rational(1, 2);
      return eps;
    }
    case Family::C: {
      std::vector<Rational> eps(static_cast<size_t>(n));
      for (int p = 1; p <= n; ++p)
        for (int j = 1; j <= p; ++j)
          eps[static_cast<size_t>(j - 1)] += w[p - 1] * Rational(1, 1);
      return eps;
    }
    case Family::D: {
      std::vector<Rational> eps(static_cast<size_t>(n));
      for (int p = 1; p <= n - 2; ++p)
        for (int j = 1; j <= p; ++j)
          eps[static_cast<size_t>(j - 1)] += w[p - 1] * Rational(1, 1);
      for (int j = 1; j <= n; ++j) {
        eps[static_cast<size_t>(j - 1)] +=
            w[n - 2] * Rational(j == n ? -1 : 1, 2);
        eps[static_cast<size_t>(j - 1)] += w[n - 1] * Rational(1, 2);
      }
      return eps;
    }
    case Family::Generic:
      throw UnsupportedFamily("epsilon coordinates need a classical family");
  }
  throw UnsupportedFamily("unreachable");
}

Weight RootSystem::epsilon_to_weight(const std::vector<Rational>& eps) const {
  const int n = rank();
  const size_t want = static_cast<size_t>(family() == Family::A ? n + 1 : n);
  if (eps.size() != want)
    throw DimensionMismatch("epsilon coordinate count mismatch");
  auto diff = [&eps](int i, int j) {
    Rational r = eps[static_cast<size_t>(i - 1)];
    r += -1 * eps[static_cast<size_t>(j - 1)];
    return r;
  };
  auto as_int = [](const Rational& r) {
    if (r.den != 1) throw Error("epsilon coordinates are not a lattice weight");
    return r.num;
  };
  std::vector<long long> fw(static_cast<size_t>(n));
  switch (family()) {
    case Family::A:
      for (int i = 1; i <= n; ++i) fw[static_cast<size_t>(i - 1)] = as_int(diff(i, i + 1));
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) fw[static_cast<size_t>(i - 1)] = as_int(diff(i, i + 1));
      fw[static_cast<size_t>(n - 1)] = as_int(2 * eps[static_cast<size_t>(n - 1)]);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) fw[static_cast<size_t>(i - 1)] = as_int(diff(i, i + 1));
      fw[static_cast<size_t>(n - 1)] = as_int(eps[static_cast<size_t>(n - 1)]);
      break;
    case Family::D: {
      for (int i = 1; i <= n - 2; ++i) fw[static_cast<size_t>(i - 1)] = as_int(diff(i, i + 1));
      fw[static_cast<size_t>(n - 2)] = as_int(diff(n - 1, n));
      Rational sum = eps[static_cast<size_t>(n - 2)];
      sum += eps[static_cast<size_t>(n - 1)];
      fw[static_cast<size_t>(n - 1)] = as_int(sum);
      break;
    }
    case Family::Generic:
      throw UnsupportedFamily("epsilon coordinates need a classical family");
  }
  return Weight(std::move(fw));
}

}  // namespace flagradon
