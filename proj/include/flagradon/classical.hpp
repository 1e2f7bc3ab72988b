#pragma once

// Closed-form case tables for maximal parabolic pairs in the classical
// families: I = I_0 \ {p}, J = I_0 \ {q}, lambda = -a * fw_p. The tables are
// plain case lists with no algebra beyond integer formula evaluation, so
// they stay an independent check on the engine. Where a parameter falls
// outside every row the verdict is NoStatement, never a guess.

#include <string>
#include <vector>

#include "flagradon/radon.hpp"

namespace flagradon {

struct MaximalSpec {
  Family family = Family::A;
  int n = 0;
  int p = 0;
  int q = 0;
  long long a = 0;
};

void validate(const MaximalSpec& ms);  // throws InvalidSpec

enum class VerdictKind { Vanishes, SingleTerm, Extremal, NoStatement };

struct OracleVerdict {
  VerdictKind kind = VerdictKind::NoStatement;
  // SingleTerm: R = D O(-b * fw_q)[-c]
  long long b = 0;
  long long c = 0;
  // Extremal: pair (-r * fw_p, -s * fw_q) plus the epi/iso conditions
  long long r = 0;
  long long s = 0;
  bool epi = false;
  bool iso = false;
};

OracleVerdict oracle_radon(const MaximalSpec& ms);
OracleVerdict oracle_extremal(Family family, int n, int p, int q);

struct Discrepancy {
  MaximalSpec ms;        // a == 0 marks an extremal-classification mismatch
  std::string expected;
  std::string actual;
};

// Runs the generic engine over every maximal-parabolic spec with rank up to
// n_max and twist up to a_max and compares against the tables. Empty result
// means full agreement.
std::vector<Discrepancy> sweep_compare(Family family, int n_max,
                                       long long a_max,
                                       const Budget& budget = {});

}  // namespace flagradon
