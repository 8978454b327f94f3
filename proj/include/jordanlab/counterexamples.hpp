#pragma once

// Single-qubit Pauli demonstrations in herm_c:2 showing that, without
// positivity, Q-commutation and the identity Q_a b^2 = Q_b a^2 do not imply
// operator commutation.
//
// The three conditions compared are
//   (a) Q_a Q_b = Q_b Q_a
//   (b) Q_a b^2 = Q_b a^2
//   (c) a and b operator commute
//
// "pauli-q-identity": a = |+><+| - |-><-|, b = |0><0| - |1><1|. Because a
//   and b anticommute as matrices, Q_a and Q_b are conjugations by
//   anticommuting reflections and do commute, so this pair shows (a), (b)
//   and not (c). The demo adds the reflection a' = (sigma_x + sigma_z)/sqrt(2)
//   with the same b, for which exactly (b) holds.
// "pauli-qq-commute": a = |0><1| + |1><0|, b = |0><0| - |1><1|, showing (a)
//   without (c).

#include "jordanlab/commutation.hpp"
#include "jordanlab/families.hpp"

#include <string>
#include <vector>

namespace jordanlab {

struct PatternPair {
  std::string description;
  Element a;
  Element b;
  QPanel panel;
  bool a_holds = false;  // (a)
  bool b_holds = false;  // (b)
  bool c_holds = false;  // (c)
  std::string expected;  // e.g. "b and not a, not c"
  bool matches = false;
};

struct CounterexampleResult {
  std::string name;
  std::vector<PatternPair> pairs;

  bool matches() const;
};

const std::vector<std::string>& counterexample_names();

/// Throws Error(ParseError) for unknown names.
CounterexampleResult counterexample(const std::string& name, double tol = tol::kCommute);

}  // namespace jordanlab
