#include "jordanlab/counterexamples.hpp"

#include "jordanlab/error.hpp"

#include <cmath>

namespace jordanlab {

namespace {

// Pattern over (a, b, c); -1 means "not checked".
struct Pattern {
  int a, b, c;
  const char* text;
};

bool fits(int want, bool got) { return want < 0 || (want == 1) == got; }

PatternPair evaluate(std::string description, const Element& a, const Element& b, Pattern want, double tol) {
  PatternPair p{std::move(description), a, b, q_commutation_panel(a, b, tol), false, false, false, want.text, false};
  p.a_holds = p.panel.qq_commute;
  p.b_holds = p.panel.q_cross_identity;
  p.c_holds = operator_commute(a, b, tol) && p.panel.full_commute;
  p.matches = fits(want.a, p.a_holds) && fits(want.b, p.b_holds) && fits(want.c, p.c_holds);
  return p;
}

}  // namespace

bool CounterexampleResult::matches() const {
  for (const auto& p : pairs) {
    if (!p.matches) return false;
  }
  return !pairs.empty();
}

const std::vector<std::string>& counterexample_names() {
  static const std::vector<std::string> names = {"pauli-q-identity", "pauli-qq-commute"};
  return names;
}

CounterexampleResult counterexample(const std::string& name, double tol) {
  const Family f = herm_complex(2);
  const Algebra& alg = *f.algebra;
  // Basis E11, E22, X12, Y12: |0><0|, |1><1|, sigma_x, -sigma_y.
  const Element ket0 = alg.basis(0);
  const Element ket1 = alg.basis(1);
  const Element sx = alg.basis(2);
  const Element plus = 0.5 * (alg.unit() + sx);
  const Element minus = 0.5 * (alg.unit() - sx);
  const Element sz = ket0 - ket1;

  CounterexampleResult out{name, {}};
  if (name == "pauli-q-identity") {
    out.pairs.push_back(evaluate("a = |+><+| - |-><-|, b = |0><0| - |1><1|", plus - minus, sz,
                                 {-1, 1, 0, "b and not c"}, tol));
    out.pairs.push_back(evaluate("a = (sigma_x + sigma_z)/sqrt(2), b = |0><0| - |1><1|",
                                 (sx + sz) * (1.0 / std::sqrt(2.0)), sz, {0, 1, 0, "b, not a, not c"}, tol));
  } else if (name == "pauli-qq-commute") {
    // |0><1| + |1><0| is the off-diagonal unit X12.
    out.pairs.push_back(evaluate("a = |0><1| + |1><0|, b = |0><0| - |1><1|", sx, sz, {1, -1, 0, "a and not c"}, tol));
  } else {
    throw Error(ErrorCode::ParseError, "unknown counterexample '" + name + "'");
  }
  return out;
}

}  // namespace jordanlab
