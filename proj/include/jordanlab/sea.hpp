#pragma once

// Sequential product a & b = Q_{sqrt(a)} b on the effects 0 <= a <= 1 and
// the sequential-effect-algebra axioms it satisfies.

#include "jordanlab/algebra.hpp"

namespace jordanlab {

namespace tol {
inline constexpr double kSea = 1e-7;
inline constexpr double kHypothesis = 1e-3;  // fraction of the bound a hypothesis must meet
}  // namespace tol

/// An element with spectrum in [0, 1]. Eigenvalues within the positivity
/// threshold outside the interval are clamped onto it; anything further out
/// is rejected with Error(NotAnEffect).
class Effect {
 public:
  explicit Effect(const Element& element);

  const Element& element() const { return element_; }
  const AlgebraPtr& algebra() const { return element_.algebra(); }

  static bool is_effect(const Element& element);

 private:
  Element element_;
};

Effect seq_product(const Effect& a, const Effect& b);
Effect perp(const Effect& a);

struct AxiomOutcome {
  bool applicable = false;
  bool holds = false;   // false whenever not applicable
  double residual = 0.0;
  // Hypotheses hold within the bound but not clearly (residual above
  // kHypothesis * bound); the axiom is then not evaluated.
  bool unsettled = false;
};

struct SeaAxiomReport {
  AxiomOutcome ax_a;  // a&(b+c) = a&b + a&c        (when b+c is an effect)
  AxiomOutcome ax_b;  // 1&a = a
  AxiomOutcome ax_c;  // a&b = 0  =>  b&a = 0
  AxiomOutcome ax_d;  // a&b = b&a  =>  a&b' = b'&a and a&(b&c) = (a&b)&c
  AxiomOutcome ax_e;  // a&b = b&a, a&c = c&a  =>  a&(b+c) = (b+c)&a, a&(b&c) = (b&c)&a

  /// No applicable axiom fails.
  bool ok() const;
  bool unsettled() const;
};

/// Conclusions are tested against bound = tol * (1+|a|)(1+|b|)(1+|c|);
/// hypotheses must hold within tol::kHypothesis * bound.
SeaAxiomReport sea_axioms(const Effect& a, const Effect& b, const Effect& c, double tol = tol::kSea);

struct QuadraticZeroReport {
  double q_ab = 0.0;   // ||Q_a b||
  double q_ba = 0.0;   // ||Q_b a||
  double jordan = 0.0; // ||a*b||
  bool zero_ab = false;
  bool zero_ba = false;
  bool consistent = false;  // zero_ab == zero_ba, and then a*b = 0
};

/// Throws NotPositive unless both a and b are positive.
QuadraticZeroReport quadratic_zero_check(const Element& a, const Element& b, double tol = tol::kSea);

}  // namespace jordanlab
