#pragma once

// Operator commutation: a and b operator commute when T_a T_b = T_b T_a.
// This module computes commutants and generated subalgebras and checks the
// equivalence between operator commutation and associativity of the
// subalgebra two elements generate.

#include "jordanlab/algebra.hpp"

#include <string>
#include <vector>

namespace jordanlab {

namespace tol {
inline constexpr double kCommute = 1e-8;
}  // namespace tol

struct SubalgebraBasis {
  AlgebraPtr algebra;
  std::vector<Element> basis;  // orthonormal in the algebra inner product
  bool contains_unit = false;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Outcome of a tolerance test. `worst` is the largest relative residual
/// seen (checks stop early once a residual is clearly above 10 * tol).
struct Check {
  bool holds = true;
  double worst = 0.0;
};

/// ||[T_a, T_b]|| / ((1 + ||T_a||)(1 + ||T_b||)) in operator norm.
double commute_residual(const Element& a, const Element& b);
bool operator_commute(const Element& a, const Element& b, double tol = tol::kCommute);

/// {x : [T_x, T_s] = 0 for all s in S}, as the joint kernel of the linear
/// maps x -> [T_x, T_s].
SubalgebraBasis commutant(const std::vector<Element>& generators, double tol = tol::kBase);

/// Smallest product-closed subspace containing `gens` (and the unit).
SubalgebraBasis generate_subalgebra(const std::vector<Element>& gens, bool include_unit,
                                    double tol = tol::kBase);

/// Norm of the part of x orthogonal to span(B), divided by 1 + |x|.
double distance_to_span(const SubalgebraBasis& b, const Element& x);

Check associativity(const SubalgebraBasis& b, double tol = tol::kCommute);
Check mutual_commutation(const SubalgebraBasis& b, double tol = tol::kCommute);
Check product_closure(const SubalgebraBasis& b, double tol = tol::kCommute);

bool is_associative(const SubalgebraBasis& b, double tol = tol::kCommute);
bool is_mutually_commuting(const SubalgebraBasis& b, double tol = tol::kCommute);

enum class Verdict { Consistent, Inconsistent };
const char* to_string(Verdict v);

struct NamedResidual {
  std::string name;
  double value = 0.0;       // relative residual, compared against tol
  bool borderline = false;  // value in [0.1 tol, 10 tol]
};

struct PositivityCase {
  bool applicable = false;  // a or b positive
  bool q_identity = false;  // Q_a b^2 = Q_b a^2
};

/// Conditions of the operator-commutation equivalence theorem for a pair:
///   (a) a and b operator commute
///   (b) they generate an associative subalgebra
///   (c) ... whose elements mutually operator commute
///   (d) a and a^2 operator commute with b and b^2
/// and, when one of them is positive, Q_a b^2 = Q_b a^2.
struct TheoremReport {
  bool op_commute = false;
  bool assoc = false;
  bool assoc_mutual = false;
  bool squares_commute = false;
  PositivityCase positivity;
  std::vector<NamedResidual> residuals;
  int subalgebra_dim = 0;
  Verdict verdict = Verdict::Inconsistent;

  bool borderline() const;
};

TheoremReport theorem_report(const Element& a, const Element& b, double tol = tol::kCommute);

struct CommutingClosure {
  SubalgebraBasis closure;
  bool associative = false;
  bool mutually_commuting = false;
  bool a_commutes_b2 = false;  // implied by a ~ b and b ~ a^2
};

/// For a ~ b and b ~ a^2: the subalgebra generated by a, b and the unit,
/// with its associativity and mutual commutation checked. Throws
/// Error(NotApplicable) when the hypotheses fail.
CommutingClosure two_generator_commuting_closure(const Element& a, const Element& b,
                                                 double tol = tol::kCommute);

struct QPanel {
  bool qq_commute = false;        // [Q_a, Q_b] = 0
  bool q_cross_identity = false;  // Q_a b^2 = Q_b a^2
  bool full_commute = false;      // a, a^2 operator commute with b, b^2
  bool positivity_applicable = false;
  bool agree = true;              // all three equal; only meaningful when positivity applies
  double qq_residual = 0.0;
  double q_cross_residual = 0.0;
  double full_residual = 0.0;
};

QPanel q_commutation_panel(const Element& a, const Element& b, double tol = tol::kCommute);

/// ||Q_a b^2 - Q_b a^2|| / ((1+|a|)^2 (1+|b|)^2).
double q_identity_residual(const Element& a, const Element& b);

}  // namespace jordanlab
