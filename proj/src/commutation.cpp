#include "jordanlab/commutation.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace jordanlab {

namespace {

// Checks give up once a residual is this many tolerances out.
constexpr double kDecisive = 10.0;

bool is_borderline(double value, double tol) { return value >= 0.1 * tol && value <= 10.0 * tol; }

double scale3(const Element& x, const Element& y, const Element& z) {
  return (1.0 + x.norm()) * (1.0 + y.norm()) * (1.0 + z.norm());
}

}  // namespace

double commute_residual(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const Algebra& alg = *a.algebra();
  const DenseMatrix ta = alg.product_matrix(a.coords());
  const DenseMatrix tb = alg.product_matrix(b.coords());
  const double scale = (1.0 + alg.operator_norm(ta)) * (1.0 + alg.operator_norm(tb));
  return alg.operator_norm(ta * tb - tb * ta) / scale;
}

bool operator_commute(const Element& a, const Element& b, double tol) {
  return commute_residual(a, b) <= tol;
}

SubalgebraBasis commutant(const std::vector<Element>& generators, double tol) {
  if (generators.empty()) throw Error(ErrorCode::DomainError, "commutant of an empty set");
  const AlgebraPtr& alg = generators.front().algebra();
  for (const auto& s : generators) require_same_algebra(generators.front(), s);
  const int n = alg->dim();
  const auto n2 = static_cast<Eigen::Index>(n) * n;

  std::vector<const Element*> nonzero;
  for (const auto& s : generators) {
    if (s.norm() > 0.0) nonzero.push_back(&s);
  }
  // Row block k holds vec([T_{e_i}, T_{s_k}]) in column i.
  DenseMatrix system(n2 * static_cast<Eigen::Index>(nonzero.size()), n);
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    const Element& s = *nonzero[k];
    const DenseMatrix ts = alg->product_matrix(s.coords() / s.norm());
    for (int i = 0; i < n; ++i) {
      const DenseMatrix& ti = alg->basis_operator(i);
      const DenseMatrix c = ti * ts - ts * ti;
      system.block(static_cast<Eigen::Index>(k) * n2, i, n2, 1) =
          Eigen::Map<const Vector>(c.data(), n2);
    }
  }
  const DenseMatrix kernel = nullspace(system, tol);
  std::vector<Vector> columns;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) columns.push_back(kernel.col(j));
  SubalgebraBasis out{alg, {}, true};
  for (auto& v : gram_schmidt(columns, alg->gram(), tol)) out.basis.push_back(alg->element(std::move(v)));
  return out;
}

SubalgebraBasis generate_subalgebra(const std::vector<Element>& gens, bool include_unit, double tol) {
  if (gens.empty()) throw Error(ErrorCode::DomainError, "no generators");
  const AlgebraPtr& alg = gens.front().algebra();
  std::vector<Vector> seed;
  if (include_unit) seed.push_back(alg->unit().coords());
  for (const auto& g : gens) {
    require_same_algebra(gens.front(), g);
    seed.push_back(g.coords());
  }
  std::vector<Vector> basis = gram_schmidt(seed, alg->gram(), tol);
  std::size_t closed_upto = 0;  // products among basis[0..closed_upto) already included
  while (closed_upto < basis.size()) {
    std::vector<Vector> candidate = basis;
    for (std::size_t j = closed_upto; j < basis.size(); ++j) {
      const DenseMatrix tj = alg->product_matrix(basis[j]);
      for (std::size_t i = 0; i <= j; ++i) candidate.push_back(tj * basis[i]);
    }
    closed_upto = basis.size();
    basis = gram_schmidt(candidate, alg->gram(), tol);
  }
  SubalgebraBasis out{alg, {}, include_unit};
  for (auto& v : basis) out.basis.push_back(alg->element(std::move(v)));
  if (!include_unit) out.contains_unit = distance_to_span(out, alg->unit()) <= tol::kCommute;
  return out;
}

double distance_to_span(const SubalgebraBasis& b, const Element& x) {
  Vector r = x.coords();
  for (const auto& q : b.basis) r -= b.algebra->inner(q.coords(), r) * q.coords();
  return b.algebra->norm(r) / (1.0 + x.norm());
}

Check associativity(const SubalgebraBasis& b, double tol) {
  Check c;
  const Algebra& alg = *b.algebra;
  std::vector<DenseMatrix> t;
  for (const auto& x : b.basis) t.push_back(alg.product_matrix(x.coords()));
  for (std::size_t i = 0; i < b.basis.size(); ++i) {
    for (std::size_t j = 0; j < b.basis.size(); ++j) {
      const Vector xy = t[i] * b.basis[j].coords();
      const DenseMatrix txy = alg.product_matrix(xy);
      for (std::size_t k = 0; k < b.basis.size(); ++k) {
        const Vector& z = b.basis[k].coords();
        const double r = alg.norm(txy * z - t[i] * (t[j] * z)) /
                         scale3(b.basis[i], b.basis[j], b.basis[k]);
        c.worst = std::max(c.worst, r);
        if (c.worst > kDecisive * tol) {
          c.holds = false;
          return c;
        }
      }
    }
  }
  c.holds = c.worst <= tol;
  return c;
}

Check mutual_commutation(const SubalgebraBasis& b, double tol) {
  Check c;
  for (std::size_t i = 0; i < b.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < b.basis.size(); ++j) {
      c.worst = std::max(c.worst, commute_residual(b.basis[i], b.basis[j]));
      if (c.worst > kDecisive * tol) {
        c.holds = false;
        return c;
      }
    }
  }
  c.holds = c.worst <= tol;
  return c;
}

Check product_closure(const SubalgebraBasis& b, double tol) {
  Check c;
  for (std::size_t i = 0; i < b.basis.size(); ++i) {
    for (std::size_t j = i; j < b.basis.size(); ++j) {
      const Element xy = jordan_mul(b.basis[i], b.basis[j]);
      const double r = distance_to_span(b, xy) * (1.0 + xy.norm()) /
                       ((1.0 + b.basis[i].norm()) * (1.0 + b.basis[j].norm()));
      c.worst = std::max(c.worst, r);
    }
  }
  c.holds = c.worst <= tol;
  return c;
}

bool is_associative(const SubalgebraBasis& b, double tol) { return associativity(b, tol).holds; }
bool is_mutually_commuting(const SubalgebraBasis& b, double tol) {
  return mutual_commutation(b, tol).holds;
}

const char* to_string(Verdict v) { return v == Verdict::Consistent ? "Consistent" : "Inconsistent"; }

bool TheoremReport::borderline() const {
  return std::any_of(residuals.begin(), residuals.end(), [](const auto& r) { return r.borderline; });
}

double q_identity_residual(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const Element a2 = jordan_mul(a, a);
  const Element b2 = jordan_mul(b, b);
  const Element diff = q_operator(a).apply(b2) - q_operator(b).apply(a2);
  const double sa = 1.0 + a.norm(), sb = 1.0 + b.norm();
  return diff.norm() / (sa * sa * sb * sb);
}

namespace {

double squares_residual(const Element& a, const Element& b) {
  const Element a2 = jordan_mul(a, a);
  const Element b2 = jordan_mul(b, b);
  return std::max({commute_residual(a, b), commute_residual(a, b2), commute_residual(a2, b),
                   commute_residual(a2, b2)});
}

}  // namespace

TheoremReport theorem_report(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  TheoremReport rep;
  auto record = [&](const char* name, double value) {
    rep.residuals.push_back({name, value, is_borderline(value, tol)});
    return value <= tol;
  };

  rep.op_commute = record("op_commute", commute_residual(a, b));

  const SubalgebraBasis sub = generate_subalgebra({a, b}, true);
  rep.subalgebra_dim = sub.dim();
  const Check assoc = associativity(sub, tol);
  rep.assoc = record("assoc", assoc.worst) && assoc.holds;
  const Check mutual = mutual_commutation(sub, tol);
  rep.assoc_mutual = record("mutual", mutual.worst) && mutual.holds && rep.assoc;

  rep.squares_commute = record("squares", squares_residual(a, b));

  bool consistent = rep.op_commute == rep.assoc && rep.assoc == rep.assoc_mutual &&
                    rep.assoc_mutual == rep.squares_commute;
  rep.positivity.applicable = is_positive(a) || is_positive(b);
  if (rep.positivity.applicable) {
    rep.positivity.q_identity = record("q_identity", q_identity_residual(a, b));
    consistent = consistent && rep.positivity.q_identity == rep.op_commute;
  }
  rep.verdict = consistent ? Verdict::Consistent : Verdict::Inconsistent;
  return rep;
}

CommutingClosure two_generator_commuting_closure(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  const Element a2 = jordan_mul(a, a);
  if (!operator_commute(a, b, tol)) throw Error(ErrorCode::NotApplicable, "a and b do not operator commute");
  if (!operator_commute(b, a2, tol)) throw Error(ErrorCode::NotApplicable, "b does not operator commute with a^2");
  CommutingClosure out;
  out.a_commutes_b2 = operator_commute(a, jordan_mul(b, b), tol);
  out.closure = generate_subalgebra({a, b}, true);
  out.associative = is_associative(out.closure, tol);
  out.mutually_commuting = is_mutually_commuting(out.closure, tol);
  return out;
}

QPanel q_commutation_panel(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  QPanel p;
  const Algebra& alg = *a.algebra();
  const DenseMatrix qa = q_operator(a).entries();
  const DenseMatrix qb = q_operator(b).entries();
  p.qq_residual = alg.operator_norm(qa * qb - qb * qa) /
                  ((1.0 + alg.operator_norm(qa)) * (1.0 + alg.operator_norm(qb)));
  p.qq_commute = p.qq_residual <= tol;
  p.q_cross_residual = q_identity_residual(a, b);
  p.q_cross_identity = p.q_cross_residual <= tol;
  p.full_residual = squares_residual(a, b);
  p.full_commute = p.full_residual <= tol;
  p.positivity_applicable = is_positive(a) || is_positive(b);
  p.agree = p.qq_commute == p.q_cross_identity && p.q_cross_identity == p.full_commute;
  return p;
}

}  // namespace jordanlab
