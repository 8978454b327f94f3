#include "jordanlab/sea.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace jordanlab {

namespace {

Element clamp_to_interval(const Element& x) {
  const SpectralDecomposition sd = spectral_decompose(x);
  const double delta = positivity_threshold(x);
  if (sd.eigenvalues.front() < -delta || sd.eigenvalues.back() > 1.0 + delta) {
    throw Error(ErrorCode::NotAnEffect, "spectrum [" + std::to_string(sd.eigenvalues.front()) + ", " +
                                            std::to_string(sd.eigenvalues.back()) + "] not in [0, 1]");
  }
  if (sd.eigenvalues.front() >= 0.0 && sd.eigenvalues.back() <= 1.0) return x;
  return apply_function(sd, [](double v) { return std::clamp(v, 0.0, 1.0); });
}

Element seq(const Element& a, const Element& b) { return q_operator(sqrt(a)).apply(b); }

}  // namespace

Effect::Effect(const Element& element) : element_(clamp_to_interval(element)) {}

bool Effect::is_effect(const Element& element) {
  const SpectralDecomposition sd = spectral_decompose(element);
  const double delta = positivity_threshold(element);
  return sd.eigenvalues.front() >= -delta && sd.eigenvalues.back() <= 1.0 + delta;
}

Effect seq_product(const Effect& a, const Effect& b) {
  require_same_algebra(a.element(), b.element());
  return Effect(seq(a.element(), b.element()));
}

Effect perp(const Effect& a) { return Effect(a.algebra()->unit() - a.element()); }

bool SeaAxiomReport::ok() const {
  for (const auto* ax : {&ax_a, &ax_b, &ax_c, &ax_d, &ax_e}) {
    if (ax->applicable && !ax->holds) return false;
  }
  return true;
}

bool SeaAxiomReport::unsettled() const {
  for (const auto* ax : {&ax_a, &ax_b, &ax_c, &ax_d, &ax_e}) {
    if (ax->unsettled) return true;
  }
  return false;
}

SeaAxiomReport sea_axioms(const Effect& a, const Effect& b, const Effect& c, double tol) {
  const Element& x = a.element();
  const Element& y = b.element();
  const Element& z = c.element();
  require_same_algebra(x, y);
  require_same_algebra(x, z);
  const double bound = tol * (1.0 + x.norm()) * (1.0 + y.norm()) * (1.0 + z.norm());
  const double hypothesis_bound = tol::kHypothesis * bound;
  const Element unit = x.algebra()->unit();

  SeaAxiomReport rep;
  auto settle = [&](AxiomOutcome& ax, double residual) {
    ax.applicable = true;
    ax.residual = residual;
    ax.holds = residual <= bound;
  };
  // True when the hypothesis clearly holds; marks `ax` when it only nearly does.
  auto given = [&](AxiomOutcome& ax, double hypothesis) {
    if (hypothesis > hypothesis_bound && hypothesis <= bound) ax.unsettled = true;
    return hypothesis <= hypothesis_bound;
  };

  const Element xy = seq(x, y), yx = seq(y, x);
  const Element xz = seq(x, z), zx = seq(z, x);
  const Element sum = y + z;
  const bool sum_is_effect = Effect::is_effect(sum);

  if (sum_is_effect) settle(rep.ax_a, (seq(x, sum) - xy - xz).norm());
  settle(rep.ax_b, (seq(unit, x) - x).norm());

  if (given(rep.ax_c, xy.norm())) settle(rep.ax_c, yx.norm());

  const double ab_gap = (xy - yx).norm();
  const bool ab_commute = given(rep.ax_d, ab_gap);
  if (ab_commute) {
    const Element y_perp = unit - y;
    const double r1 = (seq(x, y_perp) - seq(y_perp, x)).norm();
    const double r2 = (seq(x, seq(y, z)) - seq(xy, z)).norm();
    settle(rep.ax_d, std::max(r1, r2));
  }

  given(rep.ax_e, ab_gap);
  if (ab_commute && given(rep.ax_e, (xz - zx).norm())) {
    const Element yz = seq(y, z);
    double r = (seq(x, yz) - seq(yz, x)).norm();
    if (sum_is_effect) r = std::max(r, (seq(x, sum) - seq(sum, x)).norm());
    settle(rep.ax_e, r);
  }
  return rep;
}

QuadraticZeroReport quadratic_zero_check(const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  if (!is_positive(a) || !is_positive(b)) throw Error(ErrorCode::NotPositive, "quadratic_zero_check");
  QuadraticZeroReport r;
  r.q_ab = q_operator(a).apply(b).norm();
  r.q_ba = q_operator(b).apply(a).norm();
  r.jordan = jordan_mul(a, b).norm();
  const double bound = tol * (1.0 + a.norm()) * (1.0 + b.norm());
  r.zero_ab = r.q_ab <= bound * (1.0 + a.norm());
  r.zero_ba = r.q_ba <= bound * (1.0 + b.norm());
  r.consistent = r.zero_ab == r.zero_ba && (!r.zero_ab || r.jordan <= bound);
  return r;
}

}  // namespace jordanlab
