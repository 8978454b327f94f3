#include "jordanlab/suite.hpp"

#include "jordanlab/commutation.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/sea.hpp"
#include "jordanlab/spectral.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace jordanlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFormulaTol = 1e-9;
constexpr double kGenericGap = 1e-4;  // minimum commute residual of a "generic" pair

TrialResult judge(bool ok, double residual, bool borderline = false) {
  if (!ok) return {Outcome::Fail, residual};
  return {borderline ? Outcome::Borderline : Outcome::Pass, residual};
}

bool near(double value, double tol) { return value >= 0.1 * tol && value <= 10.0 * tol; }

CommutingKind kind_for(std::uint64_t trial) {
  static constexpr CommutingKind kinds[] = {CommutingKind::Polynomial, CommutingKind::Commutant,
                                            CommutingKind::Diagonal};
  return kinds[trial % 3];
}

// --- algebra-core ----------------------------------------------------------

TrialResult identities(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Element a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
  const IdentityResiduals r = identity_residuals(a, b, c);
  const double rel = r.max() / r.scale;
  return judge(rel <= o.tol, rel);
}

// --- families ---------------------------------------------------------------

TrialResult jc_bridge(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const AmbientRep& rep = *f.ambient;
  auto [a, b] = trial % 2 == 0 ? commuting_pair(alg, rng, kind_for(trial / 2))
                               : std::pair{random_element(alg, rng), random_element(alg, rng)};
  const Element c = random_element(alg, rng);
  const double cr = commute_residual(a, b);
  const bool agree = (cr <= o.tol) == ambient_commutes(rep, a, b, o.tol);
  const FormulaResidual fr = residual_formula_check(rep, a, b, c);
  const double rel = fr.residual / fr.scale;
  return judge(agree && rel <= kFormulaTol, rel, near(cr, o.tol));
}

// --- commutation ------------------------------------------------------------

double max_residual(const TheoremReport& r) {
  double m = 0.0;
  for (const auto& x : r.residuals) m = std::max(m, x.value);
  return m;
}

TrialResult theorem_commuting(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const auto [a, b] = commuting_pair(*f.algebra, rng, kind_for(trial));
  const TheoremReport r = theorem_report(a, b, o.tol);
  const bool all_true = r.op_commute && r.assoc && r.assoc_mutual && r.squares_commute &&
                        (!r.positivity.applicable || r.positivity.q_identity);
  return judge(r.verdict == Verdict::Consistent && all_true, max_residual(r), r.borderline());
}

TrialResult theorem_generic(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  const Element a = random_element(*f.algebra, rng), b = random_element(*f.algebra, rng);
  const TheoremReport r = theorem_report(a, b, o.tol);
  return judge(r.verdict == Verdict::Consistent, r.residuals.front().value, r.borderline());
}

TrialResult positive_commuting(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const auto [x, y] = commuting_pair(*f.algebra, rng, kind_for(trial));
  const Element a = jordan_mul(x, x), b = jordan_mul(y, y);
  const Element a2 = jordan_mul(a, a), b2 = jordan_mul(b, b);
  const double q = q_identity_residual(a, b);
  const double sa = 1.0 + a.norm(), sb = 1.0 + b.norm();
  const double product_form = (q_operator(a).apply(b2) - jordan_mul(a2, b2)).norm() / (sa * sa * sb * sb);
  const double worst = std::max(q, product_form);
  return judge(worst <= o.tol, worst);
}

TrialResult positive_generic(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  Element a = random_positive(*f.algebra, rng), b = random_positive(*f.algebra, rng);
  // Redraw nearly commuting pairs (e.g. a nearly scalar factor).
  for (int redraw = 0; redraw < 16 && commute_residual(a, b) < kGenericGap; ++redraw) {
    a = random_positive(*f.algebra, rng);
    b = random_positive(*f.algebra, rng);
  }
  const double q = q_identity_residual(a, b);
  const TheoremReport r = theorem_report(a, b, o.tol);
  // Both halves at once: the q-identity fails clearly and so does (d).
  return judge(q > 10.0 * o.tol && !r.squares_commute && r.verdict == Verdict::Consistent, q);
}

TrialResult q_panel(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  Element a = random_positive(alg, rng);
  Element b = random_element(alg, rng);
  if (trial % 2 == 0) {
    auto [x, y] = commuting_pair(alg, rng, kind_for(trial / 2));
    a = jordan_mul(x, x);
    b = y;
  }
  const QPanel p = q_commutation_panel(a, b, o.tol);
  const double worst = std::max({p.qq_residual, p.q_cross_residual, p.full_residual});
  const bool borderline = near(p.qq_residual, o.tol) || near(p.q_cross_residual, o.tol) ||
                          near(p.full_residual, o.tol);
  return judge(p.positivity_applicable && p.agree, trial % 2 == 0 ? worst : p.q_cross_residual, borderline);
}

TrialResult commuting_closure(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  if (trial % 2 == 0) {
    const auto [a, b] = commuting_pair(alg, rng, kind_for(trial / 2));
    const CommutingClosure c = two_generator_commuting_closure(a, b, o.tol);
    return judge(c.associative && c.mutually_commuting && c.a_commutes_b2, commute_residual(a, b));
  }
  const Element a = random_element(alg, rng), b = random_element(alg, rng);
  try {
    two_generator_commuting_closure(a, b, o.tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotApplicable) return judge(true, 0.0);
    throw;
  }
  // Hypotheses held for a generic pair; only legitimate in commutative algebras.
  return judge(is_associative(generate_subalgebra({a, b}, true), o.tol), 0.0);
}

TrialResult commutant_closed(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Element s = trial % 2 == 0 ? random_element(alg, rng) : random_idempotent(alg, rng);
  const SubalgebraBasis c = commutant({s});
  const Check closure = product_closure(c, o.tol);
  double members = 0.0;
  for (const auto& x : c.basis) members = std::max(members, commute_residual(x, s));
  const double worst = std::max(closure.worst, members);
  return judge(closure.holds && members <= o.tol && distance_to_span(c, alg.unit()) <= o.tol, worst);
}

TrialResult idempotent_assoc(const Family& f, Rng& rng, std::uint64_t trial, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Element p = random_idempotent(alg, rng);
  Element a = random_element(alg, rng);
  if (trial % 2 == 0) {
    const SubalgebraBasis c = commutant({p});
    a = alg.zero();
    std::normal_distribution<double> normal;
    for (const auto& x : c.basis) a = a + normal(rng) * x;
  }
  const double cr = commute_residual(a, p);
  const Check assoc = associativity(generate_subalgebra({a, p}, true), o.tol);
  const bool agree = (cr <= o.tol) == assoc.holds;
  return judge(agree, cr, near(cr, o.tol) || near(assoc.worst, o.tol));
}

// --- spectral ---------------------------------------------------------------

TrialResult spectral(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Element a = random_element(alg, rng), b = random_element(alg, rng);
  const SpectralDecomposition sd = spectral_decompose(a);
  double worst = 0.0;
  auto note = [&](double v) { worst = std::max(worst, v); };

  Element recon = alg.zero();
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const Element& p = sd.idempotents[i];
    recon = recon + sd.eigenvalues[i] * p;
    note((jordan_mul(p, p) - p).norm() / (1.0 + p.norm()));
    for (std::size_t j = i + 1; j < sd.eigenvalues.size(); ++j) {
      note(jordan_mul(p, sd.idempotents[j]).norm() / (1.0 + p.norm()));
    }
  }
  note((recon - a).norm() / (1.0 + a.norm()));

  const Element a2 = jordan_mul(a, a);
  const Element s = sqrt(a2);
  note((jordan_mul(s, s) - a2).norm() / (1.0 + a2.norm()));
  note((power(a, 3) - apply_function(sd, [](double x) { return x * x * x; })).norm() /
       std::pow(1.0 + a.norm(), 3));

  const Element b2 = jordan_mul(b, b);
  const bool q_positive = is_positive(q_operator(a).apply(b2));

  const double na = order_unit_norm(a), nb = order_unit_norm(b);
  note(std::max(0.0, order_unit_norm(jordan_mul(a, b)) - na * nb) / (1.0 + na * nb));
  note(std::abs(order_unit_norm(a2) - na * na) / (1.0 + na * na));
  const double nsum = order_unit_norm(a2 + b2);
  note(std::max(0.0, order_unit_norm(a2) - nsum) / (1.0 + nsum));

  // -1 <= a/|a| <= 1  implies  0 <= (a/|a|)^2 <= 1.
  const Element u = a * (1.0 / na);
  const Element u2 = jordan_mul(u, u);
  const bool order_ok = min_eigenvalue(u2) >= -positivity_threshold(u2) &&
                        max_eigenvalue(u2) <= 1.0 + positivity_threshold(u2);

  // |sqrt(x + eta) - sqrt(x)| <= sqrt(eta) on the spectrum.
  const Element sq = sqrt(a2);
  bool continuity_ok = true;
  for (double eta : {1e-2, 1e-4}) {
    const double d = order_unit_norm(sqrt(a2 + eta * alg.unit()) - sq);
    continuity_ok = continuity_ok && d <= std::sqrt(eta) + o.tol * (1.0 + a2.norm());
  }
  return judge(worst <= o.tol && q_positive && order_ok && continuity_ok, worst);
}

// --- sea ---------------------------------------------------------------------

double axiom_worst(const SeaAxiomReport& r) {
  double m = 0.0;
  for (const auto* ax : {&r.ax_a, &r.ax_b, &r.ax_c, &r.ax_d, &r.ax_e}) {
    if (ax->applicable) m = std::max(m, ax->residual);
  }
  return m;
}

Element seq_raw(const Element& a, const Element& b) { return seq_product(Effect(a), Effect(b)).element(); }

TrialResult sea_random(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Effect a(random_effect(alg, rng)), b(random_effect(alg, rng)), c(random_effect(alg, rng));
  const SeaAxiomReport r = sea_axioms(a, b, c);
  // a&b = b&a exactly when a and b operator commute. A product that is only
  // nearly symmetric leaves the converse undecided.
  const double sym = (seq_raw(a.element(), b.element()) - seq_raw(b.element(), a.element())).norm();
  const double bound = tol::kSea * (1.0 + a.element().norm()) * (1.0 + b.element().norm());
  bool bridge = true;
  bool unsettled = r.unsettled();
  if (operator_commute(a.element(), b.element(), o.tol)) {
    bridge = sym <= bound;
  } else if (sym <= tol::kHypothesis * bound) {
    bridge = false;
  } else if (sym <= bound) {
    unsettled = true;
  }
  return judge(r.ok() && bridge, axiom_worst(r), unsettled);
}

TrialResult sea_commuting(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions& o) {
  const Algebra& alg = *f.algebra;
  const Element x = random_element(alg, rng);
  auto effect_of = [&](const Element& p) {
    return Effect(to_effect(jordan_mul(p, p)));
  };
  const Effect a = effect_of(random_polynomial(x, rng));
  const Effect b = effect_of(random_polynomial(x, rng));
  const Effect c = effect_of(random_polynomial(x, rng));
  const SeaAxiomReport r = sea_axioms(a, b, c);
  const Element ab = seq_product(a, b).element();
  const double jordan_gap = (ab - jordan_mul(a.element(), b.element())).norm() /
                            ((1.0 + a.element().norm()) * (1.0 + b.element().norm()));
  const bool bridge = operator_commute(a.element(), b.element(), o.tol) &&
                      (ab - seq_product(b, a).element()).norm() <= tol::kSea;
  return judge(r.ok() && r.ax_d.applicable && r.ax_e.applicable && bridge && jordan_gap <= tol::kSea,
               std::max(axiom_worst(r), jordan_gap));
}

TrialResult sea_orthogonal(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions&) {
  const Algebra& alg = *f.algebra;
  const Element p = random_idempotent(alg, rng);
  const Element q = alg.unit() - p;
  const Element a = to_effect(q_operator(p).apply(random_positive(alg, rng)));
  const Element b = to_effect(q_operator(q).apply(random_positive(alg, rng)));
  const Effect ea(a), eb(b), ec(random_effect(alg, rng));
  const SeaAxiomReport r = sea_axioms(ea, eb, ec);
  const QuadraticZeroReport z = quadratic_zero_check(a, b);
  const double worst = std::max(r.ax_c.residual, z.jordan);
  return judge(r.ok() && r.ax_c.applicable && z.zero_ab && z.consistent, worst);
}

TrialResult sea_continuity(const Family& f, Rng& rng, std::uint64_t, const SuiteOptions&) {
  const Algebra& alg = *f.algebra;
  const Effect a(random_effect(alg, rng)), b(random_effect(alg, rng));
  const Element base = seq_product(a, b).element();
  double previous = kInf;
  bool decreasing = true;
  for (double eta : {1e-2, 1e-4}) {
    const Effect shifted((a.element() + eta * alg.unit()) * (1.0 / (1.0 + eta)));
    const double d = (seq_product(shifted, b).element() - base).norm();
    decreasing = decreasing && d < previous;
    previous = d;
  }
  return judge(decreasing && previous <= 4e-2, previous);
}

const std::vector<PropertySpec> kProperties = {
    {"identities", identities},
    {"jc_bridge", jc_bridge, true},
    {"theorem_commuting", theorem_commuting},
    {"theorem_generic", theorem_generic},
    {"positive_commuting", positive_commuting},
    {"positive_generic", positive_generic, false, true},
    {"q_panel", q_panel},
    {"commuting_closure", commuting_closure},
    {"commutant_closed", commutant_closed},
    {"idempotent_assoc", idempotent_assoc},
    {"spectral", spectral},
    {"sea_random", sea_random},
    {"sea_commuting", sea_commuting},
    {"sea_orthogonal", sea_orthogonal},
    {"sea_continuity", sea_continuity},
};

}  // namespace

const std::vector<PropertySpec>& suite_properties() { return kProperties; }

const PropertySpec& find_property(const std::string& name) {
  for (const auto& p : kProperties) {
    if (name == p.name) return p;
  }
  throw Error(ErrorCode::ParseError, "unknown property '" + name + "'");
}

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& p : properties) n += p.fail;
  return n;
}

PropertyStats run_property(const Family& family, const PropertySpec& property, int trials,
                           std::uint64_t seed, const SuiteOptions& options) {
  PropertyStats stats;
  stats.name = property.name;
  stats.worst = property.lower_is_worse ? kInf : 0.0;
  const auto stream = static_cast<std::uint64_t>(&property - kProperties.data()) + 1;
  for (int t = 0; t < trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    Rng rng = trial_rng(seed, trial, stream);
    TrialResult r;
    try {
      r = property.fn(family, rng, trial, options);
    } catch (const Error&) {
      r = {Outcome::Fail, property.lower_is_worse ? 0.0 : kInf};
    }
    switch (r.outcome) {
      case Outcome::Pass: ++stats.pass; break;
      case Outcome::Fail: ++stats.fail; break;
      case Outcome::Borderline: ++stats.borderline; break;
    }
    stats.worst = property.lower_is_worse ? std::min(stats.worst, r.residual)
                                          : std::max(stats.worst, r.residual);
  }
  return stats;
}

SuiteReport run_suite(const Family& family, int trials, std::uint64_t seed, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.family = family.algebra->name();
  report.seed = seed;
  report.trials = trials;
  for (const auto& p : kProperties) {
    if (p.needs_ambient && !family.ambient) continue;
    report.properties.push_back(run_property(family, p, trials, seed, options));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_records(const SuiteReport& report) {
  std::string out = fmt::format("suite family={} seed={} trials={}\n", report.family, report.seed, report.trials);
  for (const auto& p : report.properties) {
    out += fmt::format("property name={} trials={} pass={} fail={} borderline={} worst={:.6e}\n", p.name,
                       p.trials(), p.pass, p.fail, p.borderline, p.worst);
  }
  out += fmt::format("summary properties={} failures={} status={}\n", report.properties.size(),
                     report.failures(), report.failures() == 0 ? "ok" : "fail");
  return out;
}

std::string format_human(const SuiteReport& report) {
  std::string out = fmt::format("suite {}  seed {}  trials {}\n", report.family, report.seed, report.trials);
  out += fmt::format("  {:<20} {:>6} {:>6} {:>10} {:>14}\n", "property", "pass", "fail", "borderline", "worst");
  for (const auto& p : report.properties) {
    out += fmt::format("  {:<20} {:>6} {:>6} {:>10} {:>14.3e}\n", p.name, p.pass, p.fail, p.borderline, p.worst);
  }
  out += fmt::format("{} failure(s) in {:.2f} s\n", report.failures(), report.elapsed_seconds);
  return out;
}

}  // namespace jordanlab
