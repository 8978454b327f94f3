#include "helpers.hpp"

#include "jordanlab/commutation.hpp"
#include "jordanlab/error.hpp"
#include "jordanlab/random.hpp"

#include <doctest.h>

using namespace jordanlab;
using jt::el;

TEST_SUITE("commutation") {

TEST_CASE("operator commutation of Pauli elements") {
  jt::Pauli P;
  CHECK_FALSE(operator_commute(P.sx, P.sz));
  CHECK(operator_commute(P.p0, P.sz));
  CHECK(operator_commute(P.one, P.sy));
  CHECK(commute_residual(P.sx, P.sz) > 0.1);
}

TEST_CASE("commutants") {
  jt::Pauli P;
  const SubalgebraBasis c = commutant({P.sz});
  CHECK(c.dim() == 2);
  CHECK(c.contains_unit);
  CHECK(distance_to_span(c, P.p0) < 1e-12);
  CHECK(distance_to_span(c, P.sx) > 0.5);

  const AlgebraPtr r = sym_real(2).algebra;
  std::vector<Element> all;
  for (int i = 0; i < r->dim(); ++i) all.push_back(r->basis(i));
  CHECK(commutant(all).dim() == 1);
  CHECK(commutant({r->unit()}).dim() == 3);
}

TEST_CASE("commutant of a diagonal Albert element is closed") {
  const AlgebraPtr a = albert().algebra;
  const SubalgebraBasis c = commutant({a->basis(0)});
  CHECK(c.dim() >= 3);
  CHECK(product_closure(c).holds);
}

TEST_CASE("generated subalgebras") {
  jt::Pauli P;
  const SubalgebraBasis g = generate_subalgebra({P.sx, P.sz}, true);
  CHECK(g.dim() == 3);
  CHECK_FALSE(is_associative(g));
  const SubalgebraBasis d = generate_subalgebra({P.p0, P.sz}, true);
  CHECK(d.dim() == 2);
  CHECK(is_associative(d));
  CHECK(is_mutually_commuting(d));
}

TEST_CASE("theorem reports") {
  jt::Pauli P;
  const TheoremReport no = theorem_report(P.sx, P.sz);
  CHECK_FALSE(no.op_commute);
  CHECK_FALSE(no.assoc);
  CHECK_FALSE(no.assoc_mutual);
  CHECK_FALSE(no.squares_commute);
  CHECK_FALSE(no.positivity.applicable);
  CHECK(no.verdict == Verdict::Consistent);

  const TheoremReport yes = theorem_report(P.p0, P.sz);
  CHECK(yes.op_commute);
  CHECK(yes.assoc);
  CHECK(yes.assoc_mutual);
  CHECK(yes.squares_commute);
  CHECK(yes.positivity.applicable);
  CHECK(yes.positivity.q_identity);
  CHECK(yes.subalgebra_dim == 2);
  CHECK(yes.verdict == Verdict::Consistent);
  CHECK_FALSE(yes.borderline());
}

TEST_CASE("two-generator commuting closure") {
  jt::Pauli P;
  const CommutingClosure c = two_generator_commuting_closure(P.p0, P.sz);
  CHECK(c.associative);
  CHECK(c.mutually_commuting);
  CHECK(c.a_commutes_b2);
  try {
    two_generator_commuting_closure(P.sx, P.sz);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
}

TEST_CASE("Q commutation panel") {
  jt::Pauli P;
  const QPanel shifted = q_commutation_panel(P.sx + 2.0 * P.one, P.sz);
  CHECK(shifted.positivity_applicable);
  CHECK_FALSE(shifted.qq_commute);
  CHECK_FALSE(shifted.q_cross_identity);
  CHECK_FALSE(shifted.full_commute);
  CHECK(shifted.agree);

  const QPanel reflections = q_commutation_panel(P.sx, P.sz);
  CHECK(reflections.qq_commute);
  CHECK(reflections.q_cross_identity);
  CHECK_FALSE(reflections.full_commute);
  CHECK_FALSE(reflections.positivity_applicable);

  const QPanel commuting = q_commutation_panel(P.p0, P.sz + 3.0 * P.one);
  CHECK(commuting.qq_commute);
  CHECK(commuting.q_cross_identity);
  CHECK(commuting.full_commute);
  CHECK(q_identity_residual(P.p0, P.sz) < 1e-15);
}

TEST_CASE("random polynomial pairs commute in every family") {
  for (const char* spec : {"sym_r:3", "herm_q:2", "spin:5", "albert"}) {
    CAPTURE(spec);
    const AlgebraPtr alg = make_family(spec).algebra;
    for (std::uint64_t t = 0; t < 5; ++t) {
      Rng rng = trial_rng(29, t);
      const auto [a, b] = commuting_pair(*alg, rng, CommutingKind::Polynomial);
      CHECK(operator_commute(a, b));
      const auto [x, y] = commuting_pair(*alg, rng, CommutingKind::Commutant);
      CHECK(operator_commute(x, y));
    }
  }
}

}
