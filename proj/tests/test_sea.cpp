#include "helpers.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/random.hpp"
#include "jordanlab/sea.hpp"

#include <doctest.h>

using namespace jordanlab;
using jt::dist;
using jt::el;

TEST_SUITE("sea") {

TEST_CASE("sequential product of Pauli projections") {
  jt::Pauli P;
  CHECK(dist(seq_product(Effect(P.plus), Effect(P.p0)).element(), 0.5 * P.plus) < 1e-12);
  CHECK(dist(seq_product(Effect(P.p0), Effect(P.plus)).element(), 0.5 * P.p0) < 1e-12);
  CHECK(dist(seq_product(Effect(P.p0), Effect(P.p1)).element(), P.alg->zero()) < 1e-12);
  const Element half = 0.5 * P.one;
  CHECK(dist(seq_product(Effect(half), Effect(P.plus)).element(), 0.5 * P.plus) < 1e-12);
}

TEST_CASE("orthosupplement") {
  jt::Pauli P;
  CHECK(dist(perp(Effect(P.p0)).element(), P.p1) < 1e-15);
  CHECK(dist(perp(Effect(P.alg->zero())).element(), P.one) < 1e-15);
}

TEST_CASE("effects are validated") {
  jt::Pauli P;
  CHECK(Effect::is_effect(P.plus));
  CHECK_FALSE(Effect::is_effect(P.sz));
  CHECK_FALSE(Effect::is_effect(2.0 * P.p0));
  try {
    Effect e(P.sz);
    FAIL("expected NotAnEffect");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEffect);
  }
}

TEST_CASE("axiom examples") {
  jt::Pauli P;
  const SeaAxiomReport orth = sea_axioms(Effect(P.p0), Effect(P.p1), Effect(P.plus));
  CHECK(orth.ax_c.applicable);
  CHECK(orth.ax_c.holds);
  CHECK(orth.ax_d.applicable);
  CHECK(orth.ok());

  const SeaAxiomReport generic = sea_axioms(Effect(P.plus), Effect(P.p0), Effect(0.25 * P.p1));
  CHECK_FALSE(generic.ax_c.applicable);
  CHECK_FALSE(generic.ax_d.applicable);
  CHECK(generic.ax_a.applicable);
  CHECK(generic.ax_b.holds);
  CHECK(generic.ok());
}

TEST_CASE("axioms hold on random effects") {
  for (const char* spec : {"herm_c:3", "spin:5", "albert"}) {
    CAPTURE(spec);
    const AlgebraPtr alg = make_family(spec).algebra;
    for (std::uint64_t t = 0; t < 10; ++t) {
      Rng rng = trial_rng(31, t);
      const Effect a(random_effect(*alg, rng)), b(random_effect(*alg, rng)), c(random_effect(*alg, rng));
      CHECK(sea_axioms(a, b, c).ok());
    }
  }
}

TEST_CASE("quadratic zero check") {
  jt::Pauli P;
  const QuadraticZeroReport z = quadratic_zero_check(P.p0, P.p1);
  CHECK(z.zero_ab);
  CHECK(z.zero_ba);
  CHECK(z.consistent);
  const QuadraticZeroReport nz = quadratic_zero_check(P.p0, P.plus);
  CHECK_FALSE(nz.zero_ab);
  CHECK_FALSE(nz.zero_ba);
  CHECK(nz.consistent);
  CHECK_THROWS_AS(quadratic_zero_check(P.sz, P.p0), Error);
}

}
