#include "helpers.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/random.hpp"

#include <doctest.h>

using namespace jordanlab;
using jt::dist;
using jt::el;

TEST_SUITE("algebra") {

TEST_CASE("Pauli products in herm_c:2") {
  jt::Pauli P;
  CHECK(dist(jordan_mul(P.sx, P.sz), P.alg->zero()) < 1e-15);
  CHECK(dist(jordan_mul(P.sx, P.sx), P.one) < 1e-15);
  CHECK(dist(jordan_mul(P.sy, P.sy), P.one) < 1e-15);
  CHECK(dist(q_operator(P.sx).apply(P.sz), -P.sz) < 1e-15);
  CHECK(dist(q_operator(P.sx).apply(P.p0), P.p1) < 1e-15);
}

TEST_CASE("spin factor product") {
  const AlgebraPtr s = spin(3).algebra;
  const Element x = el(s, {1, 2, 3});
  const Element y = el(s, {4, 5, 6});
  // (s,u)*(t,v) = (st + <u,v>, sv + tu)
  CHECK(dist(jordan_mul(x, y), el(s, {4 + 10 + 18, 5 + 8, 6 + 12})) < 1e-13);
  CHECK(x.norm() == doctest::Approx(std::sqrt(2.0 * 14.0)));
}

TEST_CASE("T is linear and Q_{a^2} = Q_a^2") {
  for (const char* spec : {"sym_r:3", "herm_q:2", "spin:5", "albert"}) {
    CAPTURE(spec);
    const AlgebraPtr alg = make_family(spec).algebra;
    Rng rng = trial_rng(3, 0);
    const Element a = random_element(*alg, rng);
    const Element b = random_element(*alg, rng);
    const DenseMatrix lhs = t_operator(2.0 * a - b).entries();
    const DenseMatrix rhs = (t_operator(a) * 2.0 - t_operator(b)).entries();
    CHECK((lhs - rhs).norm() < 1e-12 * (1 + lhs.norm()));
    const OperatorMatrix qa = q_operator(a);
    CHECK((q_operator(power(a, 2)) - qa * qa).norm() < 1e-10 * (1 + qa.norm() * qa.norm()));
  }
}

TEST_CASE("powers") {
  jt::Pauli P;
  CHECK(dist(power(P.sx, 0), P.one) == 0.0);
  CHECK(dist(power(P.sz, 3), P.sz) < 1e-15);
  const Element a = el(P.alg, {2, 0, 0, 0});
  CHECK(dist(power(a, 5), el(P.alg, {32, 0, 0, 0})) < 1e-12);
  CHECK_THROWS_AS(power(a, -1), Error);
}

TEST_CASE("identity residuals vanish on random triples") {
  const AlgebraPtr alg = albert().algebra;
  for (std::uint64_t t = 0; t < 5; ++t) {
    Rng rng = trial_rng(5, t);
    const Element a = random_element(*alg, rng);
    const Element b = random_element(*alg, rng);
    const Element c = random_element(*alg, rng);
    const IdentityResiduals r = identity_residuals(a, b, c);
    CHECK(r.max() < 1e-8 * r.scale);
  }
}

TEST_CASE("mixing algebras is rejected") {
  jt::Pauli P;
  const Element s = spin(4).algebra->unit();
  try {
    jordan_mul(P.sx, s);
    FAIL("expected AlgebraMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlgebraMismatch);
  }
}

TEST_CASE("descriptor validation rejects a non-Jordan product") {
  // e0 * e1 = e1 but e1 * e0 = 2 e1.
  AlgebraData d;
  d.name = "bad";
  d.basis_labels = {"a", "b"};
  d.gram = DenseMatrix::Identity(2, 2);
  d.unit = Vector::Unit(2, 0);
  DenseMatrix t0 = DenseMatrix::Identity(2, 2);
  DenseMatrix t1 = DenseMatrix::Zero(2, 2);
  t1(1, 0) = 2.0;
  t1(0, 1) = 1.0;
  d.structure = {t0, t1};
  try {
    Algebra::create(d);
    FAIL("expected InvalidDescriptor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDescriptor);
  }
}

}
