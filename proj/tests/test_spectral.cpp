#include "helpers.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/random.hpp"
#include "jordanlab/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace jordanlab;
using jt::dist;
using jt::el;

TEST_SUITE("spectral") {

TEST_CASE("sigma_z has eigenvalues -1 and 1 with the basis projections") {
  jt::Pauli P;
  const SpectralDecomposition sd = spectral_decompose(P.sz);
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(sd.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(dist(sd.idempotents[0], P.p1) < 1e-12);
  CHECK(dist(sd.idempotents[1], P.p0) < 1e-12);
}

TEST_CASE("spin factor eigenvalues are s +- |u|") {
  const AlgebraPtr s = spin(3).algebra;
  const SpectralDecomposition sd = spectral_decompose(el(s, {1, 3, 4}));
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == doctest::Approx(-4.0));
  CHECK(sd.eigenvalues[1] == doctest::Approx(6.0));
  CHECK(dist(sd.idempotents[1], el(s, {0.5, 0.3, 0.4})) < 1e-12);
}

TEST_CASE("the unit has a single eigenvalue") {
  const AlgebraPtr a = albert().algebra;
  const SpectralDecomposition sd = spectral_decompose(a->unit());
  REQUIRE(sd.eigenvalues.size() == 1);
  CHECK(sd.eigenvalues[0] == doctest::Approx(1.0));
}

TEST_CASE("square roots and functional calculus") {
  const AlgebraPtr r = sym_real(2).algebra;
  CHECK(dist(jordanlab::sqrt(el(r, {4, 9, 0})), el(r, {2, 3, 0})) < 1e-12);
  CHECK(dist(apply_function(el(r, {1, 4, 0}), [](double x) { return std::sqrt(x); }), el(r, {1, 2, 0})) < 1e-12);
  // [[2,1],[1,2]] has sqrt ((sqrt3+1)/2, (sqrt3-1)/2; ...).
  const double s3 = std::sqrt(3.0);
  CHECK(dist(jordanlab::sqrt(el(r, {2, 2, 1})), el(r, {(s3 + 1) / 2, (s3 + 1) / 2, (s3 - 1) / 2})) < 1e-12);
  CHECK_THROWS_AS(jordanlab::sqrt(el(r, {1, -1, 0})), Error);
  try {
    apply_function(el(r, {1, -1, 0}), [](double x) { return std::log(x); });
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("order-unit norm, positivity and extreme eigenvalues") {
  const AlgebraPtr r = sym_real(2).algebra;
  CHECK(order_unit_norm(el(r, {1, -3, 0})) == doctest::Approx(3.0));
  CHECK(order_unit_norm(r->unit()) == doctest::Approx(1.0));
  CHECK(is_positive(el(r, {1, 0, 0})));
  CHECK_FALSE(is_positive(el(r, {1, -1e-3, 0})));
  CHECK(min_eigenvalue(el(r, {2, 2, 1})) == doctest::Approx(1.0));
  CHECK(max_eigenvalue(el(r, {2, 2, 1})) == doctest::Approx(3.0));
}

TEST_CASE("polynomial subalgebra dimension equals the number of distinct eigenvalues") {
  const AlgebraPtr r = sym_real(3).algebra;
  CHECK(polynomial_subalgebra(el(r, {1, 1, 2, 0, 0, 0})).size() == 2);
  CHECK(polynomial_subalgebra(el(r, {1, 2, 3, 0, 0, 0})).size() == 3);
}

TEST_CASE("random reconstruction across families") {
  for (const char* spec : {"sym_r:3", "herm_c:3", "herm_q:2", "spin:5", "albert"}) {
    CAPTURE(spec);
    const AlgebraPtr alg = make_family(spec).algebra;
    for (std::uint64_t t = 0; t < 20; ++t) {
      Rng rng = trial_rng(23, t);
      const Element a = random_element(*alg, rng);
      const SpectralDecomposition sd = spectral_decompose(a);
      Element sum = alg->zero(), units = alg->zero();
      for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        sum = sum + sd.eigenvalues[i] * sd.idempotents[i];
        units = units + sd.idempotents[i];
        CHECK(dist(power(sd.idempotents[i], 2), sd.idempotents[i]) < 1e-8);
      }
      CHECK(dist(sum, a) < 1e-8 * (1 + a.norm()));
      CHECK(dist(units, alg->unit()) < 1e-8);
      const Element p = power(a, 2);
      CHECK(dist(power(jordanlab::sqrt(p), 2), p) < 1e-8 * (1 + p.norm()));
    }
  }
}

}
