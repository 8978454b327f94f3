#pragma once

#include "jordanlab/algebra.hpp"
#include "jordanlab/families.hpp"

#include <initializer_list>

namespace jt {

inline jordanlab::Element el(const jordanlab::AlgebraPtr& alg, std::initializer_list<double> xs) {
  jordanlab::Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return alg->element(v);
}

inline double dist(const jordanlab::Element& a, const jordanlab::Element& b) { return (a - b).norm(); }

// herm_c:2 coordinates are (E11, E22, X12, Y12) with X12 = sigma_x, Y12 = -sigma_y.
struct Pauli {
  jordanlab::AlgebraPtr alg = jordanlab::herm_complex(2).algebra;
  jordanlab::Element one = el(alg, {1, 1, 0, 0});
  jordanlab::Element sx = el(alg, {0, 0, 1, 0});
  jordanlab::Element sy = el(alg, {0, 0, 0, -1});
  jordanlab::Element sz = el(alg, {1, -1, 0, 0});
  jordanlab::Element p0 = el(alg, {1, 0, 0, 0});
  jordanlab::Element p1 = el(alg, {0, 1, 0, 0});
  jordanlab::Element plus = el(alg, {0.5, 0.5, 0.5, 0});
};

}  // namespace jt
