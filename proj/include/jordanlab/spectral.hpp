#pragma once

// Spectral theory of single elements: the associative subalgebra J(a) of
// polynomials in a, its primitive idempotents and the resulting functional
// calculus, positivity and order-unit norm.

#include "jordanlab/algebra.hpp"

#include <functional>
#include <vector>

namespace jordanlab {

namespace tol {
inline constexpr double kCluster = 1e-7;   // merge eigenvalues closer than this * (1+|a|)
inline constexpr double kPositive = 1e-9;  // eigenvalues >= -kPositive * (1+|a|) count as >= 0
}  // namespace tol

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // distinct, ascending
  std::vector<Element> idempotents; // one per eigenvalue, summing to the unit
};

/// Throws NumericalFailure if the decomposition invariants cannot be met.
SpectralDecomposition spectral_decompose(const Element& a);

/// Orthonormal basis (in the algebra inner product) of J(a) = span{1, a, a^2, ...}.
std::vector<Element> polynomial_subalgebra(const Element& a, double tol = tol::kBase);

/// sum_i f(lambda_i) p_i. Throws DomainError if f is not finite at an eigenvalue.
Element apply_function(const Element& a, const std::function<double(double)>& f);
Element apply_function(const SpectralDecomposition& sd, const std::function<double(double)>& f);

double positivity_threshold(const Element& a);
bool is_positive(const Element& a);

/// Positive square root. Eigenvalues within the positivity threshold below
/// zero are clamped to zero; throws NotPositive otherwise.
Element sqrt(const Element& a);

/// max |lambda_i|.
double order_unit_norm(const Element& a);

double min_eigenvalue(const Element& a);
double max_eigenvalue(const Element& a);

}  // namespace jordanlab
