#include "jordanlab/spectral.hpp"

#include "jordanlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace jordanlab {

namespace {

constexpr double kCheckTol = 1e-8;

struct Residuals {
  double idempotent = 0.0;
  double orthogonal = 0.0;
  double unit_sum = 0.0;
  double reconstruction = 0.0;
};

Residuals measure(const Element& a, const SpectralDecomposition& sd) {
  Residuals r;
  Element sum = a.algebra()->zero();
  Element recon = a.algebra()->zero();
  for (std::size_t i = 0; i < sd.idempotents.size(); ++i) {
    const Element& p = sd.idempotents[i];
    const double np = 1.0 + p.norm();
    r.idempotent = std::max(r.idempotent, (jordan_mul(p, p) - p).norm() / (np * np));
    for (std::size_t j = i + 1; j < sd.idempotents.size(); ++j) {
      const Element& q = sd.idempotents[j];
      r.orthogonal = std::max(r.orthogonal, jordan_mul(p, q).norm() / (np * (1.0 + q.norm())));
    }
    sum = sum + p;
    recon = recon + sd.eigenvalues[i] * p;
  }
  const Element unit = a.algebra()->unit();
  r.unit_sum = (sum - unit).norm() / (1.0 + unit.norm());
  r.reconstruction = (recon - a).norm() / (1.0 + a.norm());
  return r;
}

bool acceptable(const Residuals& r, double cluster_slack) {
  return r.idempotent <= kCheckTol && r.orthogonal <= kCheckTol && r.unit_sum <= kCheckTol &&
         r.reconstruction <= kCheckTol + cluster_slack;
}

}  // namespace

std::vector<Element> polynomial_subalgebra(const Element& a, double tol) {
  const Algebra& alg = *a.algebra();
  const double na = a.norm();
  // J(a) = J(a / |a|); normalizing keeps the drop tolerance meaningful.
  const Vector scaled = na > 0.0 ? Vector(a.coords() / na) : Vector(a.coords());
  const DenseMatrix t = alg.product_matrix(scaled);
  std::vector<Vector> basis = gram_schmidt({alg.unit().coords()}, alg.gram(), tol);
  while (static_cast<int>(basis.size()) < alg.dim()) {
    std::vector<Vector> candidate = basis;
    candidate.push_back(t * basis.back());
    candidate = gram_schmidt(candidate, alg.gram(), tol);
    if (candidate.size() == basis.size()) break;
    basis = std::move(candidate);
  }
  std::vector<Element> out;
  out.reserve(basis.size());
  for (auto& v : basis) out.push_back(alg.element(std::move(v)));
  return out;
}

SpectralDecomposition spectral_decompose(const Element& a) {
  const Algebra& alg = *a.algebra();
  const std::vector<Element> basis = polynomial_subalgebra(a);
  const auto d = static_cast<Eigen::Index>(basis.size());
  DenseMatrix q(alg.dim(), d);
  for (Eigen::Index i = 0; i < d; ++i) q.col(i) = basis[static_cast<std::size_t>(i)].coords();

  // Multiplication by a restricted to J(a), in the orthonormal basis q.
  const DenseMatrix gq = alg.gram() * q;
  DenseMatrix m = gq.transpose() * alg.product_matrix(a.coords()) * q;
  m = 0.5 * (m + m.transpose());
  const EigenResult eig = sym_eigen(m);
  const Vector unit_in_q = gq.transpose() * alg.unit().coords();

  // J(a) is isomorphic to R^d with pointwise product; its primitive
  // idempotents are the eigenvectors of m scaled to sum to the unit.
  const double delta = tol::kCluster * (1.0 + a.norm());
  SpectralDecomposition sd;
  std::vector<int> cluster_sizes;
  for (Eigen::Index i = 0; i < d; ++i) {
    const Vector v = eig.eigenvectors.col(i);
    const Element p = alg.element(q * (v * v.dot(unit_in_q)));
    const double lambda = eig.eigenvalues(i);
    if (!sd.eigenvalues.empty() && lambda - sd.eigenvalues.back() <= delta) {
      auto& n = cluster_sizes.back();
      sd.eigenvalues.back() = (sd.eigenvalues.back() * n + lambda) / (n + 1);
      sd.idempotents.back() = sd.idempotents.back() + p;
      ++n;
    } else {
      sd.eigenvalues.push_back(lambda);
      sd.idempotents.push_back(p);
      cluster_sizes.push_back(1);
    }
  }

  const double slack = delta * (1.0 + alg.unit().norm()) / (1.0 + a.norm());
  Residuals r = measure(a, sd);
  if (!acceptable(r, slack)) {
    // One Newton-Schulz style pass p <- 3p^2 - 2p^3 pulls near-idempotents back.
    for (auto& p : sd.idempotents) {
      const Element p2 = jordan_mul(p, p);
      p = 3.0 * p2 - 2.0 * jordan_mul(p, p2);
    }
    r = measure(a, sd);
    if (!acceptable(r, slack)) {
      throw Error(ErrorCode::NumericalFailure,
                  "spectral residuals too large (idempotent " + std::to_string(r.idempotent) +
                      ", reconstruction " + std::to_string(r.reconstruction) + ")");
    }
  }
  return sd;
}

Element apply_function(const SpectralDecomposition& sd, const std::function<double(double)>& f) {
  Element out = sd.idempotents.front().algebra()->zero();
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const double value = f(sd.eigenvalues[i]);
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(sd.eigenvalues[i]));
    }
    out = out + value * sd.idempotents[i];
  }
  return out;
}

Element apply_function(const Element& a, const std::function<double(double)>& f) {
  return apply_function(spectral_decompose(a), f);
}

double positivity_threshold(const Element& a) { return tol::kPositive * (1.0 + a.norm()); }

double min_eigenvalue(const Element& a) { return spectral_decompose(a).eigenvalues.front(); }
double max_eigenvalue(const Element& a) { return spectral_decompose(a).eigenvalues.back(); }

bool is_positive(const Element& a) { return min_eigenvalue(a) >= -positivity_threshold(a); }

Element sqrt(const Element& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  const double threshold = positivity_threshold(a);
  if (sd.eigenvalues.front() < -threshold) {
    throw Error(ErrorCode::NotPositive,
                "minimum eigenvalue " + std::to_string(sd.eigenvalues.front()));
  }
  return apply_function(sd, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

double order_unit_norm(const Element& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  return std::max(std::abs(sd.eigenvalues.front()), std::abs(sd.eigenvalues.back()));
}

}  // namespace jordanlab
