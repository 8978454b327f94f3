#pragma once

// Dense real linear algebra used by every other module. All tolerances are
// relative: a quantity counts as zero when it is below tol * (1 + norm).

#include <Eigen/Dense>

#include <vector>

namespace jordanlab {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace tol {
inline constexpr double kBase = 1e-9;
inline constexpr double kSymmetry = 1e-10;
inline constexpr double kEigen = 1e-9;
}  // namespace tol

struct EigenResult {
  Vector eigenvalues;        // ascending
  DenseMatrix eigenvectors;  // orthonormal columns, matching eigenvalues
};

/// Symmetric eigendecomposition. Throws NotSquare or NotSymmetric.
EigenResult sym_eigen(const DenseMatrix& m);

/// Orthonormal basis (as columns) of the numerical kernel of `m`: every right
/// singular direction with singular value <= tol * (1 + ||m||_F).
DenseMatrix nullspace(const DenseMatrix& m, double tol = tol::kBase);

/// Gram-Schmidt in the inner product <x, y> = x^T gram y. Vectors whose
/// residual after projection is <= tol * (1 + ||input||) are dropped.
/// Throws DegenerateGram if gram is not symmetric positive definite.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, const DenseMatrix& gram,
                                 double tol = tol::kBase);

/// Largest singular value.
double spectral_norm(const DenseMatrix& m);

/// Throws DegenerateGram unless gram is symmetric positive definite.
void check_gram(const DenseMatrix& gram);

}  // namespace jordanlab
