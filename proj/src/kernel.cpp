#include "jordanlab/kernel.hpp"

#include "jordanlab/error.hpp"

#include <cmath>
#include <string>

namespace jordanlab {

EigenResult sym_eigen(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  if (m.size() == 0) return {Vector(0), DenseMatrix(0, 0)};
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= tol::kSymmetry * scale)) {
    throw Error(ErrorCode::NotSymmetric, "asymmetry " + std::to_string(asym));
  }
  // Symmetrize so rounding in the input does not leak into the solver.
  const DenseMatrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

DenseMatrix nullspace(const DenseMatrix& m, double tol) {
  const auto cols = m.cols();
  if (cols == 0) return DenseMatrix(0, 0);
  if (m.rows() == 0) return DenseMatrix::Identity(cols, cols);
  // Jacobi SVD (QR-preconditioned for tall inputs) resolves tiny singular
  // values to full relative accuracy; BDCSVD in Eigen 3.4 misplaces them.
  Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double threshold = tol * (1.0 + m.norm());
  const DenseMatrix& v = svd.matrixV();
  std::vector<Eigen::Index> kernel_cols;
  for (Eigen::Index i = 0; i < cols; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= threshold) kernel_cols.push_back(i);
  }
  DenseMatrix basis(cols, static_cast<Eigen::Index>(kernel_cols.size()));
  for (std::size_t k = 0; k < kernel_cols.size(); ++k) {
    basis.col(static_cast<Eigen::Index>(k)) = v.col(kernel_cols[k]);
  }
  return basis;
}

void check_gram(const DenseMatrix& gram) {
  if (gram.rows() != gram.cols()) throw Error(ErrorCode::DegenerateGram, "gram not square");
  if (gram.size() == 0) return;
  const double scale = 1.0 + gram.cwiseAbs().maxCoeff();
  if (!((gram - gram.transpose()).cwiseAbs().maxCoeff() <= tol::kSymmetry * scale)) {
    throw Error(ErrorCode::DegenerateGram, "gram not symmetric");
  }
  Eigen::LLT<DenseMatrix> llt(0.5 * (gram + gram.transpose()));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::DegenerateGram, "gram not positive definite");
  }
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, const DenseMatrix& gram,
                                 double tol) {
  check_gram(gram);
  std::vector<Vector> out;
  std::vector<Vector> gram_out;  // gram * q for each q in out
  for (const Vector& v : vectors) {
    if (v.size() != gram.rows()) {
      throw Error(ErrorCode::NotSquare, "vector length does not match gram");
    }
    const double input_norm = std::sqrt(std::max(0.0, v.dot(gram * v)));
    Vector r = v;
    // Two passes of classical projection ("twice is enough").
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < out.size(); ++k) r -= gram_out[k].dot(r) * out[k];
    }
    Vector gr = gram * r;
    const double res = std::sqrt(std::max(0.0, r.dot(gr)));
    if (res <= tol * (1.0 + input_norm)) continue;
    out.push_back(r / res);
    gram_out.push_back(gr / res);
  }
  return out;
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  // sigma_max^2 is the top eigenvalue of the smaller Gram product.
  const DenseMatrix g = m.rows() < m.cols() ? DenseMatrix(m * m.transpose())
                                            : DenseMatrix(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

}  // namespace jordanlab
