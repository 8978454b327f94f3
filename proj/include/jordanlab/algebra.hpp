#pragma once

// Finite-dimensional real Jordan algebras given by structure constants.
//
// An algebra is described by a basis e_0..e_{n-1}, structure constants
// c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k, an inner-product Gram
// matrix and the coordinates of the unit. Everything downstream (products,
// T_a, Q_a, spectra) goes through the structure tensor, so special and
// exceptional algebras share one code path.

#include "jordanlab/kernel.hpp"

#include <memory>
#include <string>
#include <vector>

namespace jordanlab {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Raw description of an algebra, before validation.
struct AlgebraData {
  std::string name;
  std::vector<std::string> basis_labels;
  // structure[i](k, j) = c[i][j][k], i.e. the matrix of T_{e_i}.
  std::vector<DenseMatrix> structure;
  DenseMatrix gram;
  Vector unit;
};

/// Residuals measured by descriptor validation.
struct ValidationReport {
  double commutativity = 0.0;   // max |c[i][j][k] - c[j][i][k]|
  double unit_law = 0.0;        // ||T_unit - I||
  double jordan_identity = 0.0; // worst relative residual over random probes
  double self_adjointness = 0.0;// max over basis of ||G T_i - (G T_i)^T||
  int probes = 0;
};

class Element;

/// Immutable, validated Euclidean Jordan algebra descriptor.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validates `data` and throws Error(InvalidDescriptor) on any violation.
  static AlgebraPtr create(AlgebraData data);

  const std::string& name() const { return data_.name; }
  int dim() const { return static_cast<int>(data_.unit.size()); }
  const std::vector<std::string>& basis_labels() const { return data_.basis_labels; }
  const DenseMatrix& gram() const { return data_.gram; }
  const DenseMatrix& basis_operator(int i) const { return data_.structure[static_cast<std::size_t>(i)]; }
  double structure(int i, int j, int k) const { return basis_operator(i)(k, j); }
  const ValidationReport& validation() const { return validation_; }

  Element element(Vector coords) const;
  Element unit() const;
  Element zero() const;
  Element basis(int i) const;

  double inner(const Vector& x, const Vector& y) const { return x.dot(data_.gram * y); }
  double norm(const Vector& x) const;

  /// Operator norm induced by the algebra's inner product.
  double operator_norm(const DenseMatrix& m) const;

  /// Matrix of T_x for coordinates x.
  DenseMatrix product_matrix(const Vector& x) const;
  Vector multiply(const Vector& x, const Vector& y) const;

 private:
  explicit Algebra(AlgebraData data);

  AlgebraData data_;
  DenseMatrix gram_sqrt_;
  DenseMatrix gram_inv_sqrt_;
  bool gram_is_identity_ = false;
  ValidationReport validation_;
};

/// Coordinates of an algebra element in its descriptor's canonical basis.
class Element {
 public:
  Element(AlgebraPtr algebra, Vector coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_(i); }

  /// Hilbert norm sqrt(<x, x>).
  double norm() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(double s) const;
  friend Element operator*(double s, const Element& x) { return x * s; }

 private:
  AlgebraPtr algebra_;
  Vector coords_;
};

/// Dense operator on an algebra's coordinate space: T_a, Q_a, commutators.
class OperatorMatrix {
 public:
  OperatorMatrix(AlgebraPtr algebra, DenseMatrix entries);

  const AlgebraPtr& algebra() const { return algebra_; }
  const DenseMatrix& entries() const { return entries_; }

  Element apply(const Element& x) const;
  double norm() const { return algebra_->operator_norm(entries_); }

  OperatorMatrix operator+(const OperatorMatrix& other) const;
  OperatorMatrix operator-(const OperatorMatrix& other) const;
  OperatorMatrix operator*(const OperatorMatrix& other) const;
  OperatorMatrix operator*(double s) const;

 private:
  AlgebraPtr algebra_;
  DenseMatrix entries_;
};

bool same_algebra(const Algebra& a, const Algebra& b);
void require_same_algebra(const Element& x, const Element& y);

Element jordan_mul(const Element& x, const Element& y);
OperatorMatrix t_operator(const Element& a);
/// Q_a = 2 T_a^2 - T_{a^2}.
OperatorMatrix q_operator(const Element& a);
OperatorMatrix commutator(const OperatorMatrix& s, const OperatorMatrix& t);
/// a^0 = 1, a^n = a * a^{n-1}.
Element power(const Element& a, int n);

/// Operator-norm residuals of the standard Jordan operator identities.
struct IdentityResiduals {
  double t_a_t_a2 = 0.0;          // [T_a, T_{a^2}]
  double linearized = 0.0;        // [T_b, T_{a^2}] - 2 [T_{a*b}, T_a]
  double cyclic = 0.0;            // [T_a,T_{b*c}] + [T_b,T_{c*a}] + [T_c,T_{a*b}]
  double t_expansion = 0.0;       // T_{a*(b*c)} minus its expansion in T's
  double fundamental = 0.0;       // Q_{Q_a b} - Q_a Q_b Q_a
  double scale = 1.0;             // (1+|a|)(1+|b|)(1+|c|)

  double max() const;
};

IdentityResiduals identity_residuals(const Element& a, const Element& b, const Element& c);

}  // namespace jordanlab
