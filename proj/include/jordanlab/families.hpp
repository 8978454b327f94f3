#pragma once

// Standard Euclidean Jordan algebra families.
//
// Canonical bases (indices 1-based in labels):
//   matrix families  diagonal units E11..Enn, then for each imaginary unit u_k
//                    (k = 0 real, then i, j, k for quaternions) the
//                    off-diagonal pairs (i<j) in row-major order; the basis
//                    element for (u_k, i, j) has u_k at (i, j) and conj(u_k)
//                    at (j, i).
//   spin:N           unit "1" followed by v1..v{N-1}.
//   albert           E11, E22, E33, then octonion units e0..e7 on the pairs
//                    (1,2), (1,3), (2,3) with the same layout as above.
//
// Inner products: Re tr(xy) for matrix families (so Gram = 1 on diagonal
// units, 2 on off-diagonal ones), 2(st + <u,v>) for spin factors and the
// trace form Tr(x*y) for the Albert algebra.

#include "jordanlab/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jordanlab {

/// Realified associative-matrix representation of a special family.
/// Complex and quaternion entries are replaced by their real left
/// multiplication blocks, so self-adjoint matrices become symmetric ones.
class AmbientRep {
 public:
  AmbientRep(AlgebraPtr algebra, std::vector<DenseMatrix> basis_images);

  const AlgebraPtr& algebra() const { return algebra_; }
  int matrix_size() const { return static_cast<int>(basis_images_.front().rows()); }

  DenseMatrix embed(const Element& x) const;
  /// Inverse of embed on the self-adjoint image (orthogonal projection onto
  /// it for anything else).
  Element extract(const DenseMatrix& m) const;

 private:
  AlgebraPtr algebra_;
  std::vector<DenseMatrix> basis_images_;
  Vector image_norms_sq_;
};

struct Family {
  AlgebraPtr algebra;
  std::optional<AmbientRep> ambient;  // empty for exceptional algebras
};

Family sym_real(int n);
Family herm_complex(int n);
Family herm_quat(int n);
Family spin(int n);
Family albert();

/// Parses "sym_r:N", "herm_c:N", "herm_q:N", "spin:N" or "albert".
/// Throws Error(ParseError) on malformed strings or sizes below the minimum.
Family make_family(const std::string& spec);

bool ambient_commutes(const AmbientRep& rep, const Element& a, const Element& b, double tol = 1e-8);

struct FormulaResidual {
  double residual = 0.0;
  double scale = 1.0;  // (1+|a|)(1+|b|)(1+|c|)
};

/// Compares [T_a, T_b] c with ((ab - ba)c - c(ab - ba)) / 4 computed in the
/// ambient associative algebra.
FormulaResidual residual_formula_check(const AmbientRep& rep, const Element& a, const Element& b,
                                       const Element& c);

}  // namespace jordanlab
