#include "jordanlab/algebra.hpp"

#include "jordanlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace jordanlab {

namespace {

constexpr double kStructureTol = 1e-10;
constexpr double kJordanTol = 1e-8;
constexpr int kValidationProbes = 8;
constexpr std::uint64_t kValidationSeed = 0x6a6f7264616eULL;

[[noreturn]] void invalid(const std::string& name, const std::string& what) {
  throw Error(ErrorCode::InvalidDescriptor, name + ": " + what);
}

}  // namespace

Algebra::Algebra(AlgebraData data) : data_(std::move(data)) {}

AlgebraPtr Algebra::create(AlgebraData data) {
  const auto n = static_cast<Eigen::Index>(data.unit.size());
  const std::string& name = data.name;
  if (n == 0) invalid(name, "empty basis");
  if (data.basis_labels.size() != static_cast<std::size_t>(n)) invalid(name, "label count");
  if (data.structure.size() != static_cast<std::size_t>(n)) invalid(name, "structure size");
  for (const auto& t : data.structure) {
    if (t.rows() != n || t.cols() != n) invalid(name, "structure slice shape");
    if (!t.allFinite()) invalid(name, "non-finite structure constant");
  }
  if (data.gram.rows() != n || data.gram.cols() != n || !data.gram.allFinite()) {
    invalid(name, "gram shape");
  }
  if (!data.unit.allFinite()) invalid(name, "non-finite unit");
  try {
    check_gram(data.gram);
  } catch (const Error& e) {
    invalid(name, e.what());
  }

  auto alg = std::shared_ptr<Algebra>(new Algebra(std::move(data)));
  const auto& d = alg->data_;
  ValidationReport& report = alg->validation_;

  double cmax = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    cmax = std::max(cmax, d.structure[static_cast<std::size_t>(i)].cwiseAbs().maxCoeff());
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto diff = (d.structure[static_cast<std::size_t>(i)].col(j) -
                         d.structure[static_cast<std::size_t>(j)].col(i))
                            .cwiseAbs()
                            .maxCoeff();
      report.commutativity = std::max(report.commutativity, diff);
    }
  }
  if (report.commutativity > kStructureTol * (1.0 + cmax)) invalid(name, "product not commutative");

  const EigenResult ge = sym_eigen(d.gram);
  alg->gram_sqrt_ = ge.eigenvectors * ge.eigenvalues.cwiseSqrt().asDiagonal() *
                    ge.eigenvectors.transpose();
  alg->gram_inv_sqrt_ = ge.eigenvectors * ge.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                        ge.eigenvectors.transpose();
  alg->gram_is_identity_ = (d.gram - DenseMatrix::Identity(n, n)).cwiseAbs().maxCoeff() == 0.0;

  report.unit_law = alg->operator_norm(alg->product_matrix(d.unit) - DenseMatrix::Identity(n, n));
  if (report.unit_law > kStructureTol * (1.0 + cmax) * static_cast<double>(n)) {
    invalid(name, "unit law fails");
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    const DenseMatrix gt = d.gram * d.structure[static_cast<std::size_t>(i)];
    report.self_adjointness =
        std::max(report.self_adjointness, (gt - gt.transpose()).cwiseAbs().maxCoeff());
  }
  if (report.self_adjointness > kStructureTol * (1.0 + cmax) * (1.0 + d.gram.norm())) {
    invalid(name, "product operators not self-adjoint");
  }

  std::mt19937_64 rng(kValidationSeed);
  std::normal_distribution<double> normal;
  for (int p = 0; p < kValidationProbes; ++p) {
    Vector a(n), b(n);
    for (Eigen::Index i = 0; i < n; ++i) a(i) = normal(rng);
    for (Eigen::Index i = 0; i < n; ++i) b(i) = normal(rng);
    const Vector a2 = alg->multiply(a, a);
    const Vector lhs = alg->multiply(alg->multiply(a, b), a2);
    const Vector rhs = alg->multiply(a, alg->multiply(b, a2));
    const double na = alg->norm(a);
    const double scale = std::pow(1.0 + na, 3) * (1.0 + alg->norm(b));
    report.jordan_identity = std::max(report.jordan_identity, alg->norm(lhs - rhs) / scale);
  }
  report.probes = kValidationProbes;
  if (report.jordan_identity > kJordanTol) invalid(name, "Jordan identity fails");

  return alg;
}

Element Algebra::element(Vector coords) const {
  return Element(shared_from_this(), std::move(coords));
}
Element Algebra::unit() const { return element(data_.unit); }
Element Algebra::zero() const { return element(Vector::Zero(dim())); }
Element Algebra::basis(int i) const { return element(Vector::Unit(dim(), i)); }

double Algebra::norm(const Vector& x) const { return std::sqrt(std::max(0.0, inner(x, x))); }

double Algebra::operator_norm(const DenseMatrix& m) const {
  if (gram_is_identity_) return spectral_norm(m);
  return spectral_norm(gram_sqrt_ * m * gram_inv_sqrt_);
}

DenseMatrix Algebra::product_matrix(const Vector& x) const {
  const auto n = static_cast<Eigen::Index>(dim());
  DenseMatrix t = DenseMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) != 0.0) t += x(i) * data_.structure[static_cast<std::size_t>(i)];
  }
  return t;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const { return product_matrix(x) * y; }

// ---------------------------------------------------------------------------

Element::Element(AlgebraPtr algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw Error(ErrorCode::AlgebraMismatch, "element without algebra");
  if (coords_.size() != algebra_->dim()) {
    throw Error(ErrorCode::AlgebraMismatch, "coordinate length " + std::to_string(coords_.size()) +
                                                " for algebra of dimension " +
                                                std::to_string(algebra_->dim()));
  }
  if (!coords_.allFinite()) throw Error(ErrorCode::DomainError, "non-finite coordinates");
}

double Element::norm() const { return algebra_->norm(coords_); }

Element Element::operator+(const Element& other) const {
  require_same_algebra(*this, other);
  return Element(algebra_, coords_ + other.coords_);
}
Element Element::operator-(const Element& other) const {
  require_same_algebra(*this, other);
  return Element(algebra_, coords_ - other.coords_);
}
Element Element::operator-() const { return Element(algebra_, -coords_); }
Element Element::operator*(double s) const { return Element(algebra_, s * coords_); }

// ---------------------------------------------------------------------------

OperatorMatrix::OperatorMatrix(AlgebraPtr algebra, DenseMatrix entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries)) {}

Element OperatorMatrix::apply(const Element& x) const {
  if (!same_algebra(*algebra_, *x.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, algebra_->name() + " vs " + x.algebra()->name());
  }
  return Element(algebra_, entries_ * x.coords());
}

namespace {
void require_same(const OperatorMatrix& s, const OperatorMatrix& t) {
  if (!same_algebra(*s.algebra(), *t.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, s.algebra()->name() + " vs " + t.algebra()->name());
  }
}
}  // namespace

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& other) const {
  require_same(*this, other);
  return {algebra_, entries_ + other.entries_};
}
OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  require_same(*this, other);
  return {algebra_, entries_ - other.entries_};
}
OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& other) const {
  require_same(*this, other);
  return {algebra_, entries_ * other.entries_};
}
OperatorMatrix OperatorMatrix::operator*(double s) const { return {algebra_, s * entries_}; }

// ---------------------------------------------------------------------------

bool same_algebra(const Algebra& a, const Algebra& b) {
  return &a == &b || (a.name() == b.name() && a.dim() == b.dim());
}

void require_same_algebra(const Element& x, const Element& y) {
  if (!same_algebra(*x.algebra(), *y.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, x.algebra()->name() + " vs " + y.algebra()->name());
  }
}

Element jordan_mul(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  return Element(x.algebra(), x.algebra()->multiply(x.coords(), y.coords()));
}

OperatorMatrix t_operator(const Element& a) {
  return {a.algebra(), a.algebra()->product_matrix(a.coords())};
}

OperatorMatrix q_operator(const Element& a) {
  const DenseMatrix t = a.algebra()->product_matrix(a.coords());
  const DenseMatrix t_sq = a.algebra()->product_matrix(a.algebra()->multiply(a.coords(), a.coords()));
  return {a.algebra(), 2.0 * t * t - t_sq};
}

OperatorMatrix commutator(const OperatorMatrix& s, const OperatorMatrix& t) { return s * t - t * s; }

Element power(const Element& a, int n) {
  if (n < 0) throw Error(ErrorCode::DomainError, "negative exponent");
  Element result = a.algebra()->unit();
  for (int k = 0; k < n; ++k) result = jordan_mul(a, result);
  return result;
}

double IdentityResiduals::max() const {
  return std::max({t_a_t_a2, linearized, cyclic, t_expansion, fundamental});
}

IdentityResiduals identity_residuals(const Element& a, const Element& b, const Element& c) {
  require_same_algebra(a, b);
  require_same_algebra(a, c);
  const Algebra& alg = *a.algebra();
  auto t = [&](const Vector& x) { return alg.product_matrix(x); };
  auto comm = [](const DenseMatrix& x, const DenseMatrix& y) -> DenseMatrix { return x * y - y * x; };

  const Vector a2 = alg.multiply(a.coords(), a.coords());
  const Vector ab = alg.multiply(a.coords(), b.coords());
  const Vector bc = alg.multiply(b.coords(), c.coords());
  const Vector ca = alg.multiply(c.coords(), a.coords());
  const DenseMatrix ta = t(a.coords()), tb = t(b.coords()), tc = t(c.coords());
  const DenseMatrix ta2 = t(a2), tab = t(ab), tbc = t(bc), tca = t(ca);

  IdentityResiduals r;
  r.t_a_t_a2 = alg.operator_norm(comm(ta, ta2));
  r.linearized = alg.operator_norm(comm(tb, ta2) - 2.0 * comm(tab, ta));
  r.cyclic = alg.operator_norm(comm(ta, tbc) + comm(tb, tca) + comm(tc, tab));
  const DenseMatrix expansion = ta * tbc + tb * tca + tc * tab - tb * ta * tc - tc * ta * tb;
  r.t_expansion = alg.operator_norm(t(alg.multiply(a.coords(), bc)) - expansion);

  const DenseMatrix qa = q_operator(a).entries();
  const DenseMatrix qb = q_operator(b).entries();
  const Element qab(a.algebra(), qa * b.coords());
  r.fundamental = alg.operator_norm(q_operator(qab).entries() - qa * qb * qa);
  r.scale = (1.0 + a.norm()) * (1.0 + b.norm()) * (1.0 + c.norm());
  return r;
}

}  // namespace jordanlab
