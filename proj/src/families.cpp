#include "jordanlab/families.hpp"

#include "jordanlab/error.hpp"
#include "jordanlab/octonion.hpp"

#include <array>
#include <charconv>
#include <string>
#include <utility>

namespace jordanlab {

namespace {

constexpr int kMaxMatrixSize = 32;

// Real r x r matrices of left multiplication by the units of R, C or H.
std::vector<DenseMatrix> unit_blocks(int r) {
  std::vector<DenseMatrix> blocks;
  for (int k = 0; k < r; ++k) {
    DenseMatrix m(r, r);
    for (int col = 0; col < r; ++col) {
      Quaternion u, e;
      u.c[static_cast<std::size_t>(k)] = 1.0;
      e.c[static_cast<std::size_t>(col)] = 1.0;
      const Quaternion prod = u * e;  // for r = 2 the i-part of H is C
      for (int row = 0; row < r; ++row) m(row, col) = prod.c[static_cast<std::size_t>(row)];
    }
    blocks.push_back(std::move(m));
  }
  return blocks;
}

std::string pair_label(const std::string& prefix, int i, int j) {
  return prefix + std::to_string(i + 1) + std::to_string(j + 1);
}

Family self_adjoint_matrices(const std::string& name, int n, int r) {
  static const std::array<const char*, 4> prefixes = {"X", "I", "J", "K"};
  const auto blocks = unit_blocks(r);
  const int size = n * r;
  std::vector<DenseMatrix> images;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    DenseMatrix m = DenseMatrix::Zero(size, size);
    m.block(i * r, i * r, r, r).setIdentity();
    images.push_back(std::move(m));
    labels.push_back(pair_label("E", i, i));
  }
  for (int k = 0; k < r; ++k) {
    const std::string prefix = r == 2 && k == 1 ? "Y" : prefixes[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        DenseMatrix m = DenseMatrix::Zero(size, size);
        m.block(i * r, j * r, r, r) = blocks[static_cast<std::size_t>(k)];
        m.block(j * r, i * r, r, r) = blocks[static_cast<std::size_t>(k)].transpose();
        images.push_back(std::move(m));
        labels.push_back(pair_label(prefix, i, j));
      }
    }
  }

  const auto dim = static_cast<Eigen::Index>(images.size());
  AlgebraData data;
  data.name = name;
  data.basis_labels = labels;
  data.structure.assign(images.size(), DenseMatrix::Zero(dim, dim));
  data.gram = DenseMatrix::Zero(dim, dim);
  data.unit = Vector::Zero(dim);
  for (int i = 0; i < n; ++i) data.unit(i) = 1.0;

  Vector norms_sq(dim);
  for (Eigen::Index p = 0; p < dim; ++p) norms_sq(p) = images[static_cast<std::size_t>(p)].squaredNorm();
  for (Eigen::Index p = 0; p < dim; ++p) {
    const auto& bp = images[static_cast<std::size_t>(p)];
    for (Eigen::Index q = 0; q < dim; ++q) {
      const auto& bq = images[static_cast<std::size_t>(q)];
      data.gram(p, q) = (bp.transpose() * bq).trace() / r;
      const DenseMatrix z = 0.5 * (bp * bq + bq * bp);
      for (Eigen::Index m = 0; m < dim; ++m) {
        data.structure[static_cast<std::size_t>(p)](m, q) =
            images[static_cast<std::size_t>(m)].cwiseProduct(z).sum() / norms_sq(m);
      }
    }
  }
  auto algebra = Algebra::create(std::move(data));
  return {algebra, AmbientRep(algebra, std::move(images))};
}

void require_min(const std::string& family, int n, int minimum) {
  if (n < minimum) {
    throw Error(ErrorCode::ParseError,
                family + " requires size >= " + std::to_string(minimum) + ", got " + std::to_string(n));
  }
  if (n > kMaxMatrixSize * kMaxMatrixSize) {
    throw Error(ErrorCode::ParseError, family + " size too large");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

AmbientRep::AmbientRep(AlgebraPtr algebra, std::vector<DenseMatrix> basis_images)
    : algebra_(std::move(algebra)), basis_images_(std::move(basis_images)) {
  image_norms_sq_.resize(static_cast<Eigen::Index>(basis_images_.size()));
  for (std::size_t i = 0; i < basis_images_.size(); ++i) {
    image_norms_sq_(static_cast<Eigen::Index>(i)) = basis_images_[i].squaredNorm();
  }
}

DenseMatrix AmbientRep::embed(const Element& x) const {
  if (!same_algebra(*algebra_, *x.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, algebra_->name() + " vs " + x.algebra()->name());
  }
  DenseMatrix m = DenseMatrix::Zero(basis_images_.front().rows(), basis_images_.front().cols());
  for (int i = 0; i < x.dim(); ++i) m += x[i] * basis_images_[static_cast<std::size_t>(i)];
  return m;
}

Element AmbientRep::extract(const DenseMatrix& m) const {
  const auto& first = basis_images_.front();
  if (m.rows() != first.rows() || m.cols() != first.cols()) {
    throw Error(ErrorCode::AlgebraMismatch, "ambient matrix has the wrong shape");
  }
  Vector coords(image_norms_sq_.size());
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    coords(i) = basis_images_[static_cast<std::size_t>(i)].cwiseProduct(m).sum() / image_norms_sq_(i);
  }
  return algebra_->element(std::move(coords));
}

Family sym_real(int n) {
  require_min("sym_r", n, 1);
  return self_adjoint_matrices("sym_r:" + std::to_string(n), n, 1);
}

Family herm_complex(int n) {
  require_min("herm_c", n, 1);
  return self_adjoint_matrices("herm_c:" + std::to_string(n), n, 2);
}

Family herm_quat(int n) {
  require_min("herm_q", n, 1);
  return self_adjoint_matrices("herm_q:" + std::to_string(n), n, 4);
}

Family spin(int n) {
  require_min("spin", n, 2);
  const auto dim = static_cast<Eigen::Index>(n);
  AlgebraData data;
  data.name = "spin:" + std::to_string(n);
  data.basis_labels.push_back("1");
  for (int i = 1; i < n; ++i) data.basis_labels.push_back("v" + std::to_string(i));
  data.structure.assign(static_cast<std::size_t>(n), DenseMatrix::Zero(dim, dim));
  // (s,u)*(t,v) = (st + <u,v>, sv + tu)
  data.structure[0].setIdentity();
  for (Eigen::Index i = 1; i < dim; ++i) {
    auto& t = data.structure[static_cast<std::size_t>(i)];
    t(i, 0) = 1.0;
    t(0, i) = 1.0;
  }
  data.gram = 2.0 * DenseMatrix::Identity(dim, dim);
  data.unit = Vector::Unit(dim, 0);
  return {Algebra::create(std::move(data)), std::nullopt};
}

Family albert() {
  using OctMatrix = std::array<std::array<Octonion, 3>, 3>;
  constexpr std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  constexpr int dim = 27;

  std::vector<OctMatrix> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < 3; ++i) {
    OctMatrix m{};
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Octonion::unit(0);
    basis.push_back(m);
    labels.push_back(pair_label("E", i, i));
  }
  for (int k = 0; k < 8; ++k) {
    for (const auto& [i, j] : pairs) {
      OctMatrix m{};
      const Octonion u = Octonion::unit(k);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = u;
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = u.conj();
      basis.push_back(m);
      labels.push_back(pair_label("O" + std::to_string(k) + "_", i, j));
    }
  }

  auto product = [](const OctMatrix& x, const OctMatrix& y) {
    OctMatrix z{};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t l = 0; l < 3; ++l) z[i][j] = z[i][j] + x[i][l] * y[l][j];
      }
    }
    return z;
  };
  auto coords_of = [&](const OctMatrix& m) {
    Vector v = Vector::Zero(dim);
    for (std::size_t i = 0; i < 3; ++i) v(static_cast<Eigen::Index>(i)) = m[i][i].real();
    for (int k = 0; k < 8; ++k) {
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        v(3 + k * 3 + static_cast<int>(p)) =
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].c[static_cast<std::size_t>(k)];
      }
    }
    return v;
  };

  AlgebraData data;
  data.name = "albert";
  data.basis_labels = labels;
  data.structure.assign(dim, DenseMatrix::Zero(dim, dim));
  data.gram = DenseMatrix::Zero(dim, dim);
  data.unit = Vector::Zero(dim);
  data.unit.head(3).setOnes();
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) {
      const OctMatrix xy = product(basis[static_cast<std::size_t>(p)], basis[static_cast<std::size_t>(q)]);
      const OctMatrix yx = product(basis[static_cast<std::size_t>(q)], basis[static_cast<std::size_t>(p)]);
      OctMatrix sym{};
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) sym[i][j] = (xy[i][j] + yx[i][j]) * 0.5;
      }
      data.structure[static_cast<std::size_t>(p)].col(q) = coords_of(sym);
      data.gram(p, q) = sym[0][0].real() + sym[1][1].real() + sym[2][2].real();
    }
  }
  return {Algebra::create(std::move(data)), std::nullopt};
}

Family make_family(const std::string& spec) {
  if (spec == "albert") return albert();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "bad family spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string size = spec.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(size.data(), size.data() + size.size(), n);
  if (ec != std::errc() || ptr != size.data() + size.size() || size.empty()) {
    throw Error(ErrorCode::ParseError, "bad size in family spec '" + spec + "'");
  }
  if (kind != "spin" && n > kMaxMatrixSize) {
    throw Error(ErrorCode::ParseError, "matrix size too large in '" + spec + "'");
  }
  if (kind == "sym_r") return sym_real(n);
  if (kind == "herm_c") return herm_complex(n);
  if (kind == "herm_q") return herm_quat(n);
  if (kind == "spin") return spin(n);
  throw Error(ErrorCode::ParseError, "unknown family '" + kind + "'");
}

bool ambient_commutes(const AmbientRep& rep, const Element& a, const Element& b, double tol) {
  require_same_algebra(a, b);
  const DenseMatrix x = rep.embed(a);
  const DenseMatrix y = rep.embed(b);
  const double scale = (1.0 + spectral_norm(x)) * (1.0 + spectral_norm(y));
  return spectral_norm(x * y - y * x) <= tol * scale;
}

FormulaResidual residual_formula_check(const AmbientRep& rep, const Element& a, const Element& b,
                                       const Element& c) {
  require_same_algebra(a, b);
  require_same_algebra(a, c);
  const DenseMatrix x = rep.embed(a), y = rep.embed(b), z = rep.embed(c);
  const DenseMatrix k = x * y - y * x;
  const Element ambient_side = rep.extract(0.25 * (k * z - z * k));
  const Element operator_side = commutator(t_operator(a), t_operator(b)).apply(c);
  return {(operator_side - ambient_side).norm(), (1.0 + a.norm()) * (1.0 + b.norm()) * (1.0 + c.norm())};
}

}  // namespace jordanlab
