#include "renyi/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace renyi {

namespace {

// strides of a row-major multi-index
std::vector<Eigen::Index> strides_of(const Shape& shape) {
  std::vector<Eigen::Index> s(shape.dims.size());
  Eigen::Index acc = 1;
  for (int k = shape.rank() - 1; k >= 0; --k) {
    s[static_cast<size_t>(k)] = acc;
    acc *= shape.dims[static_cast<size_t>(k)];
  }
  return s;
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Matrix hermitized(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitized: matrix is not square");
  if (!is_hermitian(m, tol))
    throw std::invalid_argument("hermitized: asymmetry exceeds tolerance");
  return 0.5 * (m + m.adjoint());
}

EigSystem eig_hermitian(const Matrix& m) {
  Matrix h = hermitized(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix mat_power_on_support(const Matrix& psd, double p, double kernel_cut) {
  if (!std::isfinite(p))
    throw std::invalid_argument("mat_power_on_support: exponent must be finite");
  EigSystem es = eig_hermitian(psd);
  const Eigen::Index n = es.values.size();
  double lmax = es.values.maxCoeff();
  double neg_tol = kHermTol * std::max(1.0, lmax);
  double cut = kernel_cut * std::max(lmax, 0.0);
  RealVector f(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double l = es.values(i);
    if (l < -neg_tol)
      throw std::invalid_argument("mat_power_on_support: matrix is not PSD");
    f(i) = (l <= cut) ? 0.0 : std::pow(l, p);
  }
  Matrix out = es.vectors * f.asDiagonal() * es.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

double schatten_norm(const Matrix& x, double p) {
  if (std::isnan(p) || p <= 0.0)
    throw std::invalid_argument("schatten_norm: p must be positive");
  Eigen::JacobiSVD<Matrix> svd(x);
  const RealVector& s = svd.singularValues();
  if (std::isinf(p)) return s.size() > 0 ? s.maxCoeff() : 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

Matrix partial_trace(const Matrix& m, const Shape& shape, const std::vector<int>& keep) {
  if (m.rows() != m.cols() || m.rows() != shape.total())
    throw std::invalid_argument("partial_trace: shape inconsistent with matrix");
  for (int k : keep)
    if (k < 0 || k >= shape.rank())
      throw std::invalid_argument("partial_trace: bad subsystem index");
  std::vector<bool> kept(static_cast<size_t>(shape.rank()), false);
  for (int k : keep) kept[static_cast<size_t>(k)] = true;

  auto strides = strides_of(shape);
  std::vector<Eigen::Index> keep_dims, keep_strides, tr_dims, tr_strides;
  for (int k = 0; k < shape.rank(); ++k) {
    if (kept[static_cast<size_t>(k)]) {
      keep_dims.push_back(shape.dims[static_cast<size_t>(k)]);
      keep_strides.push_back(strides[static_cast<size_t>(k)]);
    } else {
      tr_dims.push_back(shape.dims[static_cast<size_t>(k)]);
      tr_strides.push_back(strides[static_cast<size_t>(k)]);
    }
  }

  auto offsets = [](const std::vector<Eigen::Index>& dims,
                    const std::vector<Eigen::Index>& strides) {
    Eigen::Index count = 1;
    for (auto d : dims) count *= d;
    std::vector<Eigen::Index> out(static_cast<size_t>(count), 0);
    for (Eigen::Index flat = 0; flat < count; ++flat) {
      Eigen::Index rest = flat, off = 0;
      for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        off += (rest % dims[static_cast<size_t>(k)]) * strides[static_cast<size_t>(k)];
        rest /= dims[static_cast<size_t>(k)];
      }
      out[static_cast<size_t>(flat)] = off;
    }
    return out;
  };

  auto keep_off = offsets(keep_dims, keep_strides);
  auto tr_off = offsets(tr_dims, tr_strides);
  const Eigen::Index K = static_cast<Eigen::Index>(keep_off.size());

  Matrix out = Matrix::Zero(K, K);
  for (Eigen::Index i = 0; i < K; ++i)
    for (Eigen::Index j = 0; j < K; ++j) {
      cplx acc(0, 0);
      for (auto t : tr_off) acc += m(keep_off[static_cast<size_t>(i)] + t,
                                     keep_off[static_cast<size_t>(j)] + t);
      out(i, j) = acc;
    }
  return out;
}

Matrix permute_subsystems(const Matrix& m, const Shape& shape, const std::vector<int>& perm) {
  if (m.rows() != m.cols() || m.rows() != shape.total())
    throw std::invalid_argument("permute_subsystems: shape inconsistent with matrix");
  if (static_cast<int>(perm.size()) != shape.rank())
    throw std::invalid_argument("permute_subsystems: bad permutation size");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= shape.rank() || seen[static_cast<size_t>(p)])
      throw std::invalid_argument("permute_subsystems: not a permutation");
    seen[static_cast<size_t>(p)] = true;
  }

  const Eigen::Index n = shape.total();
  auto old_strides = strides_of(shape);
  std::vector<Eigen::Index> new_dims;
  for (int p : perm) new_dims.push_back(shape.dims[static_cast<size_t>(p)]);
  Shape new_shape{new_dims};
  auto new_strides = strides_of(new_shape);

  // map old flat index -> new flat index
  std::vector<Eigen::Index> map(static_cast<size_t>(n));
  for (Eigen::Index flat = 0; flat < n; ++flat) {
    Eigen::Index rest = flat, nf = 0;
    std::vector<Eigen::Index> idx(static_cast<size_t>(shape.rank()));
    for (int k = shape.rank() - 1; k >= 0; --k) {
      idx[static_cast<size_t>(k)] = rest % shape.dims[static_cast<size_t>(k)];
      rest /= shape.dims[static_cast<size_t>(k)];
    }
    for (int k = 0; k < shape.rank(); ++k)
      nf += idx[static_cast<size_t>(perm[static_cast<size_t>(k)])] *
            new_strides[static_cast<size_t>(k)];
    map[static_cast<size_t>(flat)] = nf;
  }

  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) = m(i, j);
  return out;
}

Matrix support_projector(const Matrix& psd, double kernel_cut) {
  EigSystem es = eig_hermitian(psd);
  double cut = kernel_cut * std::max(es.values.maxCoeff(), 0.0);
  Matrix out = Matrix::Zero(psd.rows(), psd.cols());
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    if (es.values(i) > cut)
      out += es.vectors.col(i) * es.vectors.col(i).adjoint();
  return out;
}

SupportRelation support_relation(const Matrix& rho, const Matrix& sigma, double kernel_cut) {
  Matrix p_sigma = support_projector(sigma, kernel_cut);
  Matrix p_rho = support_projector(rho, kernel_cut);
  Matrix id = Matrix::Identity(rho.rows(), rho.cols());
  double rho_scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  Matrix leak = (id - p_sigma) * rho * (id - p_sigma);
  bool dominates = leak.cwiseAbs().maxCoeff() <= kHermTol * rho_scale;
  bool perpendicular = (p_sigma * p_rho).cwiseAbs().maxCoeff() <= kHermTol;
  return {dominates, perpendicular};
}

Matrix imaginary_power_unitary(const Matrix& psd, double t, double kernel_cut) {
  EigSystem es = eig_hermitian(psd);
  double cut = kernel_cut * std::max(es.values.maxCoeff(), 0.0);
  Vector f(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (es.values(i) <= cut) {
      f(i) = cplx(1, 0);  // act as identity off the support
    } else {
      double phase = t * std::log(es.values(i));
      f(i) = cplx(std::cos(phase), std::sin(phase));
    }
  }
  return es.vectors * f.asDiagonal() * es.vectors.adjoint();
}

}  // namespace renyi
