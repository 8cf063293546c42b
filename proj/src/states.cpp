#include "renyi/states.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace renyi {

DensityMatrix DensityMatrix::create(Matrix m, Shape s) {
  s.validate();
  if (m.rows() != m.cols() || m.rows() != s.total())
    throw std::invalid_argument("DensityMatrix: shape inconsistent with matrix");
  if (!is_hermitian(m))
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  Matrix h = 0.5 * (m + m.adjoint());
  if (std::abs(h.trace().real() - 1.0) > kHermTol || std::abs(h.trace().imag()) > kHermTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1 within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kHermTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  return DensityMatrix{std::move(h), std::move(s)};
}

DensityMatrix DensityMatrix::marginal(const std::vector<int>& keep) const {
  Matrix m = partial_trace(mat, shape, keep);
  std::vector<Eigen::Index> dims;
  for (int k = 0; k < shape.rank(); ++k)
    if (std::find(keep.begin(), keep.end(), k) != keep.end())
      dims.push_back(shape.dims[static_cast<size_t>(k)]);
  return DensityMatrix::create(std::move(m), Shape{dims});
}

DensityMatrix DensityMatrix::permuted(const std::vector<int>& perm) const {
  Matrix m = permute_subsystems(mat, shape, perm);
  std::vector<Eigen::Index> dims;
  for (int p : perm) dims.push_back(shape.dims[static_cast<size_t>(p)]);
  return DensityMatrix{0.5 * (m + m.adjoint()), Shape{dims}};
}

DensityMatrix DensityMatrix::swapped() const {
  if (shape.rank() != 2)
    throw std::invalid_argument("DensityMatrix::swapped: needs exactly two subsystems");
  return permuted({1, 0});
}

DensityMatrix DensityMatrix::as_bipartite(int split) const {
  if (split < 1 || split >= shape.rank())
    throw std::invalid_argument("DensityMatrix::as_bipartite: bad split point");
  Eigen::Index left = 1, right = 1;
  for (int k = 0; k < split; ++k) left *= shape.dims[static_cast<size_t>(k)];
  for (int k = split; k < shape.rank(); ++k) right *= shape.dims[static_cast<size_t>(k)];
  return DensityMatrix{mat, Shape{left, right}};
}

bool DensityMatrix::is_pure(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() >= 1.0 - tol;
}

namespace {

Vector gaussian_vector(Eigen::Index n, Rng& rng) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.cnormal();
  return v;
}

Matrix gaussian_matrix(Eigen::Index r, Eigen::Index c, Rng& rng) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.cnormal();
  return m;
}

Matrix hs_mixed_matrix(Eigen::Index d, Rng& rng) {
  // G G^dag / tr = partial trace over a same-dimension ancilla of the Haar
  // pure state with amplitudes G(i,j).
  Matrix g = gaussian_matrix(d, d, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

}  // namespace

RealVector random_probabilities(Eigen::Index n, Rng& rng) {
  RealVector p(n);
  for (Eigen::Index i = 0; i < n; ++i) p(i) = -std::log(1.0 - rng.uniform());
  return p / p.sum();
}

DensityMatrix random_state(StateKind kind, const Shape& shape, std::uint64_t seed) {
  shape.validate();
  Rng rng(seed);
  const Eigen::Index total = shape.total();

  switch (kind) {
    case StateKind::haar_pure: {
      Vector psi = gaussian_vector(total, rng);
      psi.normalize();
      return DensityMatrix::create(psi * psi.adjoint(), shape);
    }
    case StateKind::hs_mixed:
      return DensityMatrix::create(hs_mixed_matrix(total, rng), shape);
    case StateKind::product: {
      Matrix rho = Matrix::Identity(1, 1);
      for (auto d : shape.dims) rho = tensor_product(rho, hs_mixed_matrix(d, rng));
      return DensityMatrix::create(std::move(rho), shape);
    }
    case StateKind::classical_quantum: {
      if (shape.rank() < 2)
        throw std::invalid_argument("random_state: classical_quantum needs >= 2 subsystems");
      const Eigen::Index da = shape.dims[0];
      const Eigen::Index db = total / da;
      RealVector p = random_probabilities(da, rng);
      Matrix rho = Matrix::Zero(total, total);
      for (Eigen::Index x = 0; x < da; ++x) {
        RealVector q = random_probabilities(db, rng);
        for (Eigen::Index b = 0; b < db; ++b)
          rho(x * db + b, x * db + b) = p(x) * q(b);
      }
      return DensityMatrix::create(std::move(rho), shape);
    }
    case StateKind::max_entangled: {
      if (shape.rank() != 2)
        throw std::invalid_argument("random_state: max_entangled needs exactly 2 subsystems");
      const Eigen::Index da = shape.dims[0], db = shape.dims[1];
      const Eigen::Index m = std::min(da, db);
      Vector psi = Vector::Zero(total);
      for (Eigen::Index i = 0; i < m; ++i) psi(i * db + i) = 1.0 / std::sqrt(double(m));
      return DensityMatrix::create(psi * psi.adjoint(), shape);
    }
  }
  throw std::invalid_argument("random_state: unknown kind");
}

Vector purify_vector(const DensityMatrix& rho) {
  EigSystem es = eig_hermitian(rho.mat);
  const Eigen::Index d = rho.dim();
  Vector phi = Vector::Zero(d * d);
  // descending, so a pure input becomes |v> (x) |0>
  for (Eigen::Index k = 0; k < d; ++k) {
    double l = es.values(d - 1 - k);
    if (l <= 0.0) continue;
    double w = std::sqrt(l);
    for (Eigen::Index i = 0; i < d; ++i) phi(i * d + k) += w * es.vectors(i, d - 1 - k);
  }
  return phi;
}

DensityMatrix purify(const DensityMatrix& rho) {
  Vector phi = purify_vector(rho);
  std::vector<Eigen::Index> dims = rho.shape.dims;
  dims.push_back(rho.dim());
  return DensityMatrix::create(phi * phi.adjoint(), Shape{dims});
}

OperatorForm op_vec(const Vector& psi, const Shape& shape, int input_index) {
  if (input_index < 0 || input_index >= shape.rank())
    throw std::invalid_argument("op_vec: bad input subsystem index");
  if (psi.size() != shape.total())
    throw std::invalid_argument("op_vec: vector length does not match shape");

  const Eigen::Index in_dim = shape.dims[static_cast<size_t>(input_index)];
  const Eigen::Index out_dim = shape.total() / in_dim;

  // strides in the full index
  std::vector<Eigen::Index> strides(static_cast<size_t>(shape.rank()));
  Eigen::Index acc = 1;
  for (int k = shape.rank() - 1; k >= 0; --k) {
    strides[static_cast<size_t>(k)] = acc;
    acc *= shape.dims[static_cast<size_t>(k)];
  }

  std::vector<Eigen::Index> out_dims, out_strides;
  for (int k = 0; k < shape.rank(); ++k)
    if (k != input_index) {
      out_dims.push_back(shape.dims[static_cast<size_t>(k)]);
      out_strides.push_back(strides[static_cast<size_t>(k)]);
    }

  Matrix x(out_dim, in_dim);
  for (Eigen::Index o = 0; o < out_dim; ++o) {
    Eigen::Index rest = o, off = 0;
    for (int k = static_cast<int>(out_dims.size()) - 1; k >= 0; --k) {
      off += (rest % out_dims[static_cast<size_t>(k)]) * out_strides[static_cast<size_t>(k)];
      rest /= out_dims[static_cast<size_t>(k)];
    }
    for (Eigen::Index b = 0; b < in_dim; ++b)
      x(o, b) = psi(off + b * strides[static_cast<size_t>(input_index)]);
  }
  return {std::move(x), in_dim, out_dim};
}

namespace {

void check_orthonormal(const Matrix& basis, Eigen::Index d) {
  if (basis.rows() != d || basis.cols() != d)
    throw std::invalid_argument("basis dimension mismatch");
  Matrix g = basis.adjoint() * basis - Matrix::Identity(d, d);
  if (g.cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("basis is not orthonormal within tolerance");
}

}  // namespace

DensityMatrix pinch_measure(const DensityMatrix& rho, const Matrix& basis) {
  const Eigen::Index da = rho.shape.dims[0];
  check_orthonormal(basis, da);
  const Eigen::Index rest = rho.dim() / da;
  Matrix id_rest = Matrix::Identity(rest, rest);
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index x = 0; x < da; ++x) {
    Matrix px = basis.col(x) * basis.col(x).adjoint();
    Matrix k = tensor_product(px, id_rest);
    out += k * rho.mat * k;
  }
  return DensityMatrix::create(std::move(out), rho.shape);
}

DensityMatrix stinespring_dilate(const DensityMatrix& rho, const Matrix& basis) {
  const Eigen::Index da = rho.shape.dims[0];
  check_orthonormal(basis, da);
  const Eigen::Index rest = rho.dim() / da;

  // V |f_z> = |f_z>|f_z>
  Matrix v = Matrix::Zero(da * da, da);
  for (Eigen::Index z = 0; z < da; ++z) {
    Vector fz = basis.col(z);
    Vector ff(da * da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j) ff(i * da + j) = fz(i) * fz(j);
    v += ff * fz.adjoint();
  }

  Matrix vb = tensor_product(v, Matrix::Identity(rest, rest));
  Matrix out = vb * rho.mat * vb.adjoint();

  std::vector<Eigen::Index> dims = {da, da};
  for (size_t k = 1; k < rho.shape.dims.size(); ++k) dims.push_back(rho.shape.dims[k]);
  return DensityMatrix::create(std::move(out), Shape{dims});
}

double overlap_c(const Matrix& basis_x, const Matrix& basis_z) {
  const Eigen::Index d = basis_x.rows();
  check_orthonormal(basis_x, d);
  check_orthonormal(basis_z, d);
  Matrix g = basis_x.adjoint() * basis_z;
  return g.cwiseAbs2().maxCoeff();
}

MeasurementPair MeasurementPair::create(Matrix bx, Matrix bz) {
  double c = overlap_c(bx, bz);
  return MeasurementPair{std::move(bx), std::move(bz), c};
}

Matrix random_basis(Eigen::Index d, Rng& rng) {
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = rng.cnormal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    cplx rj = r(j, j);
    cplx phase = (std::abs(rj) > 0.0) ? rj / std::abs(rj) : cplx(1, 0);
    q.col(j) *= phase;
  }
  return q;
}

MeasurementPair mub_pair(Eigen::Index d) {
  Matrix comp = Matrix::Identity(d, d);
  Matrix fourier(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) {
      double phase = 2.0 * M_PI * double(j) * double(k) / double(d);
      fourier(j, k) = cplx(std::cos(phase), std::sin(phase)) / std::sqrt(double(d));
    }
  return MeasurementPair::create(std::move(comp), std::move(fourier));
}

MeasurementPair random_pair(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  Matrix bx = random_basis(d, rng);
  Matrix bz = random_basis(d, rng);
  return MeasurementPair::create(std::move(bx), std::move(bz));
}

}  // namespace renyi
