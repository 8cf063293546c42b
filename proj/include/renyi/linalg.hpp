#pragma once

#include <vector>

#include "renyi/types.hpp"

namespace renyi {

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
// Reconstruction satisfies ||U L U^dag - M||_2 <= 1e-10 * max(1, ||M||_2).
struct EigSystem {
  RealVector values;  // ascending
  Matrix vectors;     // unitary, columns are eigenvectors
};

bool is_hermitian(const Matrix& m, double tol = kHermTol);

// (M + M^dag)/2. Rejects matrices whose asymmetry exceeds the tolerance.
Matrix hermitized(const Matrix& m, double tol = kHermTol);

EigSystem eig_hermitian(const Matrix& m);

// f(M) = sum_i lambda_i^p |v_i><v_i| over eigenvalues above the kernel cut;
// kernel directions map to zero (also for negative p). Throws if M has an
// eigenvalue below -tolerance.
Matrix mat_power_on_support(const Matrix& psd, double p, double kernel_cut = kKernelCut);

// Schatten p-(quasi-)norm: (sum_i s_i^p)^(1/p) over singular values.
// p = +inf gives the operator norm. Not a norm for p < 1.
double schatten_norm(const Matrix& x, double p);

// Kronecker product, A's indices outermost.
template <typename DA, typename DB>
Matrix tensor_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

// Trace out the subsystems not listed in `keep`. Kept subsystems stay in
// their original order.
Matrix partial_trace(const Matrix& m, const Shape& shape, const std::vector<int>& keep);

// Reorder subsystems: new position i holds old subsystem perm[i].
Matrix permute_subsystems(const Matrix& m, const Shape& shape, const std::vector<int>& perm);

// Projector onto the support (eigenvalues above the kernel cut).
Matrix support_projector(const Matrix& psd, double kernel_cut = kKernelCut);

struct SupportRelation {
  bool dominates;      // kernel(sigma) inside kernel(rho), i.e. sigma >> rho
  bool perpendicular;  // images intersect trivially
};

// Relation between the supports of two PSD matrices. `dominates` means the
// second argument dominates the first (sigma >> rho).
SupportRelation support_relation(const Matrix& rho, const Matrix& sigma,
                                 double kernel_cut = kKernelCut);

// exp(i t ln M) on the support of M; unitary there for real t.
Matrix imaginary_power_unitary(const Matrix& psd, double t, double kernel_cut = kKernelCut);

}  // namespace renyi
