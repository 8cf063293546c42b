#pragma once

#include <cstdint>
#include <vector>

#include "renyi/linalg.hpp"
#include "renyi/rng.hpp"
#include "renyi/types.hpp"

namespace renyi {

// Hermitian PSD unit-trace operator with declared subsystem dimensions.
struct DensityMatrix {
  Matrix mat;
  Shape shape;

  // Validates: Hermitian within 1e-10, eigenvalues >= -1e-10, trace within
  // 1e-10 of 1, and shape consistent with the matrix dimension.
  static DensityMatrix create(Matrix m, Shape s);

  Eigen::Index dim() const { return mat.rows(); }

  DensityMatrix marginal(const std::vector<int>& keep) const;
  DensityMatrix permuted(const std::vector<int>& perm) const;
  // bipartite swap: requires exactly two subsystems
  DensityMatrix swapped() const;
  // same matrix, subsystems [0,split) and [split,rank) merged into two factors
  DensityMatrix as_bipartite(int split) const;

  bool is_pure(double tol = 1e-8) const;
};

enum class StateKind { haar_pure, hs_mixed, product, classical_quantum, max_entangled };

// Deterministic in (kind, shape, seed).
//  haar_pure:         Haar-random pure state on the full space
//  hs_mixed:          partial trace of a Haar pure state on a same-dimension ancilla
//  product:           independent hs_mixed factor on each subsystem
//  classical_quantum: sum_x p(x)|x><x| (x) diag conditional states (fully classical)
//  max_entangled:     (1/sqrt(m)) sum |ii> on a bipartite shape, m = min dim
DensityMatrix random_state(StateKind kind, const Shape& shape, std::uint64_t seed);

// Eigendecomposition purification |phi> = sum_k sqrt(l_k) |v_k>|k>, eigenvalues
// descending; ancilla subsystem appended with dimension equal to the input's.
Vector purify_vector(const DensityMatrix& rho);
DensityMatrix purify(const DensityMatrix& rho);

// The matrix X = Op(|psi>) of the operator-vector correspondence, mapping the
// chosen input factor to the remaining factors (kept in their original order):
// X[(out...), b] = psi[(..., b, ...)].
struct OperatorForm {
  Matrix mat;
  Eigen::Index in_dim = 0;
  Eigen::Index out_dim = 0;
};

OperatorForm op_vec(const Vector& psi, const Shape& shape, int input_index);

// Pinching in an orthonormal basis on the first subsystem:
// sum_x (|e_x><e_x| (x) id) rho (|e_x><e_x| (x) id).
DensityMatrix pinch_measure(const DensityMatrix& rho, const Matrix& basis);

// Coherent-copy dilation of the basis measurement on the first subsystem.
// Output subsystems (Z, Z', rest...); tracing out Z' recovers pinch_measure.
DensityMatrix stinespring_dilate(const DensityMatrix& rho, const Matrix& basis);

// max_{x,z} |<e_x|f_z>|^2, in [1/d, 1]
double overlap_c(const Matrix& basis_x, const Matrix& basis_z);

struct MeasurementPair {
  Matrix basis_x;
  Matrix basis_z;
  double overlap = 1.0;

  static MeasurementPair create(Matrix bx, Matrix bz);
};

// Haar-distributed unitary: QR of a Ginibre matrix with phase-fixed diagonal.
Matrix random_basis(Eigen::Index d, Rng& rng);

// computational basis vs discrete Fourier basis; mutually unbiased, c = 1/d
MeasurementPair mub_pair(Eigen::Index d);
MeasurementPair random_pair(Eigen::Index d, std::uint64_t seed);

// normalized positive weights (Dirichlet(1)) for classical constructions
RealVector random_probabilities(Eigen::Index n, Rng& rng);

}  // namespace renyi
