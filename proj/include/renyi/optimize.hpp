#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/types.hpp"

namespace renyi {

struct SimplexOptConfig {
  double tol_objective = 1e-9;
  int max_iters = 10000;
  int restarts = 3;
  enum class Sense { minimize, maximize };
  Sense sense = Sense::minimize;
  double fd_step = 1e-5;
  // initial iterates tried before the maximally mixed state and random draws
  std::vector<Matrix> warm_starts;
};

struct OptResult {
  Matrix optimizer;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, OptResult last)
      : std::runtime_error(what), last_(std::move(last)) {}
  const OptResult& last_iterate() const { return last_; }

 private:
  OptResult last_;
};

using DensityObjective = std::function<double(const Matrix&)>;

// Minimize/maximize a functional over the set of density matrices. Iterates
// are parameterized as exp(H)/tr exp(H) with H Hermitian, so every evaluated
// point is strictly inside the simplex; descent uses central finite
// differences over a traceless Hermitian operator basis with backtracking
// line search. Deterministic given the seed. The best iterate over all
// restarts is returned; converged means the winning restart's successive
// objective change fell below tol.
OptResult optimize_over_density(const DensityObjective& objective, Eigen::Index dim,
                                const SimplexOptConfig& cfg, std::uint64_t seed);

// Exhaustive Bloch-ball scan (radius x polar x azimuth, `resolution` points
// per axis including the maximally mixed center and the pure-state shell).
// Independent verification oracle for qubit objectives.
OptResult qubit_grid_oracle(const DensityObjective& objective, int resolution,
                            SimplexOptConfig::Sense sense = SimplexOptConfig::Sense::minimize);

}  // namespace renyi
