#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace renyi {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Entropic values are reported in bits (all logarithms base 2).
using Bits = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Hermiticity / PSD validation tolerance (absolute, relative to matrix scale).
inline constexpr double kHermTol = 1e-10;
// Eigenvalues below kKernelCut * lambda_max count as exact zeros (support cut).
inline constexpr double kKernelCut = 1e-12;

inline constexpr const char* kVersion = "0.1.0";

// Ordered subsystem dimensions (d_A, d_B, ...) of a composite space.
struct Shape {
  std::vector<Eigen::Index> dims;

  Shape() = default;
  Shape(std::initializer_list<Eigen::Index> d) : dims(d) { validate(); }
  explicit Shape(std::vector<Eigen::Index> d) : dims(std::move(d)) { validate(); }

  Eigen::Index total() const {
    Eigen::Index n = 1;
    for (auto d : dims) n *= d;
    return n;
  }
  int rank() const { return static_cast<int>(dims.size()); }
  Eigen::Index operator[](int i) const { return dims.at(static_cast<size_t>(i)); }

  void validate() const {
    if (dims.empty()) throw std::invalid_argument("Shape: no subsystems");
    for (auto d : dims)
      if (d < 1) throw std::invalid_argument("Shape: subsystem dimension must be >= 1");
  }

  bool operator==(const Shape& o) const { return dims == o.dims; }
};

}  // namespace renyi
