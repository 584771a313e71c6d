#pragma once

#include <Eigen/Dense>
#include <complex>

#include "core/errors.hpp"
#include "core/tensor_index.hpp"

namespace rdmkit {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;  // dense operator on a d^k-dimensional space
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;   // relative to operator norm
inline constexpr double kReconTol = 1e-10;
inline constexpr double kEigTol = 1e-12;    // eigenvalue clamping window

struct Spectrum {
  RealVector eigenvalues;  // sorted descending
  Operator eigenbasis;     // unitary, columns matching eigenvalues
};

// Eigendecomposition of a Hermitian matrix; throws NotHermitian if the
// symmetry check fails (relative tolerance kHermTol).
Spectrum hermitian_spectrum(const Operator& a);

bool is_hermitian(const Operator& a, double tol = kHermTol);

// Largest singular value.
double operator_norm(const Operator& a);

// Sum of singular values.
double trace_norm(const Operator& a);

// Kronecker product under the most-significant-factor-first index encoding.
Operator tensor_product(const Operator& a, const Operator& b);

// L^k_n: partial trace over the last n-k tensor factors of an operator on the
// d^n-dimensional product space.  For k == n the input is returned unchanged.
Operator partial_trace_last(const Operator& k_op, int d, int n, int k);

// (rho^{otimes n}) * m without materializing the Kronecker power; m must be
// d^n x c.  Cost O(n * d^n * d * c).
Operator kron_power_apply_left(const Operator& rho, int n, const Operator& m);

// n-fold Kronecker power (dense; subject to the entry cap).
Operator kron_power(const Operator& rho, int n);

}  // namespace rdmkit
