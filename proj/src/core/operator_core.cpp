#include "core/operator_core.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace rdmkit {

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Spectrum hermitian_spectrum(const Operator& a) {
  if (!is_hermitian(a)) fail(ErrorCode::NotHermitian, "hermitian_spectrum: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Operator> solver(a);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::InvalidArgument, "hermitian_spectrum: eigensolver failed");
  const auto n = a.rows();
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenbasis.resize(n, n);
  // SelfAdjointEigenSolver sorts ascending; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    s.eigenvalues[i] = solver.eigenvalues()[n - 1 - i];
    s.eigenbasis.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return s;
}

double operator_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<Operator> solver(a);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Operator> svd(a);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

double trace_norm(const Operator& a) {
  if (a.size() == 0) return 0.0;
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<Operator> solver(a);
    return solver.eigenvalues().cwiseAbs().sum();
  }
  Eigen::BDCSVD<Operator> svd(a);
  return svd.singularValues().sum();
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const std::int64_t dim = a.rows() * b.rows();
  if (dim * dim > kEntryCap)
    fail(ErrorCode::DimensionOverflow, "tensor_product result exceeds entry cap");
  Operator out(dim, dim);
  for (Eigen::Index i1 = 0; i1 < a.rows(); ++i1)
    for (Eigen::Index j1 = 0; j1 < a.cols(); ++j1)
      out.block(i1 * b.rows(), j1 * b.cols(), b.rows(), b.cols()) = a(i1, j1) * b;
  return out;
}

Operator partial_trace_last(const Operator& k_op, int d, int n, int k) {
  if (k < 1 || k > n) fail(ErrorCode::BadArity, "partial_trace_last: need 1 <= k <= n");
  const std::int64_t dn = pow_checked(d, n);
  if (k_op.rows() != dn || k_op.cols() != dn)
    fail(ErrorCode::BadArity, "partial_trace_last: operator dimension is not d^n");
  if (k == n) return k_op;
  const std::int64_t dk = pow_checked(d, k);
  const std::int64_t dr = dn / dk;  // traced block size d^{n-k}
  Operator out = Operator::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      Complex s = 0.0;
      for (std::int64_t t = 0; t < dr; ++t) s += k_op(i * dr + t, j * dr + t);
      out(i, j) = s;
    }
  return out;
}

Operator kron_power_apply_left(const Operator& rho, int n, const Operator& m) {
  const int d = static_cast<int>(rho.rows());
  const std::int64_t dn = pow_checked(d, n);
  if (m.rows() != dn) fail(ErrorCode::BadArity, "kron_power_apply_left: row dimension mismatch");
  Operator out = m;
  std::vector<Complex> buf(d);
  // Contract one tensor factor at a time; factor 0 is the most significant digit.
  for (int mode = 0; mode < n; ++mode) {
    std::int64_t stride = 1;
    for (int i = 0; i < n - 1 - mode; ++i) stride *= d;
    const std::int64_t outer = dn / (stride * d);
    for (Eigen::Index col = 0; col < out.cols(); ++col) {
      for (std::int64_t a = 0; a < outer; ++a) {
        for (std::int64_t b = 0; b < stride; ++b) {
          const std::int64_t base = a * d * stride + b;
          for (int i = 0; i < d; ++i) {
            Complex s = 0.0;
            for (int j = 0; j < d; ++j) s += rho(i, j) * out(base + j * stride, col);
            buf[i] = s;
          }
          for (int i = 0; i < d; ++i) out(base + i * stride, col) = buf[i];
        }
      }
    }
  }
  return out;
}

Operator kron_power(const Operator& rho, int n) {
  Operator out = Operator::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = tensor_product(out, rho);
  return out;
}

}  // namespace rdmkit
