#include "core/state.hpp"

#include <algorithm>
#include <random>

namespace rdmkit {

Operator SingleParticleState::power(int p) const {
  if (p < 0) fail(ErrorCode::InvalidArgument, "state power: negative exponent");
  const int d = dim();
  if (p == 0) return Operator::Identity(d, d);
  RealVector lp(d);
  for (int i = 0; i < d; ++i) lp[i] = std::pow(eigenvalues[i], p);
  return eigenbasis * lp.asDiagonal() * eigenbasis.adjoint();
}

SingleParticleState SingleParticleState::from_matrix(const Operator& rho) {
  if (rho.rows() < 1 || rho.rows() != rho.cols())
    fail(ErrorCode::InvalidArgument, "state: dim >= 1 square matrix required");
  if (!rho.allFinite()) fail(ErrorCode::InvalidArgument, "state: entries must be finite");
  Spectrum s = hermitian_spectrum(rho);  // throws NotHermitian
  const double scale = std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] < -kEigTol * scale)
      fail(ErrorCode::InvalidArgument, "state: negative eigenvalue beyond tolerance");
    if (s.eigenvalues[i] < 0.0) s.eigenvalues[i] = 0.0;
  }
  SingleParticleState st;
  st.base = rho;
  st.eigenvalues = std::move(s.eigenvalues);
  st.eigenbasis = std::move(s.eigenbasis);
  return st;
}

SingleParticleState SingleParticleState::from_eigenvalues(const RealVector& descending) {
  const int d = static_cast<int>(descending.size());
  if (d < 1) fail(ErrorCode::InvalidArgument, "state: dim >= 1 required");
  RealVector lam = descending;
  for (int i = 0; i < d; ++i) {
    if (lam[i] < -kEigTol)
      fail(ErrorCode::InvalidArgument, "state: negative eigenvalue beyond tolerance");
    if (lam[i] < 0.0) lam[i] = 0.0;
  }
  std::sort(lam.data(), lam.data() + d, std::greater<double>());
  SingleParticleState st;
  st.eigenvalues = lam;
  st.eigenbasis = Operator::Identity(d, d);
  st.base = Operator(lam.cast<Complex>().asDiagonal());
  return st;
}

SingleParticleState SingleParticleState::random(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Operator rho = g.adjoint() * g;
  rho /= rho.trace().real();
  return from_matrix(rho);
}

}  // namespace rdmkit
