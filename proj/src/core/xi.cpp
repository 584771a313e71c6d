#include "core/xi.hpp"

namespace rdmkit {

double XiTable::value(int n) const {
  if (n < 0 || n > max_order()) fail(ErrorCode::BadArity, "xi: order out of range");
  return values[n];
}

double XiTable::ratio(int n) const {
  if (n < 1 || n > max_order()) fail(ErrorCode::BadArity, "xi ratio: order out of range");
  if (!ratios[n])
    fail(ErrorCode::DegenerateState, "xi_" + std::to_string(n) + " = 0, ratio undefined");
  return *ratios[n];
}

XiTable xi_table(const SingleParticleState& rho, int n_max, Sector sector) {
  if (n_max < 1) fail(ErrorCode::InvalidArgument, "xi_table: n_max >= 1 required");
  const int d = rho.dim();
  XiTable t;
  t.sector = sector;
  t.values.assign(n_max + 1, 0.0);
  t.values[0] = 1.0;

  // Coefficient convolution over one eigenvalue at a time.  Every update adds
  // nonnegative terms, so no cancellation occurs and Fermi orders beyond d
  // stay exactly zero.
  if (sector == Sector::Fermi) {
    // prod_i (1 + lambda_i x): e_n
    const int top = std::min(n_max, d);
    for (int i = 0; i < d; ++i) {
      const double lam = rho.eigenvalues[i];
      for (int n = top; n >= 1; --n) t.values[n] += lam * t.values[n - 1];
    }
  } else {
    // prod_i 1 / (1 - lambda_i x): h_n
    for (int i = 0; i < d; ++i) {
      const double lam = rho.eigenvalues[i];
      for (int n = 1; n <= n_max; ++n) t.values[n] += lam * t.values[n - 1];
    }
  }

  t.ratios.assign(n_max + 1, std::nullopt);
  for (int n = 1; n <= n_max; ++n)
    if (t.values[n] > 0.0) t.ratios[n] = t.values[n - 1] / t.values[n];
  return t;
}

}  // namespace rdmkit
