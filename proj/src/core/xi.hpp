#pragma once

#include <optional>
#include <vector>

#include "core/state.hpp"
#include "core/symmetry.hpp"

namespace rdmkit {

// Normalization traces xi_s = Tr rho^{wedge s} (elementary symmetric
// polynomials of the eigenvalues) or Tr rho^{vee s} (complete homogeneous
// ones), with the ratios s_n = xi_{n-1} / xi_n.
struct XiTable {
  Sector sector = Sector::Fermi;
  std::vector<double> values;                 // xi_0..xi_N, xi_0 = 1
  std::vector<std::optional<double>> ratios;  // ratios[n] = s_n, undefined if xi_n = 0

  int max_order() const { return static_cast<int>(values.size()) - 1; }

  double value(int n) const;

  // s_n; throws DegenerateState when xi_n = 0 (Fermi with n > d).
  double ratio(int n) const;
};

XiTable xi_table(const SingleParticleState& rho, int n_max, Sector sector);

}  // namespace rdmkit
