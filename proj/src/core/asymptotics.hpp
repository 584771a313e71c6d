#pragma once

#include <cstdint>
#include <vector>

#include "core/contraction.hpp"

namespace rdmkit {

// Closed-form thermodynamic-limit approximant for the 1-particle reduced
// operator: (n+1)^{-1} s_{n+1} rho (I +/- s_{n+1} rho)^{-1}.
Operator sigma1_asymptotic(const SingleParticleState& rho, int n, Sector sector,
                           const XiTable& xi);

// k! sigma1 wedge ... wedge sigma1 (or vee), built on the d^k space.
Operator sigmak_product_approx(const Operator& sigma1, int k, Sector sector, int d);

// Plain k-fold tensor power of sigma1.
Operator sigmak_tensor_approx(const Operator& sigma1, int k);

// Trace-norm distance (the strong asymptotic-equivalence metric for
// selfadjoint families).
double strong_metric(const Operator& a, const Operator& b);

// k single-particle factors with operator norm <= 1; the test functional is
// their tensor product.
struct ObservableFamily {
  std::vector<Operator> factors;
};

// max over families of |Tr (A - B) (C_1 otimes ... otimes C_k)|.
double weak_metric(const Operator& a, const Operator& b,
                   const std::vector<ObservableFamily>& observables);

struct AssumptionCheck {
  bool ok = false;
  double product = 0.0;  // s_n * ||rho||
  double bound = 0.0;    // 2 (Fermi) or epsilon (Bose)
};

// Fermi: s_n ||rho|| <= 2; Bose: s_n ||rho|| <= epsilon < 1.
AssumptionCheck check_assumptions(const SingleParticleState& rho, int n, Sector sector,
                                  const XiTable& xi, double epsilon);

// Seeded panel of pseudo-random Hermitian factors scaled to operator norm 1.
// Family f, factor i is drawn from mt19937_64 seeded with
// seed ^ (f * 0x9e3779b97f4a7c15 + i); entries are standard normal complex,
// Hermitized as (G + G^dagger)/2.
std::vector<ObservableFamily> observable_panel(std::uint64_t seed, int d, int k,
                                               int count = 16);

}  // namespace rdmkit
