#pragma once

#include <cstdint>

#include "core/operator_core.hpp"

namespace rdmkit {

// Nonnegative selfadjoint trace-class matrix on the d-dimensional
// single-particle space, stored together with its spectral decomposition.
struct SingleParticleState {
  Operator base;            // d x d Hermitian, >= 0
  RealVector eigenvalues;   // descending, clamped to [0, inf)
  Operator eigenbasis;      // unitary, base = U diag(lambda) U^dagger

  int dim() const { return static_cast<int>(base.rows()); }

  // rho^p in the eigenbasis (p >= 0).
  Operator power(int p) const;

  static SingleParticleState from_matrix(const Operator& rho);
  static SingleParticleState from_eigenvalues(const RealVector& descending);

  // G^dagger G / Tr(G^dagger G) for seeded standard-normal complex G.
  static SingleParticleState random(int d, std::uint64_t seed);
};

}  // namespace rdmkit
