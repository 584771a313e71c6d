#pragma once

#include "core/xi.hpp"

namespace rdmkit {

enum class Path { BruteForce, Recurrence, Explicit };

const char* path_name(Path p);
Path path_from_name(const std::string& name);

// A k-particle operator obtained by contracting the n-particle graded power
// of a single-particle state.  Unnormalized results carry trace xi_n;
// normalized ones are the trace-1 sigma^(k).
struct ContractionResult {
  Operator matrix;
  int n = 0;
  int k = 0;
  Sector sector = Sector::Fermi;
  Path path = Path::BruteForce;
  bool normalized = false;
  double xi_n = 0.0;
};

// L^k_n rho^{wedge n} via the literal partial trace of the graded power.
ContractionResult contract_bruteforce(const SingleParticleState& rho, int n, int k,
                                      Sector sector, bool normalized);

// Same operator via the double recursion: base case in k = 1, step in k.
ContractionResult contract_recurrence(const SingleParticleState& rho, int n, int k,
                                      Sector sector, const XiTable& xi,
                                      bool normalized = false);

// Same operator via the composition-sum closed form; cost polynomial in n,
// independent of d^n.
ContractionResult contract_explicit(const SingleParticleState& rho, int n, int k,
                                    Sector sector, const XiTable& xi,
                                    bool normalized = false);

// Normalized k-particle reduced density operator through the chosen path.
ContractionResult sigma_k(const SingleParticleState& rho, int n, int k, Sector sector,
                          Path path);

double binomial(int n, int k);

}  // namespace rdmkit
