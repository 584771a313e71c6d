#pragma once

#include <vector>

#include "core/operator_core.hpp"
#include "core/state.hpp"

namespace rdmkit {

enum class Sector { Fermi, Bose };

const char* sector_name(Sector s);
Sector sector_from_name(const std::string& name);

// Bijection on {0..k-1}; images[i] = pi(i).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  static Permutation identity(int k);
  Permutation compose(const Permutation& other) const;  // this o other
  Permutation inverse() const;
  int sign() const;  // (-1)^{k - #cycles}
};

// Disjoint cycles; within a cycle pi(l_s) = l_{s+1} and pi(l_last) = l_first.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

CycleDecomposition cycle_decompose(const Permutation& pi);

// Unitary 0/1 matrix permuting tensor factors: maps the product basis vector
// with digits (x_1..x_n) to the one with digits (x_{pi^{-1}(1)}..x_{pi^{-1}(n)}).
Operator permutation_operator(const Permutation& pi, int d, int n);

// Antisymmetrizer A^(n) (Fermi) or symmetrizer S^(n) (Bose):
// (1/n!) sum over pi of [sgn pi] P(pi).  Cached per (sector, d, n); n <= 8.
const Operator& symmetrizer(Sector sector, int d, int n);

// B wedge C = A^(k+m) (B otimes C) A^(k+m), and the vee analog.
// B acts on d^k, C on d^m.
Operator graded_product(const Operator& b, const Operator& c, Sector sector, int d);

// rho^{wedge n} = A^(n) rho^{otimes n} (or the vee analog).  Exact zero for
// Fermi with n > d.
Operator graded_power(const SingleParticleState& rho, int n, Sector sector);

// k! Tr[(B_1 otimes ... otimes B_k) * projector] computed by the
// cycle-decomposition trace formula, without building the d^k space.
Complex sector_trace(const std::vector<Operator>& bs, Sector sector);

// Number of tensor factors of an operator on a power of the d-dim space.
int factor_count(const Operator& op, int d);

}  // namespace rdmkit
