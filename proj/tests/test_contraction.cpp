#include "doctest.h"

#include "core/contraction.hpp"

using namespace rdmkit;

namespace {

SingleParticleState mixed_qubit() {
  RealVector lam(2);
  lam << 0.5, 0.5;
  return SingleParticleState::from_eigenvalues(lam);
}

}  // namespace

TEST_CASE("hand values for the maximally mixed qubit, n = 2, k = 1") {
  const auto rho = mixed_qubit();
  const XiTable xf = xi_table(rho, 2, Sector::Fermi);
  const XiTable xb = xi_table(rho, 2, Sector::Bose);

  const Operator fermi = contract_explicit(rho, 2, 1, Sector::Fermi, xf, false).matrix;
  CHECK((fermi - 0.125 * Operator::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  const Operator bose = contract_explicit(rho, 2, 1, Sector::Bose, xb, false).matrix;
  CHECK((bose - 0.375 * Operator::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unnormalized trace equals xi_n, normalized trace equals one") {
  const auto rho = SingleParticleState::random(3, 23);
  for (Sector sector : {Sector::Fermi, Sector::Bose}) {
    const XiTable xi = xi_table(rho, 3, sector);
    const auto raw = contract_explicit(rho, 3, 2, sector, xi, false);
    CHECK(std::abs(raw.matrix.trace().real() - xi.value(3)) < 1e-9 * xi.value(3));
    const auto normalized = sigma_k(rho, 3, 2, sector, Path::Explicit);
    CHECK(std::abs(normalized.matrix.trace().real() - 1.0) < 1e-10);
  }
}

TEST_CASE("all three paths agree on random states") {
  for (std::uint64_t seed : {31ULL, 32ULL, 33ULL}) {
    for (int d : {2, 3}) {
      const auto rho = SingleParticleState::random(d, seed);
      for (Sector sector : {Sector::Fermi, Sector::Bose}) {
        for (int n = 2; n <= 4; ++n) {
          const XiTable xi = xi_table(rho, n, sector);
          for (int k = 1; k < n; ++k) {
            const Operator brute =
                contract_bruteforce(rho, n, k, sector, false).matrix;
            const Operator recur =
                contract_recurrence(rho, n, k, sector, xi, false).matrix;
            const Operator expl =
                contract_explicit(rho, n, k, sector, xi, false).matrix;
            CHECK((brute - recur).cwiseAbs().maxCoeff() < 1e-11);
            CHECK((brute - expl).cwiseAbs().maxCoeff() < 1e-11);
          }
        }
      }
    }
  }
}

TEST_CASE("results are Hermitian, positive and sector supported") {
  const auto rho = SingleParticleState::random(3, 41);
  for (Sector sector : {Sector::Fermi, Sector::Bose}) {
    const auto result = sigma_k(rho, 3, 2, sector, Path::BruteForce);
    const Operator& m = result.matrix;
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    const Operator& p = symmetrizer(sector, 3, 2);
    CHECK((p * m * p - m).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(hermitian_spectrum(m).eigenvalues.minCoeff() > -1e-10);
  }
}

TEST_CASE("normalization fails cleanly on a degenerate trace") {
  const auto rho = SingleParticleState::random(2, 43);
  CHECK_THROWS_AS((void)contract_bruteforce(rho, 3, 1, Sector::Fermi, true), Error);
  // The unnormalized contraction of an identically zero power is still fine.
  const auto raw = contract_bruteforce(rho, 3, 1, Sector::Fermi, false);
  CHECK(raw.matrix.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("argument validation") {
  const auto rho = SingleParticleState::random(2, 47);
  CHECK_THROWS_AS((void)contract_bruteforce(rho, 2, 3, Sector::Fermi, false), Error);
  const XiTable xi = xi_table(rho, 2, Sector::Bose);
  CHECK_THROWS_AS((void)contract_recurrence(rho, 2, 2, Sector::Bose, xi), Error);
  CHECK_THROWS_AS((void)contract_explicit(rho, 4, 2, Sector::Bose, xi), Error);
}

TEST_CASE("path names round trip") {
  CHECK(path_from_name("brute") == Path::BruteForce);
  CHECK(path_from_name(path_name(Path::Explicit)) == Path::Explicit);
  CHECK_THROWS_AS((void)path_from_name("fancy"), Error);
}
