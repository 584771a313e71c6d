#include "doctest.h"

#include "core/symmetry.hpp"
#include "core/xi.hpp"

using namespace rdmkit;

TEST_CASE("xi table of the maximally mixed qubit") {
  RealVector lam(2);
  lam << 0.5, 0.5;
  const auto rho = SingleParticleState::from_eigenvalues(lam);

  const XiTable fermi = xi_table(rho, 4, Sector::Fermi);
  CHECK(fermi.value(0) == 1.0);
  CHECK(fermi.value(1) == doctest::Approx(1.0));
  CHECK(fermi.value(2) == doctest::Approx(0.25));
  CHECK(fermi.value(3) == 0.0);
  CHECK(fermi.value(4) == 0.0);

  const XiTable bose = xi_table(rho, 4, Sector::Bose);
  CHECK(bose.value(2) == doctest::Approx(0.75));
  CHECK(bose.value(3) == doctest::Approx(0.5));
}

TEST_CASE("ratios are defined exactly where the values are positive") {
  RealVector lam(2);
  lam << 0.5, 0.5;
  const auto rho = SingleParticleState::from_eigenvalues(lam);
  const XiTable fermi = xi_table(rho, 4, Sector::Fermi);
  CHECK(fermi.ratio(2) == doctest::Approx(4.0));
  CHECK_THROWS_AS((void)fermi.ratio(3), Error);
  try {
    (void)fermi.ratio(3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateState);
  }
}

TEST_CASE("xi values equal traces of graded powers") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (int d : {2, 3}) {
      const auto rho = SingleParticleState::random(d, seed);
      for (Sector sector : {Sector::Fermi, Sector::Bose}) {
        const XiTable xi = xi_table(rho, 5, sector);
        for (int n = 1; n <= 5; ++n) {
          const double tr = graded_power(rho, n, sector).trace().real();
          CHECK(std::abs(xi.value(n) - tr) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("bosonic xi values stay positive for nonzero states") {
  const auto rho = SingleParticleState::random(3, 17);
  const XiTable bose = xi_table(rho, 12, Sector::Bose);
  for (int n = 0; n <= 12; ++n) CHECK(bose.value(n) > 0.0);
}
