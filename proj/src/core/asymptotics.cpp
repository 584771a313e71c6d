#include "core/asymptotics.hpp"

#include <random>

namespace rdmkit {

Operator sigma1_asymptotic(const SingleParticleState& rho, int n, Sector sector,
                           const XiTable& xi) {
  const double s = xi.ratio(n + 1);  // DegenerateState if xi_{n+1} = 0
  const int d = rho.dim();
  RealVector vals(d);
  if (sector == Sector::Fermi) {
    for (int i = 0; i < d; ++i) {
      const double sl = s * rho.eigenvalues[i];
      vals[i] = sl / ((n + 1) * (1.0 + sl));
    }
  } else {
    const double bound = s * rho.eigenvalues.maxCoeff();
    if (bound >= 1.0)
      fail(ErrorCode::NotInvertible,
           "I - s rho is not safely invertible (s ||rho|| >= 1)");
    for (int i = 0; i < d; ++i) {
      const double sl = s * rho.eigenvalues[i];
      vals[i] = sl / ((n + 1) * (1.0 - sl));
    }
  }
  return rho.eigenbasis * vals.asDiagonal() * rho.eigenbasis.adjoint();
}

Operator sigmak_product_approx(const Operator& sigma1, int k, Sector sector, int d) {
  if (k < 2) fail(ErrorCode::BadArity, "sigmak_product_approx: k >= 2 required");
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const Operator& proj = symmetrizer(sector, d, k);
  Operator t = kron_power(sigma1, k);
  return kfact * (proj * t * proj);
}

Operator sigmak_tensor_approx(const Operator& sigma1, int k) {
  if (k < 1) fail(ErrorCode::BadArity, "sigmak_tensor_approx: k >= 1 required");
  return kron_power(sigma1, k);
}

double strong_metric(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::BadArity, "strong_metric: dimension mismatch");
  return trace_norm(a - b);
}

double weak_metric(const Operator& a, const Operator& b,
                   const std::vector<ObservableFamily>& observables) {
  if (a.rows() != b.rows()) fail(ErrorCode::BadArity, "weak_metric: dimension mismatch");
  const Operator diff = a - b;
  double best = 0.0;
  for (const auto& fam : observables) {
    Operator c = Operator::Identity(1, 1);
    for (const auto& factor : fam.factors) {
      if (operator_norm(factor) > 1.0 + 1e-12)
        fail(ErrorCode::NormBoundViolated, "observable factor exceeds operator norm 1");
      c = tensor_product(c, factor);
    }
    if (c.rows() != diff.rows()) fail(ErrorCode::BadArity, "weak_metric: observable dims");
    best = std::max(best, std::abs((diff * c).trace()));
  }
  return best;
}

AssumptionCheck check_assumptions(const SingleParticleState& rho, int n, Sector sector,
                                  const XiTable& xi, double epsilon) {
  AssumptionCheck out;
  out.bound = (sector == Sector::Fermi) ? 2.0 : epsilon;
  out.product = xi.ratio(n) * rho.eigenvalues.maxCoeff();
  out.ok = out.product <= out.bound;
  return out;
}

std::vector<ObservableFamily> observable_panel(std::uint64_t seed, int d, int k,
                                               int count) {
  std::vector<ObservableFamily> panel(count);
  for (int f = 0; f < count; ++f) {
    panel[f].factors.reserve(k);
    for (int i = 0; i < k; ++i) {
      std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(f) * 0x9e3779b97f4a7c15ULL +
                                  static_cast<std::uint64_t>(i)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      Operator g(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
      Operator h = 0.5 * (g + g.adjoint());
      h /= operator_norm(h);
      panel[f].factors.push_back(std::move(h));
    }
  }
  return panel;
}

}  // namespace rdmkit
