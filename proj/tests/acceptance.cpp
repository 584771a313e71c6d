// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Grids and thresholds are frozen here on purpose; do not loosen
// them to make a run green.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "core/asymptotics.hpp"
#include "core/sweep.hpp"

using namespace rdmkit;

namespace {

bool g_all_pass = true;

void report(int criterion, bool ok, const std::string& detail) {
  g_all_pass = g_all_pass && ok;
  std::printf("criterion %d: %s (%s)\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct GridOutcome {
  double max_path_deviation = 0.0;
  double worst_support_deviation = 0.0;
  double worst_min_eig = 0.0;
  int coleman_violations = 0;
  double runtime_s = 0.0;
};

// Criteria 1, 3 and 8 share the oracle grid: d = 2 with n <= 8, d = 3 with
// n <= 6, all 1 <= k < n, both sectors, 20 seeded states.
GridOutcome run_oracle_grid() {
  GridOutcome out;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<int, int>> dims{{2, 8}, {3, 6}};

  // Warm the projector cache once so workers only read it.
  for (const auto& [d, n_hi] : dims)
    for (Sector sector : {Sector::Fermi, Sector::Bose})
      for (int n = 1; n <= n_hi; ++n) (void)symmetrizer(sector, d, n);

  std::vector<std::tuple<int, int, std::uint64_t>> cells;
  for (const auto& [d, n_hi] : dims)
    for (std::uint64_t seed = 1; seed <= 20; ++seed) cells.emplace_back(d, n_hi, seed);

  std::atomic<std::size_t> next{0};
  std::mutex merge;
  auto work = [&] {
    GridOutcome local;
    while (true) {
      const std::size_t ci = next.fetch_add(1);
      if (ci >= cells.size()) break;
      const auto [d, n_hi, seed] = cells[ci];
      const auto rho = SingleParticleState::random(d, seed);
      for (Sector sector : {Sector::Fermi, Sector::Bose}) {
        for (int n = 2; n <= n_hi; ++n) {
          const XiTable xi = xi_table(rho, n, sector);
          for (int k = 1; k < n; ++k) {
            const Operator brute =
                contract_bruteforce(rho, n, k, sector, false).matrix;
            const Operator recur =
                contract_recurrence(rho, n, k, sector, xi, false).matrix;
            const Operator expl =
                contract_explicit(rho, n, k, sector, xi, false).matrix;
            local.max_path_deviation = std::max(
                {local.max_path_deviation, (brute - recur).cwiseAbs().maxCoeff(),
                 (brute - expl).cwiseAbs().maxCoeff(),
                 (recur - expl).cwiseAbs().maxCoeff()});

            const Operator& proj = symmetrizer(sector, d, k);
            for (const Operator* m : {&brute, &recur, &expl}) {
              local.worst_support_deviation =
                  std::max(local.worst_support_deviation,
                           (proj * (*m) * proj - *m).cwiseAbs().maxCoeff());
              const Operator herm = 0.5 * (*m + m->adjoint());
              local.worst_min_eig =
                  std::min(local.worst_min_eig,
                           hermitian_spectrum(herm).eigenvalues.minCoeff());
            }

            if (k == 1 && sector == Sector::Fermi && xi.value(n) > 0.0) {
              const double norm = sigma1_exact_eigs(rho.eigenvalues, n, xi, sector)
                                      .cwiseAbs()
                                      .maxCoeff();
              if (norm > 1.0 / n + 1e-12) ++local.coleman_violations;
            }
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    out.max_path_deviation = std::max(out.max_path_deviation, local.max_path_deviation);
    out.worst_support_deviation =
        std::max(out.worst_support_deviation, local.worst_support_deviation);
    out.worst_min_eig = std::min(out.worst_min_eig, local.worst_min_eig);
    out.coleman_violations += local.coleman_violations;
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  out.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
  return out;
}

SweepConfig uniform_config(Sector sector) {
  SweepConfig cfg;
  cfg.sector = sector;
  cfg.density = 0.5;
  cfg.volumes = {20, 40, 60};
  cfg.k_max = 3;
  cfg.observable_seed = 2024;
  return cfg;
}

SweepConfig thermal_config(Sector sector) {
  SweepConfig cfg;
  cfg.sector = sector;
  cfg.density = 0.3;
  cfg.volumes = {20, 40, 60};
  cfg.spectrum_family.kind = SpectrumFamily::Kind::Thermal;
  cfg.spectrum_family.beta = 1.0;
  cfg.spectrum_family.level_spacing = 0.1;
  cfg.k_max = 3;
  cfg.observable_seed = 2024;
  return cfg;
}

int coleman_sweep_violations(const SweepConfig& cfg) {
  int violations = 0;
  for (std::size_t vi = 0; vi < cfg.volumes.size(); ++vi) {
    const int volume = cfg.volumes[vi];
    const int n = static_cast<int>(std::lround(cfg.density * volume));
    const RealVector lam =
        sweep_spectrum(cfg.spectrum_family, volume, static_cast<int>(vi));
    const XiTable xi = xi_table(SingleParticleState::from_eigenvalues(lam), n + 1,
                                Sector::Fermi);
    const RealVector eigs = sigma1_exact_eigs(lam, n, xi, Sector::Fermi);
    if (eigs.cwiseAbs().maxCoeff() > 1.0 / n + 1e-12) ++violations;
  }
  return violations;
}

Operator random_bounded(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m / operator_norm(m);
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

}  // namespace

int main() {
  // --- criteria 1, 3 (grid part), 8 (grid part) ------------------------
  const GridOutcome grid = run_oracle_grid();
  report(1, grid.max_path_deviation < 1e-9 && grid.runtime_s < 300.0,
         "three-path max deviation " + fmt(grid.max_path_deviation) + ", " +
             fmt(grid.runtime_s) + " s");

  // --- criterion 2: xi values against graded-power traces ---------------
  {
    double worst = 0.0;
    double worst_zero = 0.0;
    for (int d : {2, 3}) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto rho = SingleParticleState::random(d, seed);
        for (Sector sector : {Sector::Fermi, Sector::Bose}) {
          const XiTable xi = xi_table(rho, 5, sector);
          for (int n = 1; n <= 5; ++n) {
            const double tr = graded_power(rho, n, sector).trace().real();
            worst = std::max(worst, std::abs(xi.value(n) - tr));
            if (sector == Sector::Fermi && n > d)
              worst_zero = std::max(worst_zero, std::abs(xi.value(n)));
          }
        }
      }
    }
    report(2, worst < 1e-10 && worst_zero < 1e-12,
           "max |xi - trace| " + fmt(worst) + ", max vanishing-order residue " +
               fmt(worst_zero));
  }

  // --- criterion 3: Coleman norm bound ----------------------------------
  {
    const int sweep_violations =
        coleman_sweep_violations(uniform_config(Sector::Fermi)) +
        coleman_sweep_violations(thermal_config(Sector::Fermi));
    const int total = grid.coleman_violations + sweep_violations;
    report(3, total == 0,
           std::to_string(total) + " violation(s) of |sigma1| <= 1/n");
  }

  // --- criterion 4: cycle-decomposition trace formula -------------------
  {
    double worst = 0.0;
    for (Sector sector : {Sector::Fermi, Sector::Bose}) {
      for (int i = 0; i < 50; ++i) {
        const int d = 2 + (i % 2);
        const int k = 2 + (i % 3);
        std::vector<Operator> bs;
        for (int j = 0; j < k; ++j)
          bs.push_back(random_bounded(
              d, 1000 + 100 * static_cast<std::uint64_t>(i) + j +
                     (sector == Sector::Bose ? 50000 : 0)));
        double kfact = 1.0;
        for (int f = 2; f <= k; ++f) kfact *= f;
        Operator t = bs[0];
        for (int j = 1; j < k; ++j) t = tensor_product(t, bs[j]);
        const Complex dense = kfact * (t * symmetrizer(sector, d, k)).trace();
        worst = std::max(worst, std::abs(sector_trace(bs, sector) - dense));
      }
    }
    report(4, worst < 1e-10, "max |cycle formula - dense| " + fmt(worst));
  }

  // --- criteria 5 and 7: uniform-family sweeps --------------------------
  const auto uniform_fermi = run_sweep(uniform_config(Sector::Fermi), true);
  const auto uniform_bose = run_sweep(uniform_config(Sector::Bose), true);
  {
    bool ok = true;
    double worst = 0.0;
    std::vector<double> fermi_vals, bose_vals;
    for (const auto& r : uniform_fermi) {
      ok = ok && r.error.empty();
      worst = std::max(worst,
                       std::abs(r.strong_metric_sigma1 - 1.0 / (r.volume + 1.0)));
      fermi_vals.push_back(r.strong_metric_sigma1);
    }
    for (const auto& r : uniform_bose) {
      ok = ok && r.error.empty();
      worst = std::max(worst,
                       std::abs(r.strong_metric_sigma1 - 1.0 / (r.volume - 1.0)));
      bose_vals.push_back(r.strong_metric_sigma1);
    }
    ok = ok && worst < 1e-9 && strictly_decreasing(fermi_vals) &&
         strictly_decreasing(bose_vals);
    report(5, ok, "max deviation from 1/(V+-1): " + fmt(worst));
  }

  // --- criterion 6: thermal-family decrease with assumption flags -------
  const auto thermal_fermi = run_sweep(thermal_config(Sector::Fermi), true);
  const auto thermal_bose = run_sweep(thermal_config(Sector::Bose), true);
  {
    bool ok = true;
    std::ostringstream detail;
    for (const auto* recs : {&thermal_fermi, &thermal_bose}) {
      const Sector sector = recs->front().sector;
      bool flags = true;
      for (const auto& r : *recs) {
        ok = ok && r.error.empty();
        flags = flags && r.assumption_ok;
      }
      for (int k = 2; k <= 3; ++k) {
        std::vector<double> vals;
        for (const auto& r : *recs) vals.push_back(r.strong_metric_sigmak.at(k));
        const bool dec = strictly_decreasing(vals);
        ok = ok && dec;
        detail << sector_name(sector) << " k=" << k << " ["
               << fmt(vals[0]) << ", " << fmt(vals[1]) << ", " << fmt(vals[2])
               << "]" << (dec ? "" : " not decreasing") << "; ";
      }
      ok = ok && flags;
      if (!flags) detail << sector_name(sector) << " assumption flags false; ";
    }
    report(6, ok, detail.str());
  }

  // --- criterion 7: weak metrics on the uniform family ------------------
  {
    bool ok = true;
    double worst_final = 0.0;
    for (const auto* recs : {&uniform_fermi, &uniform_bose}) {
      for (int k = 2; k <= 3; ++k) {
        std::vector<double> vals;
        for (const auto& r : *recs) vals.push_back(r.weak_metric_k.at(k));
        ok = ok && strictly_decreasing(vals) && vals.back() < 0.05;
        worst_final = std::max(worst_final, vals.back());
      }
    }
    report(7, ok, "largest weak metric at V=60: " + fmt(worst_final));
  }

  // --- criterion 8: statistics preservation and positivity --------------
  {
    double worst_support = grid.worst_support_deviation;
    double worst_eig = grid.worst_min_eig;
    // Thermal grid, dense where d^k fits the cap (V = 20, k = 2), spectral
    // eigenvalue floor everywhere.
    for (Sector sector : {Sector::Fermi, Sector::Bose}) {
      const SweepConfig cfg = thermal_config(sector);
      const RealVector lam20 = sweep_spectrum(cfg.spectrum_family, 20, 0);
      const auto rho = SingleParticleState::from_eigenvalues(lam20);
      const XiTable xi20 = xi_table(rho, 6, sector);
      const Operator dense =
          contract_explicit(rho, 6, 2, sector, xi20, true).matrix;
      const Operator& proj = symmetrizer(sector, 20, 2);
      worst_support = std::max(worst_support,
                               (proj * dense * proj - dense).cwiseAbs().maxCoeff());
      worst_eig =
          std::min(worst_eig, hermitian_spectrum(dense).eigenvalues.minCoeff());
      for (std::size_t vi = 0; vi < cfg.volumes.size(); ++vi) {
        const int volume = cfg.volumes[vi];
        const int n = static_cast<int>(std::lround(cfg.density * volume));
        const RealVector lam =
            sweep_spectrum(cfg.spectrum_family, volume, static_cast<int>(vi));
        const XiTable xi =
            xi_table(SingleParticleState::from_eigenvalues(lam), n, sector);
        for (int k = 2; k <= cfg.k_max; ++k)
          worst_eig = std::min(
              worst_eig, sigmak_exact_min_eig_spectral(lam, n, k, xi, sector));
      }
    }
    report(8, worst_support < 1e-10 && worst_eig >= -1e-10,
           "max support deviation " + fmt(worst_support) + ", min eigenvalue " +
               fmt(worst_eig));
  }

  // --- criterion 9: byte-identical deterministic sweeps -----------------
  {
    const SweepConfig cfg = uniform_config(Sector::Fermi);
    const std::string a = sweep_csv(run_sweep(cfg, true), cfg.k_max);
    const std::string b = sweep_csv(run_sweep(cfg, true), cfg.k_max);
    report(9, !a.empty() && a == b,
           a == b ? "two deterministic runs byte-identical"
                  : "deterministic runs differ");
  }

  return g_all_pass ? 0 : 1;
}
