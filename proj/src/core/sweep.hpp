#pragma once

#include <map>
#include <string>

#include "core/asymptotics.hpp"

namespace rdmkit {

struct SpectrumFamily {
  enum class Kind { Uniform, Thermal, Explicit } kind = Kind::Uniform;
  double beta = 1.0;           // Thermal
  double level_spacing = 0.1;  // Thermal
  std::string file;            // Explicit: JSON {"spectra": [[..], [..], ...]},
                               // one eigenvalue list per configured volume
};

struct SweepConfig {
  Sector sector = Sector::Fermi;
  double density = 0.5;        // n / volume in the thermodynamic limit
  std::vector<int> volumes;    // strictly increasing mode counts
  SpectrumFamily spectrum_family;
  int k_max = 2;
  std::uint64_t observable_seed = 0;
  double bose_epsilon = 0.0;   // 0 => density/(density+1) + 0.05, capped at 0.99

  double effective_bose_epsilon() const;
  static SweepConfig from_json_text(const std::string& text);
  static SweepConfig from_file(const std::string& path);
};

struct SweepRecord {
  int volume = 0;
  int n = 0;
  Sector sector = Sector::Fermi;
  double s_ratio = 0.0;                    // s_{n+1}
  bool assumption_ok = false;
  double strong_metric_sigma1 = 0.0;
  std::map<int, double> strong_metric_sigmak;  // k -> trace-norm distance
  std::map<int, double> weak_metric_k;         // k -> panel max
  double runtime_ms = 0.0;
  std::string error;                           // nonempty on per-point failure
};

// Eigenvalues (descending, length = volume) of the configured family.
RealVector sweep_spectrum(const SpectrumFamily& family, int volume, int volume_index);

// Eigenvalues of the exact sigma^(1), in the eigenbasis of rho.
RealVector sigma1_exact_eigs(const RealVector& lam, int n, const XiTable& xi,
                             Sector sector);

// Eigenvalues of the closed-form approximant, same basis.
RealVector sigma1_approx_eigs(const RealVector& lam, int n, const XiTable& xi,
                              Sector sector);

// Trace-norm distance between the exact sigma^(k) (composition-sum form) and
// k! sigma1-graded-power, evaluated on the sector subspace spectrum without
// building the d^k space.
double sigmak_strong_metric_spectral(const RealVector& lam, int n, int k,
                                     const XiTable& xi, Sector sector);

// Smallest eigenvalue of the exact sigma^(k), from the same sector-subspace
// spectrum as the strong metric.
double sigmak_exact_min_eig_spectral(const RealVector& lam, int n, int k,
                                     const XiTable& xi, Sector sector);

// |Tr (k! graded power of sigma1 - tensor power of sigma1) C| maximized over a
// seeded observable panel, via the cycle-decomposition trace formula.
double sigmak_weak_metric_spectral(const Operator& sigma1, int k, Sector sector,
                                   std::uint64_t observable_seed);

std::vector<SweepRecord> run_sweep(const SweepConfig& config, bool deterministic);

std::string sweep_csv(const std::vector<SweepRecord>& records, int k_max);
std::string sweep_json(const std::vector<SweepRecord>& records, int k_max);

}  // namespace rdmkit
