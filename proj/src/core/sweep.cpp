#include "core/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace rdmkit {

double SweepConfig::effective_bose_epsilon() const {
  if (bose_epsilon > 0.0) return bose_epsilon;
  return std::min(0.99, density / (density + 1.0) + 0.05);
}

namespace {

using nlohmann::json;

SpectrumFamily family_from_json(const json& j) {
  SpectrumFamily fam;
  const std::string kind = j.value("kind", "uniform");
  if (kind == "uniform") {
    fam.kind = SpectrumFamily::Kind::Uniform;
  } else if (kind == "thermal") {
    fam.kind = SpectrumFamily::Kind::Thermal;
    fam.beta = j.value("beta", 1.0);
    fam.level_spacing = j.value("level_spacing", 0.1);
  } else if (kind == "explicit") {
    fam.kind = SpectrumFamily::Kind::Explicit;
    if (!j.contains("file"))
      fail(ErrorCode::InvalidArgument, "explicit spectrum family needs a 'file' entry");
    fam.file = j.at("file").get<std::string>();
  } else {
    fail(ErrorCode::InvalidArgument, "unknown spectrum family '" + kind + "'");
  }
  return fam;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

SweepConfig SweepConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad sweep config JSON: ") + e.what());
  }
  SweepConfig cfg;
  try {
    cfg.sector = sector_from_name(j.value("sector", "fermi"));
    cfg.density = j.value("density", 0.5);
    cfg.volumes = j.at("volumes").get<std::vector<int>>();
    if (j.contains("spectrum_family"))
      cfg.spectrum_family = family_from_json(j.at("spectrum_family"));
    cfg.k_max = j.value("k_max", 2);
    cfg.observable_seed = j.value("observable_seed", std::uint64_t{0});
    cfg.bose_epsilon = j.value("bose_epsilon", 0.0);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad sweep config: ") + e.what());
  }
  if (cfg.volumes.empty()) fail(ErrorCode::InvalidArgument, "sweep config: empty volume list");
  for (std::size_t i = 0; i < cfg.volumes.size(); ++i) {
    if (cfg.volumes[i] < 2)
      fail(ErrorCode::InvalidArgument, "sweep config: volumes must be >= 2");
    if (i > 0 && cfg.volumes[i] <= cfg.volumes[i - 1])
      fail(ErrorCode::InvalidArgument, "sweep config: volumes must be strictly increasing");
  }
  if (cfg.density <= 0.0 || cfg.density >= 1.0)
    fail(ErrorCode::InvalidArgument, "sweep config: density must lie in (0, 1)");
  if (cfg.k_max < 1) fail(ErrorCode::InvalidArgument, "sweep config: k_max >= 1 required");
  return cfg;
}

SweepConfig SweepConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open sweep config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

RealVector sweep_spectrum(const SpectrumFamily& family, int volume, int volume_index) {
  switch (family.kind) {
    case SpectrumFamily::Kind::Uniform:
      return RealVector::Constant(volume, 1.0 / volume);
    case SpectrumFamily::Kind::Thermal: {
      RealVector lam(volume);
      for (int i = 0; i < volume; ++i)
        lam[i] = std::exp(-family.beta * family.level_spacing * i);
      lam /= lam.sum();
      return lam;
    }
    case SpectrumFamily::Kind::Explicit: {
      std::ifstream in(family.file);
      if (!in) fail(ErrorCode::Io, "cannot open spectrum file '" + family.file + "'");
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        fail(ErrorCode::Io, std::string("bad spectrum file: ") + e.what());
      }
      if (!j.contains("spectra") || !j.at("spectra").is_array() ||
          volume_index >= static_cast<int>(j.at("spectra").size()))
        fail(ErrorCode::InvalidArgument, "spectrum file lacks an entry for this volume");
      auto list = j.at("spectra")[volume_index].get<std::vector<double>>();
      if (static_cast<int>(list.size()) != volume)
        fail(ErrorCode::InvalidArgument, "spectrum length does not match the volume");
      std::sort(list.begin(), list.end(), std::greater<double>());
      RealVector lam(volume);
      for (int i = 0; i < volume; ++i) {
        if (list[i] < 0.0)
          fail(ErrorCode::InvalidArgument, "explicit spectrum has a negative eigenvalue");
        lam[i] = list[i];
      }
      return lam;
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown spectrum family");
}

RealVector sigma1_exact_eigs(const RealVector& lam, int n, const XiTable& xi,
                             Sector sector) {
  const int d = static_cast<int>(lam.size());
  const double xi_n = xi.value(n);
  if (xi_n <= 0.0) fail(ErrorCode::DegenerateState, "xi_n = 0 in sigma1_exact_eigs");
  RealVector out = RealVector::Zero(d);
  if (sector == Sector::Fermi) {
    // The alternating power-sum form cancels badly near rank deficiency;
    // lam_i * e_{n-1}(lam without i) is the same value from nonnegative terms.
    std::vector<double> e(n);
    for (int i = 0; i < d; ++i) {
      std::fill(e.begin(), e.end(), 0.0);
      e[0] = 1.0;
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        for (int m = n - 1; m >= 1; --m) e[m] += lam[j] * e[m - 1];
      }
      out[i] = lam[i] * e[n - 1] / (n * xi_n);
    }
  } else {
    for (int i = 0; i < d; ++i) {
      double acc = 0.0;
      double lp = 1.0;
      for (int j = 1; j <= n; ++j) {
        lp *= lam[i];
        acc += xi.value(n - j) * lp;
      }
      out[i] = acc / (n * xi_n);
    }
  }
  return out;
}

RealVector sigma1_approx_eigs(const RealVector& lam, int n, const XiTable& xi,
                              Sector sector) {
  const double s = xi.ratio(n + 1);
  const int d = static_cast<int>(lam.size());
  if (sector == Sector::Bose && s * lam.maxCoeff() >= 1.0)
    fail(ErrorCode::NotInvertible, "I - s rho is not safely invertible (s ||rho|| >= 1)");
  RealVector out(d);
  for (int i = 0; i < d; ++i) {
    const double sl = s * lam[i];
    out[i] = (sector == Sector::Fermi) ? sl / ((n + 1) * (1.0 + sl))
                                       : sl / ((n + 1) * (1.0 - sl));
  }
  return out;
}

namespace {

struct WeightedComposition {
  std::vector<int> parts;  // k entries, each >= 1
  double weight;           // xi_{n - sum} with the sector sign
};

std::vector<WeightedComposition> compositions(int n, int k, const XiTable& xi,
                                              Sector sector) {
  std::vector<WeightedComposition> out;
  std::vector<int> comp(k, 1);
  while (true) {
    int total = 0;
    for (int c : comp) total += c;
    if (total <= n) {
      double w = xi.value(n - total);
      if (sector == Sector::Fermi && (k + total) % 2 != 0) w = -w;
      if (w != 0.0) out.push_back({comp, w});
    }
    int pos = k - 1;
    while (pos >= 0) {
      ++comp[pos];
      int rest = 0;
      for (int j = 0; j <= pos; ++j) rest += comp[j];
      if (rest + (k - 1 - pos) <= n) {
        for (int j = pos + 1; j < k; ++j) comp[j] = 1;
        break;
      }
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// Visits every mode subset (Fermi) or multiset (Bose) of size k together with
// the eigenvalue of the exact sigma^(k) on the matching (anti)symmetrized
// product of rho eigenvectors.  Both the exact operator and the graded
// approximant are diagonal in that basis, which is what makes trace-norm and
// spectrum queries possible far beyond the dense d^k cap.
template <typename Fn>
void for_each_exact_eigenvalue(const RealVector& lam, int n, int k,
                               const XiTable& xi, Sector sector, Fn&& fn) {
  const int d = static_cast<int>(lam.size());
  const double xi_n = xi.value(n);
  if (xi_n <= 0.0) fail(ErrorCode::DegenerateState, "xi_n = 0 in spectral evaluation");
  const double denom = binomial(n, k) * xi_n;

  Eigen::MatrixXd pow(d, n + 1);
  pow.col(0).setOnes();
  for (int p = 1; p <= n; ++p) pow.col(p) = pow.col(p - 1).cwiseProduct(lam);

  const auto comps = compositions(n, k, xi, sector);
  const bool strict = (sector == Sector::Fermi);
  if (strict && k > d) return;
  std::vector<int> x(k);
  for (int j = 0; j < k; ++j) x[j] = strict ? j : 0;
  while (true) {
    double t = 0.0;
    for (const auto& wc : comps) {
      double prod = wc.weight;
      for (int j = 0; j < k; ++j) prod *= pow(x[j], wc.parts[j]);
      t += prod;
    }
    fn(x, t / denom);

    int pos = k - 1;
    while (pos >= 0) {
      ++x[pos];
      const int limit = strict ? d - (k - 1 - pos) : d;
      if (x[pos] < limit) {
        for (int j = pos + 1; j < k; ++j) x[j] = strict ? x[j - 1] + 1 : x[pos];
        break;
      }
      --pos;
    }
    if (pos < 0) break;
  }
}

}  // namespace

double sigmak_strong_metric_spectral(const RealVector& lam, int n, int k,
                                     const XiTable& xi, Sector sector) {
  if (k < 1 || k > n) fail(ErrorCode::BadArity, "strong metric: need 1 <= k <= n");
  if (k == 1) {
    const RealVector exact = sigma1_exact_eigs(lam, n, xi, sector);
    const RealVector approx = sigma1_approx_eigs(lam, n, xi, sector);
    return (exact - approx).cwiseAbs().sum();
  }
  const RealVector s1 = sigma1_approx_eigs(lam, n, xi, sector);
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  double metric = 0.0;
  for_each_exact_eigenvalue(lam, n, k, xi, sector,
                            [&](const std::vector<int>& x, double exact) {
                              double approx = kfact;
                              for (int j = 0; j < k; ++j) approx *= s1[x[j]];
                              metric += std::abs(exact - approx);
                            });
  return metric;
}

double sigmak_exact_min_eig_spectral(const RealVector& lam, int n, int k,
                                     const XiTable& xi, Sector sector) {
  if (k < 1 || k > n) fail(ErrorCode::BadArity, "min eig: need 1 <= k <= n");
  if (k == 1) return sigma1_exact_eigs(lam, n, xi, sector).minCoeff();
  double lo = std::numeric_limits<double>::infinity();
  for_each_exact_eigenvalue(lam, n, k, xi, sector,
                            [&](const std::vector<int>&, double exact) {
                              lo = std::min(lo, exact);
                            });
  return lo;
}

double sigmak_weak_metric_spectral(const Operator& sigma1, int k, Sector sector,
                                   std::uint64_t observable_seed) {
  if (k < 2) fail(ErrorCode::BadArity, "weak metric: k >= 2 required");
  const int d = static_cast<int>(sigma1.rows());
  const auto panel = observable_panel(observable_seed, d, k);
  double best = 0.0;
  for (const auto& fam : panel) {
    std::vector<Operator> bs;
    bs.reserve(k);
    Complex ident(1.0, 0.0);
    for (const auto& c : fam.factors) {
      bs.push_back(c * sigma1);
      ident *= (sigma1 * c).trace();
    }
    best = std::max(best, std::abs(sector_trace(bs, sector) - ident));
  }
  return best;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, bool deterministic) {
  std::vector<SweepRecord> records;
  records.reserve(config.volumes.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t vi = 0; vi < config.volumes.size(); ++vi) {
    const int volume = config.volumes[vi];
    SweepRecord rec;
    rec.volume = volume;
    rec.sector = config.sector;
    rec.s_ratio = nan;
    rec.strong_metric_sigma1 = nan;
    for (int k = 2; k <= config.k_max; ++k) {
      rec.strong_metric_sigmak[k] = nan;
      rec.weak_metric_k[k] = nan;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      const int n = static_cast<int>(std::lround(config.density * volume));
      rec.n = n;
      if (n <= config.k_max)
        fail(ErrorCode::BadArity, "volume too small: n must exceed k_max");
      const RealVector lam =
          sweep_spectrum(config.spectrum_family, volume, static_cast<int>(vi));
      const SingleParticleState rho = SingleParticleState::from_eigenvalues(lam);
      const XiTable xi = xi_table(rho, n + 1, config.sector);

      rec.s_ratio = xi.ratio(n + 1);
      const auto check = check_assumptions(rho, n, config.sector, xi,
                                           config.effective_bose_epsilon());
      rec.assumption_ok = check.ok;

      rec.strong_metric_sigma1 =
          sigmak_strong_metric_spectral(lam, n, 1, xi, config.sector);
      for (int k = 2; k <= config.k_max; ++k)
        rec.strong_metric_sigmak[k] =
            sigmak_strong_metric_spectral(lam, n, k, xi, config.sector);

      const RealVector s1_exact = sigma1_exact_eigs(lam, n, xi, config.sector);
      const Operator sigma1 = rho.eigenbasis *
                              s1_exact.asDiagonal().toDenseMatrix() *
                              rho.eigenbasis.adjoint();
      for (int k = 2; k <= config.k_max; ++k)
        rec.weak_metric_k[k] =
            sigmak_weak_metric_spectral(sigma1, k, config.sector, config.observable_seed);
    } catch (const Error& e) {
      rec.error = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.runtime_ms =
        deterministic
            ? 0.0
            : std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(std::move(rec));
  }
  return records;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, int k_max) {
  std::ostringstream out;
  out << "volume,n,sector,s_ratio,assumption_ok,strong_sigma1";
  for (int k = 2; k <= k_max; ++k) out << ",strong_sigma" << k;
  for (int k = 2; k <= k_max; ++k) out << ",weak_k" << k;
  out << ",runtime_ms\n";
  for (const auto& r : records) {
    out << r.volume << ',' << r.n << ',' << sector_name(r.sector) << ','
        << fmt(r.s_ratio) << ',' << (r.assumption_ok ? "true" : "false") << ','
        << fmt(r.strong_metric_sigma1);
    for (int k = 2; k <= k_max; ++k) out << ',' << fmt(r.strong_metric_sigmak.at(k));
    for (int k = 2; k <= k_max; ++k) out << ',' << fmt(r.weak_metric_k.at(k));
    out << ',' << fmt(r.runtime_ms) << '\n';
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRecord>& records, int k_max) {
  json j;
  j["k_max"] = k_max;
  j["records"] = json::array();
  for (const auto& r : records) {
    json e;
    e["volume"] = r.volume;
    e["n"] = r.n;
    e["sector"] = sector_name(r.sector);
    e["s_ratio"] = r.s_ratio;
    e["assumption_ok"] = r.assumption_ok;
    e["strong_sigma1"] = r.strong_metric_sigma1;
    for (int k = 2; k <= k_max; ++k) {
      e["strong_sigma" + std::to_string(k)] = r.strong_metric_sigmak.at(k);
      e["weak_k" + std::to_string(k)] = r.weak_metric_k.at(k);
    }
    e["runtime_ms"] = r.runtime_ms;
    if (!r.error.empty()) e["error"] = r.error;
    j["records"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace rdmkit
