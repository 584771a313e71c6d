#include "core/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "json.hpp"

namespace rdmkit {

namespace {

int worker_count(std::size_t cases) {
  int n = 0;
  if (const char* env = std::getenv("RDMKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) n = static_cast<int>(v);
  }
  if (n == 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(cases, 1)));
}

double max_entry_deviation(const Operator& a, const Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void run_case(VerifyCase& c, double tolerance) {
  try {
    const SingleParticleState rho = SingleParticleState::random(c.dim, c.seed);
    const XiTable xi = xi_table(rho, c.n, c.sector);
    const Operator brute =
        contract_bruteforce(rho, c.n, c.k, c.sector, false).matrix;
    const Operator recur =
        contract_recurrence(rho, c.n, c.k, c.sector, xi, false).matrix;
    const Operator expl =
        contract_explicit(rho, c.n, c.k, c.sector, xi, false).matrix;
    c.max_deviation = std::max({max_entry_deviation(brute, recur),
                                max_entry_deviation(brute, expl),
                                max_entry_deviation(recur, expl)});
    c.ok = c.max_deviation <= tolerance;
  } catch (const Error& e) {
    c.ok = false;
    c.error = e.what();
  }
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.dims.empty() || config.seeds.empty())
    fail(ErrorCode::InvalidArgument, "verify: dims and seeds must be nonempty");
  if (config.n_max < 2 || config.k_max < 1)
    fail(ErrorCode::InvalidArgument, "verify: need n_max >= 2 and k_max >= 1");

  VerifyReport report;
  for (int dim : config.dims) {
    if (dim < 2) fail(ErrorCode::InvalidArgument, "verify: dims must be >= 2");
    for (int n = 2; n <= config.n_max; ++n)
      for (int k = 1; k <= std::min(config.k_max, n - 1); ++k)
        for (Sector sector : {Sector::Fermi, Sector::Bose})
          for (std::uint64_t seed : config.seeds) {
            VerifyCase c;
            c.dim = dim;
            c.n = n;
            c.k = k;
            c.sector = sector;
            c.seed = seed;
            report.cases.push_back(c);
          }
  }

  std::atomic<std::size_t> next{0};
  const int workers = worker_count(report.cases.size());
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.cases.size()) break;
      run_case(report.cases[i], config.tolerance);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const auto& c : report.cases)
    if (!c.ok) ++report.failures;
  return report;
}

std::string verify_report_json(const VerifyConfig& config, const VerifyReport& report) {
  nlohmann::json j;
  j["dims"] = config.dims;
  j["n_max"] = config.n_max;
  j["k_max"] = config.k_max;
  j["seeds"] = config.seeds;
  j["tolerance"] = config.tolerance;
  j["case_count"] = report.cases.size();
  j["failures"] = report.failures;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    nlohmann::json e;
    e["dim"] = c.dim;
    e["n"] = c.n;
    e["k"] = c.k;
    e["sector"] = sector_name(c.sector);
    e["seed"] = c.seed;
    e["max_deviation"] = c.max_deviation;
    e["ok"] = c.ok;
    if (!c.error.empty()) e["error"] = c.error;
    j["cases"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace rdmkit
