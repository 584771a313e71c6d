#include "rdmkit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/asymptotics.hpp"
#include "core/io.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

rdm_status status_from_code(rdmkit::ErrorCode code) {
  using EC = rdmkit::ErrorCode;
  switch (code) {
    case EC::NotHermitian: return RDM_ERR_NOT_HERMITIAN;
    case EC::BadArity: return RDM_ERR_BAD_ARITY;
    case EC::DimensionOverflow: return RDM_ERR_DIMENSION_OVERFLOW;
    case EC::DegenerateState: return RDM_ERR_DEGENERATE_STATE;
    case EC::NotInvertible: return RDM_ERR_NOT_INVERTIBLE;
    case EC::NormBoundViolated: return RDM_ERR_NORM_BOUND_VIOLATED;
    case EC::Io: return RDM_ERR_IO;
    case EC::InvalidArgument: return RDM_ERR_INVALID_ARGUMENT;
  }
  return RDM_ERR_UNKNOWN;
}

template <typename Fn>
rdm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RDM_OK;
  } catch (const rdmkit::Error& e) {
    g_last_error = e.what();
    return status_from_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RDM_ERR_UNKNOWN;
  }
}

rdmkit::Sector to_sector(rdm_sector s) {
  return s == RDM_SECTOR_FERMI ? rdmkit::Sector::Fermi : rdmkit::Sector::Bose;
}

rdmkit::Path to_path(rdm_path p) {
  switch (p) {
    case RDM_PATH_BRUTE: return rdmkit::Path::BruteForce;
    case RDM_PATH_RECURRENCE: return rdmkit::Path::Recurrence;
    case RDM_PATH_EXPLICIT: return rdmkit::Path::Explicit;
  }
  rdmkit::fail(rdmkit::ErrorCode::InvalidArgument, "bad path enum value");
}

rdmkit::ContractionResult contract_dispatch(const rdmkit::SingleParticleState& rho,
                                            int n, int k, rdmkit::Sector sector,
                                            rdmkit::Path path, bool normalized) {
  switch (path) {
    case rdmkit::Path::BruteForce:
      return rdmkit::contract_bruteforce(rho, n, k, sector, normalized);
    case rdmkit::Path::Recurrence: {
      const auto xi = rdmkit::xi_table(rho, n, sector);
      if (k == n) return rdmkit::contract_bruteforce(rho, n, k, sector, normalized);
      return rdmkit::contract_recurrence(rho, n, k, sector, xi, normalized);
    }
    case rdmkit::Path::Explicit: {
      const auto xi = rdmkit::xi_table(rho, n, sector);
      return rdmkit::contract_explicit(rho, n, k, sector, xi, normalized);
    }
  }
  rdmkit::fail(rdmkit::ErrorCode::InvalidArgument, "bad path");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) rdmkit::fail(rdmkit::ErrorCode::Io, "allocation failed");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct rdm_state {
  rdmkit::SingleParticleState impl;
};

struct rdm_operator {
  rdmkit::Operator matrix;
  bool has_meta = false;
  rdmkit::ContractionResult meta;  // valid when has_meta
};

struct rdm_xi {
  rdmkit::XiTable impl;
};

extern "C" {

const char* rdm_status_name(rdm_status status) {
  switch (status) {
    case RDM_OK: return "ok";
    case RDM_ERR_NOT_HERMITIAN: return "not_hermitian";
    case RDM_ERR_BAD_ARITY: return "bad_arity";
    case RDM_ERR_DIMENSION_OVERFLOW: return "dimension_overflow";
    case RDM_ERR_DEGENERATE_STATE: return "degenerate_state";
    case RDM_ERR_NOT_INVERTIBLE: return "not_invertible";
    case RDM_ERR_NORM_BOUND_VIOLATED: return "norm_bound_violated";
    case RDM_ERR_IO: return "io";
    case RDM_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case RDM_ERR_UNKNOWN: return "unknown";
  }
  return "unknown";
}

const char* rdm_last_error(void) { return g_last_error.c_str(); }

rdm_status rdm_state_load(const char* path, rdm_state_t** out) {
  if (!path || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new rdm_state{rdmkit::state_from_file(path)}; });
}

rdm_status rdm_state_parse(const char* json_text, rdm_state_t** out) {
  if (!json_text || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new rdm_state{rdmkit::state_from_json_text(json_text)}; });
}

rdm_status rdm_state_random(int dim, uint64_t seed, rdm_state_t** out) {
  if (!out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = new rdm_state{rdmkit::SingleParticleState::random(dim, seed)}; });
}

int rdm_state_dim(const rdm_state_t* state) { return state ? state->impl.dim() : 0; }

void rdm_state_free(rdm_state_t* state) { delete state; }

rdm_status rdm_xi_compute(const rdm_state_t* state, int n_max, rdm_sector sector,
                          rdm_xi_t** out) {
  if (!state || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new rdm_xi{rdmkit::xi_table(state->impl, n_max, to_sector(sector))};
  });
}

rdm_status rdm_xi_value(const rdm_xi_t* xi, int n, double* out) {
  if (!xi || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = xi->impl.value(n); });
}

rdm_status rdm_xi_ratio(const rdm_xi_t* xi, int n, double* out) {
  if (!xi || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = xi->impl.ratio(n); });
}

rdm_status rdm_xi_save(const rdm_xi_t* xi, const char* path) {
  if (!xi || !path) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] { rdmkit::atomic_write(path, rdmkit::xi_to_json_text(xi->impl)); });
}

void rdm_xi_free(rdm_xi_t* xi) { delete xi; }

rdm_status rdm_contract(const rdm_state_t* state, int n, int k, rdm_sector sector,
                        rdm_path path, int normalized, rdm_operator_t** out) {
  if (!state || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto result = contract_dispatch(state->impl, n, k, to_sector(sector),
                                    to_path(path), normalized != 0);
    auto* op = new rdm_operator;
    op->matrix = result.matrix;
    op->has_meta = true;
    op->meta = std::move(result);
    *out = op;
  });
}

rdm_status rdm_contract_save(const rdm_state_t* state, int n, int k,
                             rdm_sector sector, rdm_path path, int normalized,
                             const char* out_path) {
  if (!state || !out_path) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto result = contract_dispatch(state->impl, n, k, to_sector(sector),
                                          to_path(path), normalized != 0);
    rdmkit::atomic_write(out_path, rdmkit::contraction_to_json_text(result));
  });
}

rdm_status rdm_sigma1_asymptotic(const rdm_state_t* state, int n, rdm_sector sector,
                                 rdm_operator_t** out) {
  if (!state || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto s = to_sector(sector);
    const auto xi = rdmkit::xi_table(state->impl, n + 1, s);
    auto* op = new rdm_operator;
    op->matrix = rdmkit::sigma1_asymptotic(state->impl, n, s, xi);
    *out = op;
  });
}

int rdm_operator_dim(const rdm_operator_t* op) {
  return op ? static_cast<int>(op->matrix.rows()) : 0;
}

rdm_status rdm_operator_entry(const rdm_operator_t* op, int row, int col,
                              double* re, double* im) {
  if (!op || !re || !im) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    if (row < 0 || col < 0 || row >= op->matrix.rows() || col >= op->matrix.cols())
      rdmkit::fail(rdmkit::ErrorCode::InvalidArgument, "entry index out of range");
    *re = op->matrix(row, col).real();
    *im = op->matrix(row, col).imag();
  });
}

rdm_status rdm_operator_to_json(const rdm_operator_t* op, char** out) {
  if (!op || !out) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::string text = op->has_meta
                                 ? rdmkit::contraction_to_json_text(op->meta)
                                 : rdmkit::operator_to_json_text(op->matrix);
    *out = dup_string(text);
  });
}

void rdm_operator_free(rdm_operator_t* op) { delete op; }

void rdm_string_free(char* s) { std::free(s); }

rdm_status rdm_verify(const int* dims, int dim_count, int n_max, int k_max,
                      const uint64_t* seeds, int seed_count,
                      const char* report_path, int* fail_count) {
  if (!dims || dim_count < 1 || !seeds || seed_count < 1 || !fail_count)
    return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    rdmkit::VerifyConfig config;
    config.dims.assign(dims, dims + dim_count);
    config.n_max = n_max;
    config.k_max = k_max;
    config.seeds.assign(seeds, seeds + seed_count);
    const auto report = rdmkit::run_verify(config);
    if (report_path)
      rdmkit::atomic_write(report_path, rdmkit::verify_report_json(config, report));
    *fail_count = report.failures;
  });
}

rdm_status rdm_sweep(const char* config_path, const char* csv_path,
                     const char* json_path, int deterministic) {
  if (!config_path || !csv_path) return RDM_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto config = rdmkit::SweepConfig::from_file(config_path);
    const auto records = rdmkit::run_sweep(config, deterministic != 0);
    rdmkit::atomic_write(csv_path, rdmkit::sweep_csv(records, config.k_max));
    if (json_path)
      rdmkit::atomic_write(json_path, rdmkit::sweep_json(records, config.k_max));
  });
}

}  // extern "C"
