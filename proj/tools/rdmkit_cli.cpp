#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdmkit.h"

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(rdm_status status) {
  if (status == RDM_OK) return 0;
  if (status == RDM_ERR_IO) return kExitIo;
  return kExitComputation;
}

int report_failure(rdm_status status) {
  std::fprintf(stderr, "error: %s: %s\n", rdm_status_name(status), rdm_last_error());
  return exit_code_for(status);
}

rdm_sector parse_sector(const std::string& name) {
  return name == "bose" ? RDM_SECTOR_BOSE : RDM_SECTOR_FERMI;
}

rdm_path parse_path(const std::string& name) {
  if (name == "recurrence") return RDM_PATH_RECURRENCE;
  if (name == "explicit") return RDM_PATH_EXPLICIT;
  return RDM_PATH_BRUTE;
}

int print_operator_json(rdm_operator_t* op) {
  char* text = nullptr;
  const rdm_status status = rdm_operator_to_json(op, &text);
  if (status != RDM_OK) return report_failure(status);
  std::fputs(text, stdout);
  rdm_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced density operator toolkit"};
  app.require_subcommand(1);

  std::string state_file, sector_name = "fermi", path_name = "brute";
  std::string out_file, report_file, config_file, csv_file, json_file;
  int n = 0, k = 1, n_max = 4, k_max = 3;
  bool normalized = false, deterministic = false;
  std::vector<int> dims{2, 3};
  std::vector<std::uint64_t> seeds{1};

  auto* contract = app.add_subcommand("contract", "Contract a graded product state");
  contract->add_option("--state", state_file, "State JSON file")->required();
  contract->add_option("--n", n, "Particle number")->required()->check(CLI::PositiveNumber);
  contract->add_option("--k", k, "Retained factors")->required()->check(CLI::PositiveNumber);
  contract->add_option("--sector", sector_name, "fermi or bose")
      ->check(CLI::IsMember({"fermi", "bose"}));
  contract->add_option("--path", path_name, "brute, recurrence or explicit")
      ->check(CLI::IsMember({"brute", "recurrence", "explicit"}));
  contract->add_flag("--normalized", normalized, "Divide by the trace xi_n");
  contract->add_option("--out", out_file, "Output JSON file (default: stdout)");

  auto* xi = app.add_subcommand("xi", "Tabulate normalization coefficients");
  xi->add_option("--state", state_file, "State JSON file")->required();
  xi->add_option("--N", n_max, "Highest order")->required()->check(CLI::PositiveNumber);
  xi->add_option("--sector", sector_name, "fermi or bose")
      ->check(CLI::IsMember({"fermi", "bose"}));
  xi->add_option("--out", out_file, "Output JSON file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Cross-check the three contraction paths");
  verify->add_option("--dims", dims, "Single-particle dimensions")->delimiter(',');
  verify->add_option("--n-max", n_max, "Largest particle number")
      ->check(CLI::Range(2, 1000));
  verify->add_option("--k-max", k_max, "Largest retained arity")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seeds", seeds, "State seeds")->delimiter(',');
  verify->add_option("--report", report_file, "JSON report file");

  auto* sweep = app.add_subcommand("sweep", "Finite-size scaling sweep");
  sweep->add_option("--config", config_file, "Sweep config JSON")->required();
  sweep->add_option("--out-csv", csv_file, "CSV output file")->required();
  sweep->add_option("--out-json", json_file, "JSON mirror of the records");
  sweep->add_flag("--deterministic", deterministic,
                  "Zero the runtime column for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (contract->parsed()) {
    rdm_state_t* state = nullptr;
    rdm_status status = rdm_state_load(state_file.c_str(), &state);
    if (status != RDM_OK) return report_failure(status);
    int rc = 0;
    if (out_file.empty()) {
      rdm_operator_t* op = nullptr;
      status = rdm_contract(state, n, k, parse_sector(sector_name),
                            parse_path(path_name), normalized ? 1 : 0, &op);
      if (status != RDM_OK) {
        rc = report_failure(status);
      } else {
        rc = print_operator_json(op);
        rdm_operator_free(op);
      }
    } else {
      status = rdm_contract_save(state, n, k, parse_sector(sector_name),
                                 parse_path(path_name), normalized ? 1 : 0,
                                 out_file.c_str());
      if (status != RDM_OK) rc = report_failure(status);
    }
    rdm_state_free(state);
    return rc;
  }

  if (xi->parsed()) {
    rdm_state_t* state = nullptr;
    rdm_status status = rdm_state_load(state_file.c_str(), &state);
    if (status != RDM_OK) return report_failure(status);
    rdm_xi_t* table = nullptr;
    status = rdm_xi_compute(state, n_max, parse_sector(sector_name), &table);
    int rc = 0;
    if (status != RDM_OK) {
      rc = report_failure(status);
    } else if (out_file.empty()) {
      const std::string tmp = std::string(".rdmkit_xi_stdout.json");
      status = rdm_xi_save(table, tmp.c_str());
      if (status != RDM_OK) {
        rc = report_failure(status);
      } else {
        if (FILE* f = std::fopen(tmp.c_str(), "rb")) {
          char buf[4096];
          std::size_t got;
          while ((got = std::fread(buf, 1, sizeof(buf), f)) > 0)
            std::fwrite(buf, 1, got, stdout);
          std::fclose(f);
          std::remove(tmp.c_str());
        }
      }
    } else {
      status = rdm_xi_save(table, out_file.c_str());
      if (status != RDM_OK) rc = report_failure(status);
    }
    rdm_xi_free(table);
    rdm_state_free(state);
    return rc;
  }

  if (verify->parsed()) {
    int failures = 0;
    const rdm_status status =
        rdm_verify(dims.data(), static_cast<int>(dims.size()), n_max, k_max,
                   seeds.data(), static_cast<int>(seeds.size()),
                   report_file.empty() ? nullptr : report_file.c_str(), &failures);
    if (status != RDM_OK) return report_failure(status);
    std::printf("verify: %d failing cell(s)\n", failures);
    return failures == 0 ? 0 : kExitComputation;
  }

  if (sweep->parsed()) {
    const rdm_status status =
        rdm_sweep(config_file.c_str(), csv_file.c_str(),
                  json_file.empty() ? nullptr : json_file.c_str(),
                  deterministic ? 1 : 0);
    if (status != RDM_OK) return report_failure(status);
    return 0;
  }

  return kExitUsage;
}
