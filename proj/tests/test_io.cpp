#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "core/io.hpp"

using namespace rdmkit;

TEST_CASE("state parsing accepts both matrix and eigenvalue forms") {
  const auto diag = state_from_json_text(R"({"eigenvalues": [0.5, 0.5]})");
  CHECK(diag.dim() == 2);
  CHECK(std::abs(diag.base(0, 0) - Complex(0.5)) < 1e-15);

  const auto full = state_from_json_text(
      R"({"dim": 2, "re": [[0.6, 0.1], [0.1, 0.4]], "im": [[0.0, 0.2], [-0.2, 0.0]]})");
  CHECK(full.dim() == 2);
  CHECK(std::abs(full.base(0, 1) - Complex(0.1, 0.2)) < 1e-15);
  CHECK(full.eigenvalues.minCoeff() >= 0.0);

  const auto real_only =
      state_from_json_text(R"({"dim": 2, "re": [[0.7, 0.0], [0.0, 0.3]]})");
  CHECK(std::abs(real_only.base(1, 1) - Complex(0.3)) < 1e-15);
}

TEST_CASE("state parsing reports malformed input") {
  CHECK_THROWS_AS((void)state_from_json_text("not json"), Error);
  CHECK_THROWS_AS((void)state_from_json_text(R"({"dim": 2, "re": [[1.0]]})"), Error);
  CHECK_THROWS_AS((void)state_from_file("/nonexistent/state.json"), Error);
  try {
    (void)state_from_file("/nonexistent/state.json");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("operator serialization round trips through the parser") {
  const auto rho = SingleParticleState::random(3, 91);
  const std::string text = operator_to_json_text(rho.base);
  const auto back = state_from_json_text(text);
  CHECK((back.base - rho.base).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("contraction payload carries the metadata") {
  const auto rho = SingleParticleState::random(2, 93);
  const auto result = sigma_k(rho, 3, 2, Sector::Bose, Path::Explicit);
  const std::string text = contraction_to_json_text(result);
  CHECK(text.find("\"n\": 3") != std::string::npos);
  CHECK(text.find("\"sector\": \"bose\"") != std::string::npos);
  CHECK(text.find("\"path\": \"explicit\"") != std::string::npos);
  CHECK(text.find("\"xi_n\"") != std::string::npos);
}

TEST_CASE("xi serialization marks undefined ratios") {
  const auto rho = SingleParticleState::random(2, 95);
  const XiTable xi = xi_table(rho, 4, Sector::Fermi);
  const std::string text = xi_to_json_text(xi);
  CHECK(text.find("null") != std::string::npos);
  CHECK(text.find("\"sector\": \"fermi\"") != std::string::npos);
}

TEST_CASE("atomic write leaves no temp file behind") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "rdmkit_io_test.json").string();
  atomic_write(path, "{}\n");
  CHECK(read_text_file(path) == "{}\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(atomic_write("/nonexistent/dir/file.json", "x"), Error);
}
