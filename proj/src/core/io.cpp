#include "core/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rdmkit {

namespace {

using nlohmann::json;

json matrix_to_json(const Operator& op) {
  const int d = static_cast<int>(op.rows());
  json re = json::array(), im = json::array();
  for (int r = 0; r < d; ++r) {
    json rrow = json::array(), irow = json::array();
    for (int c = 0; c < static_cast<int>(op.cols()); ++c) {
      rrow.push_back(op(r, c).real());
      irow.push_back(op(r, c).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  json j;
  j["dim"] = d;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

}  // namespace

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot open '" + tmp + "' for writing");
    out << content;
    if (!out.flush()) fail(ErrorCode::Io, "write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorCode::Io, "cannot rename '" + tmp + "' to '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SingleParticleState state_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Io, std::string("bad state JSON: ") + e.what());
  }
  try {
    if (j.contains("eigenvalues")) {
      const auto vals = j.at("eigenvalues").get<std::vector<double>>();
      if (vals.empty()) fail(ErrorCode::InvalidArgument, "empty eigenvalue list");
      RealVector lam(static_cast<int>(vals.size()));
      for (std::size_t i = 0; i < vals.size(); ++i) lam[static_cast<int>(i)] = vals[i];
      return SingleParticleState::from_eigenvalues(lam);
    }
    const int d = j.at("dim").get<int>();
    if (d < 1) fail(ErrorCode::InvalidArgument, "dim must be positive");
    const auto re = j.at("re").get<std::vector<std::vector<double>>>();
    std::vector<std::vector<double>> im;
    if (j.contains("im")) im = j.at("im").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(re.size()) != d || (!im.empty() && static_cast<int>(im.size()) != d))
      fail(ErrorCode::InvalidArgument, "matrix rows do not match dim");
    Operator m(d, d);
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(re[r].size()) != d ||
          (!im.empty() && static_cast<int>(im[r].size()) != d))
        fail(ErrorCode::InvalidArgument, "matrix columns do not match dim");
      for (int c = 0; c < d; ++c)
        m(r, c) = Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
    }
    return SingleParticleState::from_matrix(m);
  } catch (const json::exception& e) {
    fail(ErrorCode::Io, std::string("bad state JSON: ") + e.what());
  }
}

SingleParticleState state_from_file(const std::string& path) {
  return state_from_json_text(read_text_file(path));
}

std::string operator_to_json_text(const Operator& op) {
  return matrix_to_json(op).dump(2) + "\n";
}

std::string contraction_to_json_text(const ContractionResult& result) {
  json j = matrix_to_json(result.matrix);
  j["n"] = result.n;
  j["k"] = result.k;
  j["sector"] = sector_name(result.sector);
  j["path"] = path_name(result.path);
  j["normalized"] = result.normalized;
  j["xi_n"] = result.xi_n;
  return j.dump(2) + "\n";
}

std::string xi_to_json_text(const XiTable& xi) {
  json j;
  j["sector"] = sector_name(xi.sector);
  j["values"] = xi.values;
  json ratios = json::array();
  for (const auto& r : xi.ratios) {
    if (r)
      ratios.push_back(*r);
    else
      ratios.push_back(nullptr);
  }
  j["ratios"] = std::move(ratios);
  return j.dump(2) + "\n";
}

}  // namespace rdmkit
