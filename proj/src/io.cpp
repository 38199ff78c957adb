#include "nclp/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace nclp::io {

namespace {

Complex entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw std::invalid_argument("matrix entry must be a number or a [re, im] pair, got " + e.dump());
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw std::invalid_argument("matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows must all have length " + std::to_string(cols));
    }
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = entry_from_json(row[static_cast<std::size_t>(k)]);
  }
  require_valid(m);
  return m;
}

json superop_to_json(const SuperOperator& t, SuperOperatorKind kind) {
  const bool choi = kind == SuperOperatorKind::Choi;
  return json{{"dim", t.dim()}, {"kind", choi ? "choi" : "action"}, {"data", matrix_to_json(choi ? t.choi() : t.action())}};
}

SuperOperator superop_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("superoperator must be a JSON object");
  for (const char* key : {"dim", "kind", "data"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("superoperator is missing \"") + key + "\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw std::invalid_argument("superoperator \"dim\" must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(j["dim"].get<long long>());
  const CMatrix data = matrix_from_json(j["data"]);
  if (data.rows() != n * n || data.cols() != n * n) {
    throw std::invalid_argument("superoperator data must be " + std::to_string(n * n) + "x" + std::to_string(n * n));
  }
  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "choi") return SuperOperator::from_choi(data);
  if (kind == "action") return SuperOperator(data);
  throw std::invalid_argument("superoperator \"kind\" must be \"choi\" or \"action\"");
}

json state_to_json(const State& s) { return json{{"gamma", matrix_to_json(s.matrix())}}; }

State state_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("gamma")) throw std::invalid_argument("state object is missing \"gamma\"");
    return State(matrix_from_json(j["gamma"]));
  }
  return State(matrix_from_json(j));
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
  }
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), end);
}

}  // namespace nclp::io
