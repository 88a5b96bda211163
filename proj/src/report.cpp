#include "betamat/report.hpp"

#include <sstream>

namespace betamat {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  return Rational::parse(j.get<std::string>());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& e : m.row(i)) {
      row.push_back(e.str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    }
    for (const auto& cell : row) {
      entries.push_back(rational_from_json(cell));
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

json inertia_to_json(const InertiaTriple& inertia) {
  return json{{"positive", inertia.positive}, {"zero", inertia.zero}, {"negative", inertia.negative}};
}

json verification_to_json(const VerificationReport& report) {
  json out{{"identity", report.identity_name}, {"n", report.n}, {"holds", report.holds}};
  if (report.witness) {
    const auto& w = *report.witness;
    out["witness"] = json{{"row", w.row},         {"col", w.col},           {"lhs", w.lhs.str()},
                          {"rhs", w.rhs.str()},   {"relation", w.relation}, {"detail", w.detail}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json minor_to_json(const MinorIndex& idx) {
  json rows = json::array();
  json cols = json::array();
  for (auto r : idx.rows) {
    rows.push_back(r + 1);
  }
  for (auto c : idx.cols) {
    cols.push_back(c + 1);
  }
  return json{{"rows", rows}, {"cols", cols}};
}

json to_json(const Report& report) {
  json out;
  out["command"] = report.command;
  out["parameters"] = report.parameters;
  out["results"] = report.results;
  out["seed"] = report.seed ? json(*report.seed) : json(nullptr);
  out["version"] = report.version;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.results = j.at("results");
  if (!j.at("seed").is_null()) {
    r.seed = j.at("seed").get<std::uint64_t>();
  }
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? "," : "") << m(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

Matrix matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(cells, cell, ',')) {
      entries.push_back(Rational::parse(cell));
      ++count;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw std::invalid_argument("CSV matrix rows must have equal length");
    }
    ++rows;
  }
  if (rows == 0) {
    throw std::invalid_argument("empty CSV matrix");
  }
  return Matrix(rows, cols, std::move(entries));
}

}  // namespace betamat
