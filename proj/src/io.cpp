#include "sphconf/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace sphconf {

namespace {

Config from_rows(Eigen::MatrixXd pts, std::string label, double unit_tol) {
  for (int i = 0; i < pts.rows(); ++i) {
    double norm = pts.row(i).norm();
    if (std::abs(norm - 1.0) > unit_tol) {
      std::ostringstream msg;
      msg << "row " << i << " has norm " << norm << ", outside the unit tolerance";
      throw ArgumentError(msg.str());
    }
    if (std::abs(norm - 1.0) > 1e-12) pts.row(i) /= norm;
  }
  return Config::from_points(std::move(pts), std::move(label));
}

std::string trimmed(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string config_to_json(const Config& config) {
  nlohmann::json j;
  j["dim"] = config.dim();
  auto points = nlohmann::json::array();
  for (int i = 0; i < config.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < config.dim(); ++c) row.push_back(config.points()(i, c));
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  if (!config.label().empty()) j["label"] = config.label();
  return j.dump(2) + "\n";
}

Config config_from_json(const std::string& text, double unit_tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("cannot parse JSON config: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
    throw ArgumentError("JSON config needs \"dim\" and \"points\" fields");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw ArgumentError("\"dim\" must be a positive integer");
  const int d = j["dim"].get<int>();
  if (!j["points"].is_array() || j["points"].empty())
    throw ArgumentError("\"points\" must be a nonempty array");
  const int n = static_cast<int>(j["points"].size());
  Eigen::MatrixXd pts(n, d);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["points"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ArgumentError("every point needs exactly \"dim\" coordinates");
    for (int c = 0; c < d; ++c) {
      if (!row[c].is_number())
        throw ArgumentError("point coordinates must be numbers");
      pts(i, c) = row[c].get<double>();
    }
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ArgumentError("\"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  return from_rows(std::move(pts), std::move(label), unit_tol);
}

std::string config_to_csv(const Config& config) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (int c = 0; c < config.dim(); ++c) {
    if (c) out << ',';
    out << 'x' << c + 1;
  }
  out << '\n';
  for (int i = 0; i < config.size(); ++i) {
    for (int c = 0; c < config.dim(); ++c) {
      if (c) out << ',';
      out << config.points()(i, c);
    }
    out << '\n';
  }
  return out.str();
}

Config config_from_csv(const std::string& text, double unit_tol) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ArgumentError("CSV config is empty");

  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trimmed(cell));
    return cells;
  };

  std::vector<std::string> header = split(trimmed(line));
  const int d = static_cast<int>(header.size());
  for (int c = 0; c < d; ++c)
    if (header[c] != "x" + std::to_string(c + 1))
      throw ArgumentError("CSV header must be x1,...,xd");

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line);
    if (static_cast<int>(cells.size()) != d)
      throw ArgumentError("CSV row has the wrong number of columns");
    std::vector<double> row(d);
    for (int c = 0; c < d; ++c) {
      try {
        size_t pos = 0;
        row[c] = std::stod(cells[c], &pos);
        if (pos != cells[c].size()) throw std::invalid_argument(cells[c]);
      } catch (const std::exception&) {
        throw ArgumentError("cannot parse CSV cell '" + cells[c] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ArgumentError("CSV config has no point rows");

  Eigen::MatrixXd pts(static_cast<int>(rows.size()), d);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < d; ++c) pts(static_cast<int>(i), c) = rows[i][c];
  return from_rows(std::move(pts), "", unit_tol);
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void save_config(const Config& config, const std::string& path) {
  std::string body;
  if (ends_with(path, ".json"))
    body = config_to_json(config);
  else if (ends_with(path, ".csv"))
    body = config_to_csv(config);
  else
    throw ArgumentError("config files use a .json or .csv extension");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open '" + path + "' for writing");
  out << body;
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

Config load_config(const std::string& path, double unit_tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (ends_with(path, ".json")) return config_from_json(text, unit_tol);
  if (ends_with(path, ".csv")) return config_from_csv(text, unit_tol);
  std::string lead = trimmed(text);
  if (!lead.empty() && lead.front() == '{') return config_from_json(text, unit_tol);
  return config_from_csv(text, unit_tol);
}

}  // namespace sphconf
