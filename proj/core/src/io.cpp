// Copyright 2026 The cvdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvdc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "cvdc/errors.hpp"

namespace cvdc {

namespace {

using nlohmann::json;

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number");
  return v.get<double>();
}

using Cell = std::variant<double, bool>;
using Column = std::pair<const char*, std::function<Cell(const RegionRecord&)>>;

const std::vector<Column>& all_columns() {
  static const std::vector<Column> columns = {
      {"c2", [](const RegionRecord& r) { return Cell{r.c2}; }},
      {"c3", [](const RegionRecord& r) { return Cell{r.c3}; }},
      {"a2", [](const RegionRecord& r) { return Cell{r.a2}; }},
      {"a3", [](const RegionRecord& r) { return Cell{r.a3}; }},
      {"h_ab", [](const RegionRecord& r) { return Cell{r.h_ab}; }},
      {"h_ac", [](const RegionRecord& r) { return Cell{r.h_ac}; }},
      {"crit_ab", [](const RegionRecord& r) { return Cell{r.crit_ab}; }},
      {"crit_ac", [](const RegionRecord& r) { return Cell{r.crit_ac}; }},
      {"beats_coh_ab", [](const RegionRecord& r) { return Cell{r.beats_coh_ab}; }},
      {"beats_coh_ac", [](const RegionRecord& r) { return Cell{r.beats_coh_ac}; }},
      {"beats_sq_ab", [](const RegionRecord& r) { return Cell{r.beats_sq_ab}; }},
      {"beats_sq_ac", [](const RegionRecord& r) { return Cell{r.beats_sq_ac}; }},
      {"t_opt_ab", [](const RegionRecord& r) { return Cell{r.t_opt_ab}; }},
      {"t_opt_ac", [](const RegionRecord& r) { return Cell{r.t_opt_ac}; }},
      // monogamy extras
      {"crit_ab_opt", [](const RegionRecord& r) { return Cell{r.crit_ab_opt}; }},
      {"crit_ac_opt", [](const RegionRecord& r) { return Cell{r.crit_ac_opt}; }},
      {"overlap_flag", [](const RegionRecord& r) { return Cell{r.overlap_flag}; }},
  };
  return columns;
}

constexpr std::size_t kRegionColumns = 14;

std::size_t column_count(RecordSchema schema) {
  return schema == RecordSchema::region ? kRegionColumns : all_columns().size();
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

GaussianState parse_state(std::string_view text, bool allow_unphysical,
                          std::string_view source) {
  const std::string src(source);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(src + ": " + line_context(text, e.byte > 0 ? e.byte - 1 : 0) +
                     ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw ParseError(src + ": top level must be an object");

  for (const char* key : {"convention", "n_modes", "mean", "cov"}) {
    if (!doc.contains(key)) {
      throw ParseError(src + ": missing field '" + key + "'");
    }
  }
  if (!doc["convention"].is_string()) {
    throw ParseError(src + ": field 'convention' must be a string");
  }
  const auto convention = doc["convention"].get<std::string>();
  if (convention != kConvention) {
    throw DomainError(src + ": convention '" + convention + "' is not supported; "
                      "cvdc uses '" + std::string(kConvention) +
                      "' (vacuum variance 1/2); rescale the covariance first");
  }
  if (!doc["n_modes"].is_number_integer() || doc["n_modes"].get<long long>() < 1) {
    throw ParseError(src + ": field 'n_modes' must be a positive integer");
  }
  const auto n = static_cast<Eigen::Index>(doc["n_modes"].get<long long>());
  const json& mean_j = doc["mean"];
  const json& cov_j = doc["cov"];
  if (!mean_j.is_array() || static_cast<Eigen::Index>(mean_j.size()) != 2 * n) {
    throw ParseError(src + ": field 'mean' must be an array of " +
                     std::to_string(2 * n) + " numbers");
  }
  if (!cov_j.is_array() || static_cast<Eigen::Index>(cov_j.size()) != 2 * n) {
    throw ParseError(src + ": field 'cov' must have " + std::to_string(2 * n) + " rows");
  }
  Vector mean(2 * n);
  Matrix cov(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    mean(i) = number_at(mean_j[static_cast<std::size_t>(i)],
                        src + ": field 'mean'[" + std::to_string(i) + "]");
    const json& row = cov_j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != 2 * n) {
      throw ParseError(src + ": field 'cov' row " + std::to_string(i) + " must have " +
                       std::to_string(2 * n) + " entries");
    }
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
      cov(i, j) = number_at(row[static_cast<std::size_t>(j)],
                            src + ": field 'cov'[" + std::to_string(i) + "][" +
                                std::to_string(j) + "]");
    }
  }

  GaussianState state(std::move(mean), std::move(cov));
  const ValidityReport v = validate_cm(state);
  if (!v.is_symmetric) {
    throw DomainError(src + ": covariance is not symmetric within " +
                      format_double(kSymmetryTolerance));
  }
  if (!v.is_physical && !allow_unphysical) {
    throw DomainError(src + ": state violates the uncertainty relation (min eigenvalue " +
                      format_double(v.min_uncertainty_eigenvalue) +
                      "); pass --allow-unphysical to load it anyway");
  }
  return state;
}

GaussianState load_state(const std::filesystem::path& path, bool allow_unphysical) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open state file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return parse_state(text, allow_unphysical, path.string());
}

std::string state_to_json(const GaussianState& state) {
  nlohmann::ordered_json doc;
  doc["convention"] = std::string(kConvention);
  doc["n_modes"] = state.n_modes();
  doc["mean"] = std::vector<double>(state.mean().data(),
                                    state.mean().data() + state.mean().size());
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < state.cov().rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(state.cov().cols()));
    for (Eigen::Index j = 0; j < state.cov().cols(); ++j) {
      row[static_cast<std::size_t>(j)] = state.cov()(i, j);
    }
    rows.push_back(row);
  }
  doc["cov"] = rows;
  return doc.dump(2) + "\n";
}

void save_state(const GaussianState& state, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << state_to_json(state);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string report_to_json(const CapacityReport& r) {
  nlohmann::ordered_json doc;
  doc["h_max"] = r.h_max;
  doc["c_coh"] = r.c_coh;
  doc["c_sq"] = r.c_sq;
  doc["c_fock"] = r.c_fock;
  doc["f_sq"] = r.f_sq;
  doc["beats_coh"] = r.beats_coh;
  doc["beats_sq"] = r.beats_sq;
  doc["beats_fock"] = r.beats_fock;
  doc["u_eff"] = r.u_eff;
  doc["criterion_sq"] = r.criterion_sq;
  doc["criterion_fock"] = r.criterion_fock;
  return doc.dump();
}

RecordFormat record_format_from_string(std::string_view name) {
  if (name == "csv") return RecordFormat::csv;
  if (name == "json") return RecordFormat::json;
  throw StructuralError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<std::string> record_columns(RecordSchema schema) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < column_count(schema); ++i) {
    names.emplace_back(all_columns()[i].first);
  }
  return names;
}

void emit_records(const std::vector<RegionRecord>& records, std::ostream& out,
                  RecordFormat format, RecordSchema schema, const Metadata& metadata) {
  const std::size_t ncol = column_count(schema);
  const auto& cols = all_columns();
  if (format == RecordFormat::json) {
    json arr = json::array();
    for (const RegionRecord& r : records) {
      json obj = json::object();
      for (std::size_t c = 0; c < ncol; ++c) {
        const Cell v = cols[c].second(r);
        if (const double* d = std::get_if<double>(&v)) {
          obj[cols[c].first] = std::isfinite(*d) ? json(*d) : json(nullptr);
        } else {
          obj[cols[c].first] = std::get<bool>(v);
        }
      }
      arr.push_back(std::move(obj));
    }
    out << arr.dump(1) << '\n';
    return;
  }

  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  for (std::size_t c = 0; c < ncol; ++c) out << (c ? "," : "") << cols[c].first;
  out << '\n';
  for (const RegionRecord& r : records) {
    for (std::size_t c = 0; c < ncol; ++c) {
      if (c) out << ',';
      const Cell v = cols[c].second(r);
      if (const double* d = std::get_if<double>(&v)) {
        out << format_double(*d);
      } else {
        out << (std::get<bool>(v) ? '1' : '0');
      }
    }
    out << '\n';
  }
}

void emit_records(const std::vector<RegionRecord>& records,
                  const std::filesystem::path& path, RecordFormat format,
                  RecordSchema schema, const Metadata& metadata) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  emit_records(records, out, format, schema, metadata);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace cvdc
