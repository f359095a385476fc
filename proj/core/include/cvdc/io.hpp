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

// State files, report serialization and scan record output.
//
// State file schema:
//   {"convention": "hbar=1,vac=1/2", "n_modes": N,
//    "mean": [2N reals], "cov": [[2N reals] x 2N]}
//
// Scan CSV: "# key=value" comment lines, then the header row, then one row
// per cell. Floats use 12 significant digits, booleans 0/1.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvdc/densecode.hpp"
#include "cvdc/gaussian.hpp"
#include "cvdc/optimize.hpp"

namespace cvdc {

/// Malformed input file; the message names the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a state document. Rejects a convention other than kConvention,
/// asymmetry beyond kSymmetryTolerance and, unless allow_unphysical is set,
/// states violating the uncertainty relation.
GaussianState parse_state(std::string_view text, bool allow_unphysical = false,
                          std::string_view source = "<input>");
GaussianState load_state(const std::filesystem::path& path,
                         bool allow_unphysical = false);

std::string state_to_json(const GaussianState& state);
void save_state(const GaussianState& state, const std::filesystem::path& path);

/// Flat JSON object, fields in CapacityReport declaration order.
std::string report_to_json(const CapacityReport& report);

/// 12 significant digits, independent of the global locale. NaN prints as
/// "nan".
std::string format_double(double value);

enum class RecordFormat { csv, json };
enum class RecordSchema { region, monogamy };

RecordFormat record_format_from_string(std::string_view name);

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Column names for `schema`, in output order.
std::vector<std::string> record_columns(RecordSchema schema);

/// CSV: metadata comments, header, rows. JSON: array of objects with sorted
/// keys (metadata is not embedded); NaN becomes null.
void emit_records(const std::vector<RegionRecord>& records, std::ostream& out,
                  RecordFormat format, RecordSchema schema,
                  const Metadata& metadata = {});
void emit_records(const std::vector<RegionRecord>& records,
                  const std::filesystem::path& path, RecordFormat format,
                  RecordSchema schema, const Metadata& metadata = {});

}  // namespace cvdc
