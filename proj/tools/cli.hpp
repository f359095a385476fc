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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cvdc::cli {

enum class Command {
  capacity,
  densecode,
  criterion,
  optimize,
  scan,
  monogamy,
  oracle_check,
};

std::string_view to_string(Command c);

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCertification = 2;

struct RunConfig {
  Command command = Command::capacity;

  std::string state_path;
  std::string output_path;
  std::string format;  // empty: json for single results, csv for grids
  std::string preset;
  std::string scheme;
  std::string compare = "coherent";
  std::string pair = "ab";
  std::string accounting = "photon";
  std::string dump_path;

  std::optional<double> n_bar;
  std::optional<double> a1, a2, a3;
  std::optional<double> c2, c3;
  std::optional<double> s;
  int grid = 201;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1'000'000;
  int threads = 0;

  bool bits = false;
  bool allow_unphysical = false;
  bool extended_columns = false;

  /// Options exactly as given on the command line, for metadata.
  std::vector<std::pair<std::string, std::string>> echo;
};

/// Parses argv into a RunConfig (presets expanded, explicit flags taking
/// precedence). Returns an exit code instead when parsing ends the run
/// (--help, --version, bad flags); messages go to `out` / `err`.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv,
                                        std::ostream& out, std::ostream& err);

/// Executes one command. Results go to config.output_path, or `out` when
/// empty; diagnostics and summaries go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Locale-independent number parsing for option values.
double parse_real(std::string_view text, std::string_view option);
std::uint64_t parse_u64(std::string_view text, std::string_view option);

}  // namespace cvdc::cli
