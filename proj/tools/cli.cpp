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

#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvdc/densecode.hpp"
#include "cvdc/errors.hpp"
#include "cvdc/gaussian.hpp"
#include "cvdc/io.hpp"
#include "cvdc/monogamy.hpp"
#include "cvdc/optimize.hpp"
#include "cvdc/oracle.hpp"
#include "cvdc/standard_forms.hpp"

namespace cvdc::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kMaxGrid = 5001;
constexpr double kDefaultScanBudget = 10.0;

// Raw option text; numeric values are parsed after CLI11 so that parsing
// never depends on the C locale.
struct RawOptions {
  std::string state, output, format, preset, scheme, compare, pair, accounting, dump;
  std::string nbar, a1, a2, a3, c2, c3, s, grid, seed, samples, threads;
  bool bits = false;
  bool allow_unphysical = false;
  bool extended = false;
};

void add_options(CLI::App& app, RawOptions& o) {
  app.add_option("--state", o.state, "State file (JSON, convention hbar=1,vac=1/2)");
  app.add_option("--output,-o", o.output, "Write results here instead of stdout");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--preset", o.preset, "fig1 | fig2 | fig3a | fig3b | fig4");
  app.add_option("--scheme", o.scheme, "coherent | squeezed | fock | dense");
  app.add_option("--compare", o.compare, "Scan benchmark: coherent | squeezed");
  app.add_option("--pair", o.pair, "Pair of a three-mode state: ab | ac");
  app.add_option("--accounting", o.accounting,
                 "Sender energy in the joint squeeze search: photon | quadrature");
  app.add_option("--dump", o.dump, "oracle-check: write Monte Carlo samples as CSV");
  app.add_option("--nbar", o.nbar, "Mean photon budget");
  app.add_option("--a1", o.a1, "Sender local variance");
  app.add_option("--a2", o.a2, "Receiver B local variance");
  app.add_option("--a3", o.a3, "Receiver C local variance");
  app.add_option("--c2", o.c2, "Rescaled coefficient (a2 - 1/2)/(a1 - 1/2)");
  app.add_option("--c3", o.c3, "Rescaled coefficient (a3 - 1/2)/(a1 - 1/2)");
  app.add_option("--s", o.s, "Two-mode squeezing of a TMSV state");
  app.add_option("--grid", o.grid, "Scan points per axis (default 201)");
  app.add_option("--seed", o.seed, "Monte Carlo seed");
  app.add_option("--samples", o.samples, "Monte Carlo samples (default 1e6)");
  app.add_option("--threads", o.threads, "Worker threads (0 = auto; CVDC_THREADS caps)");
  app.add_flag("--bits", o.bits, "Print capacities in bits instead of nats");
  app.add_flag("--allow-unphysical", o.allow_unphysical,
               "Load states violating the uncertainty relation");
  app.add_flag("--extended", o.extended, "scan: add the optimized-criterion columns");
}

struct Preset {
  Command command;
  std::map<std::string, std::string> values;
  bool extended = false;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"fig1", {Command::optimize,
                {{"a1", "1.2"}, {"a2", "1.4"}, {"a3", "0.9"}, {"nbar", "10"},
                 {"pair", "ab"}, {"accounting", "quadrature"}}}},
      {"fig2", {Command::scan, {{"a1", "1.5"}, {"nbar", "10"}, {"compare", "squeezed"}}, true}},
      {"fig3a", {Command::scan, {{"a1", "1.5"}, {"nbar", "10"}, {"compare", "coherent"}}}},
      {"fig3b", {Command::scan, {{"a1", "1.5"}, {"nbar", "10"}, {"compare", "squeezed"}}}},
      {"fig4", {Command::monogamy, {{"a1", "1.5"}, {"nbar", "10"}}}},
  };
  return table;
}

double checked(std::optional<double> v, std::string_view name, Command cmd) {
  if (!v) {
    throw std::invalid_argument(std::string(to_string(cmd)) + " needs --" +
                                std::string(name));
  }
  return *v;
}

double capacity_scale(const RunConfig& c) { return c.bits ? 1.0 / std::numbers::ln2 : 1.0; }

// Two-mode sender/receiver pair and, when available, the full state.
struct Source {
  GaussianState full;
  GaussianState pair;
  std::string description;
};

bool has_three_mode_params(const RunConfig& c) {
  return c.a1 && ((c.a2 && c.a3) || (c.c2 && c.c3));
}

GaussianState three_mode_from_params(const RunConfig& c) {
  const double a1 = *c.a1;
  const double a2 = c.a2 ? *c.a2 : variance_from_coefficient(a1, *c.c2);
  const double a3 = c.a3 ? *c.a3 : variance_from_coefficient(a1, *c.c3);
  return pure_three_mode(a1, a2, a3);
}

int receiver_index(const RunConfig& c) {
  if (c.pair == "ab") return 1;
  if (c.pair == "ac") return 2;
  throw std::invalid_argument("--pair must be ab or ac, got '" + c.pair + "'");
}

std::optional<Source> resolve_source(const RunConfig& c) {
  std::optional<GaussianState> full;
  std::string what;
  if (!c.state_path.empty()) {
    full = load_state(c.state_path, c.allow_unphysical);
    what = "file " + c.state_path;
  } else if (c.s) {
    full = tmsv(*c.s);
    what = "tmsv s=" + format_double(*c.s);
  } else if (has_three_mode_params(c)) {
    full = three_mode_from_params(c);
    what = "pure three-mode";
  } else {
    return std::nullopt;
  }
  Source src{*full, *full, what};
  if (full->n_modes() == 2) return src;
  if (full->n_modes() < 2) throw DomainError("state needs at least two modes");
  src.pair = reduce(*full, {0, receiver_index(c)});
  src.description += " pair " + c.pair;
  return src;
}

Source require_source(const RunConfig& c) {
  auto src = resolve_source(c);
  if (!src) {
    throw std::invalid_argument(std::string(to_string(c.command)) +
                                " needs a state: --state FILE, --s, or --a1 with "
                                "--a2/--a3 or --c2/--c3");
  }
  return *src;
}

ojson stats_json(const ChannelStats& st) {
  ojson j;
  j["v_xm"] = st.v_xm;
  j["v_pp"] = st.v_pp;
  j["v_xp"] = st.v_xp;
  j["n0"] = st.n0;
  j["determinant"] = st.determinant();
  return j;
}

ojson report_json(const CapacityReport& r, double scale) {
  ojson j;
  j["h_max"] = r.h_max * scale;
  j["c_coh"] = r.c_coh * scale;
  j["c_sq"] = r.c_sq * scale;
  j["c_fock"] = r.c_fock * scale;
  j["f_sq"] = r.f_sq;
  j["beats_coh"] = r.beats_coh;
  j["beats_sq"] = r.beats_sq;
  j["beats_fock"] = r.beats_fock;
  j["u_eff"] = r.u_eff;
  j["criterion_sq"] = r.criterion_sq;
  j["criterion_fock"] = r.criterion_fock;
  return j;
}

ojson meta_json(const RunConfig& c) {
  ojson meta;
  meta["tool"] = std::string("cvdc ") + CVDC_VERSION;
  meta["command"] = std::string(to_string(c.command));
  meta["units"] = c.bits ? "bits" : "nats";
  ojson echo = ojson::object();
  for (const auto& [k, v] : c.echo) echo[k] = v;
  meta["config"] = echo;
  return meta;
}

void flatten(const ojson& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  out << prefix << ',';
  if (j.is_number_float()) {
    out << format_double(j.get<double>());
  } else if (j.is_string()) {
    out << j.get<std::string>();
  } else if (j.is_boolean()) {
    out << (j.get<bool>() ? 1 : 0);
  } else {
    out << j.dump();
  }
  out << '\n';
}

// Single-result commands: JSON object by default, key,value lines for csv.
void write_result(const RunConfig& c, ojson result, std::ostream& out) {
  ojson doc;
  doc["meta"] = meta_json(c);
  for (auto it = result.begin(); it != result.end(); ++it) doc[it.key()] = it.value();

  std::ostringstream text;
  if (c.format == "csv") {
    text << "key,value\n";
    flatten(doc, "", text);
  } else if (c.format.empty() || c.format == "json") {
    text << doc.dump(2) << '\n';
  } else {
    throw std::invalid_argument("--format must be csv or json");
  }
  if (c.output_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(c.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + c.output_path);
  file << text.str();
}

Metadata grid_metadata(const RunConfig& c, double a1, double n_bar) {
  Metadata m;
  m.emplace_back("tool", std::string("cvdc ") + CVDC_VERSION);
  m.emplace_back("command", std::string(to_string(c.command)));
  m.emplace_back("a1", format_double(a1));
  m.emplace_back("n_bar", format_double(n_bar));
  m.emplace_back("grid", std::to_string(c.grid));
  m.emplace_back("c_max", "2");
  m.emplace_back("units", c.bits ? "bits" : "nats");
  for (const auto& [k, v] : c.echo) m.emplace_back("arg." + k, v);
  return m;
}

void write_records(const RunConfig& c, std::vector<RegionRecord> records,
                   RecordSchema schema, const Metadata& meta, std::ostream& out) {
  const double scale = capacity_scale(c);
  if (scale != 1.0) {
    for (RegionRecord& r : records) {
      r.h_ab *= scale;
      r.h_ac *= scale;
    }
  }
  const RecordFormat fmt = c.format.empty() ? RecordFormat::csv
                                            : record_format_from_string(c.format);
  if (c.output_path.empty()) {
    emit_records(records, out, fmt, schema, meta);
  } else {
    emit_records(records, std::filesystem::path(c.output_path), fmt, schema, meta);
  }
}

ScanConfig scan_config(const RunConfig& c) {
  ScanConfig sc;
  sc.a1 = checked(c.a1, "a1", c.command);
  sc.n_bar = c.n_bar.value_or(kDefaultScanBudget);
  sc.grid = c.grid;
  sc.threads = c.threads;
  return sc;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_capacity(const RunConfig& c, std::ostream& out) {
  const double n_bar = checked(c.n_bar, "nbar", c.command);
  const std::string scheme = c.scheme.empty() ? "dense" : c.scheme;
  double value = 0.0;
  if (scheme == "dense" || scheme == "tmsv") {
    value = tmsv_capacity(n_bar);
  } else {
    value = capacity_single_mode(scheme_from_string(scheme), n_bar);
  }
  ojson r;
  r["scheme"] = scheme;
  r["n_bar"] = n_bar;
  r["capacity"] = value * capacity_scale(c);
  write_result(c, r, out);
  return kExitOk;
}

int cmd_densecode(const RunConfig& c, std::ostream& out) {
  const double n_bar = checked(c.n_bar, "nbar", c.command);
  ojson r;
  r["n_bar"] = n_bar;
  const auto src = resolve_source(c);
  if (!src) {
    // Optimal TMSV resource at this budget.
    r["source"] = "optimal tmsv";
    r["capacity"] = tmsv_capacity(n_bar) * capacity_scale(c);
    r["c_sq"] = capacity_single_mode(Scheme::squeezed, n_bar) * capacity_scale(c);
    r["c_fock"] = capacity_single_mode(Scheme::fock, n_bar) * capacity_scale(c);
    write_result(c, r, out);
    return kExitOk;
  }
  const ChannelStats st = pair_stats(src->pair, 0, 1);
  r["source"] = src->description;
  r["stats"] = stats_json(st);
  const CapacityReport rep = advantage(st, EnergyBudget{n_bar});
  r["capacity"] = rep.h_max * capacity_scale(c);
  r["report"] = report_json(rep, capacity_scale(c));
  write_result(c, r, out);
  return kExitOk;
}

int cmd_criterion(const RunConfig& c, std::ostream& out) {
  const Source src = require_source(c);
  const ChannelStats st = pair_stats(src.pair, 0, 1);
  ojson r;
  r["source"] = src.description;
  r["stats"] = stats_json(st);
  r["u_eff"] = std::sqrt(st.determinant());
  r["criterion_sq"] = below_threshold(st.determinant(), kSqueezedThreshold);
  r["criterion_fock"] = below_threshold(st.determinant(), kFockThreshold);
  r["product_entangled"] = below_threshold(st.determinant(), kEntanglementThreshold);

  const GaussianState centered = zero_displacement(src.pair, 0);
  const double theta = optimal_rotation(pair_stats(centered, 0, 1));
  const SqueezeSearchResult sq =
      minimize_v_product(paired_rotation(centered, 0, 1, theta));
  ojson opt;
  opt["theta"] = theta;
  opt["t_opt"] = sq.t_opt;
  opt["v_product_min"] = sq.v_product_min;
  opt["criterion_sq"] = below_threshold(sq.v_product_min, kSqueezedThreshold);
  opt["criterion_fock"] = below_threshold(sq.v_product_min, kFockThreshold);
  r["optimized"] = opt;
  write_result(c, r, out);
  return kExitOk;
}

EnergyAccounting parse_accounting(const std::string& name) {
  if (name == "photon") return EnergyAccounting::photon_number;
  if (name == "quadrature") return EnergyAccounting::quadrature_sum;
  throw std::invalid_argument("--accounting must be photon or quadrature, got '" + name + "'");
}

int cmd_optimize(const RunConfig& c, std::ostream& out) {
  const double n_bar = checked(c.n_bar, "nbar", c.command);
  const Source src = require_source(c);
  const double scale = capacity_scale(c);
  ojson r;
  r["source"] = src.description;
  r["n_bar"] = n_bar;
  const ChannelStats before = pair_stats(src.pair, 0, 1);
  r["stats_before"] = stats_json(before);
  try {
    r["h_before"] = h_max(before, EnergyBudget{n_bar}) * scale;
  } catch (const DomainError& e) {
    r["h_before"] = nullptr;
  }

  const PipelineResult p = optimize_pipeline(src.pair, n_bar);
  ojson pipe;
  pipe["theta"] = p.theta;
  pipe["t_opt"] = p.squeeze.t_opt;
  pipe["r1_minus_r2"] = p.squeeze.r1 - p.squeeze.r2;
  pipe["r1"] = p.squeeze.r1;
  pipe["r2"] = p.squeeze.r2;
  pipe["v_product_min"] = p.squeeze.v_product_min;
  pipe["squeeze_applied"] = p.squeeze_applied;
  pipe["stats_after"] = stats_json(pair_stats(p.state, 0, 1));
  pipe["report"] = report_json(p.report, scale);
  r["pipeline"] = pipe;

  const EnergyAccounting acc = parse_accounting(c.accounting);
  const JointSqueezeResult j = refine_joint_squeeze(src.pair, n_bar, acc);
  ojson joint;
  joint["accounting"] = c.accounting;
  joint["r1"] = j.r1;
  joint["r2"] = j.r2;
  joint["h"] = j.h * scale;
  joint["iterations"] = j.iterations;
  r["joint_squeeze"] = joint;
  write_result(c, r, out);
  return kExitOk;
}

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ScanConfig sc = scan_config(c);
  const Scheme compare = scheme_from_string(c.compare);
  if (compare == Scheme::fock) throw std::invalid_argument("--compare must be coherent or squeezed");
  const auto records = region_scan(sc);
  const std::size_t both = count_both_beat(records, compare);
  std::size_t errors = 0;
  for (const auto& r : records) errors += r.error.empty() ? 0 : 1;

  Metadata meta = grid_metadata(c, sc.a1, sc.n_bar);
  meta.emplace_back("compare", std::string(to_string(compare)));
  meta.emplace_back("cells", std::to_string(records.size()));
  meta.emplace_back("both_beat", std::to_string(both));
  meta.emplace_back("cell_errors", std::to_string(errors));
  write_records(c, records,
                c.extended_columns ? RecordSchema::monogamy : RecordSchema::region, meta,
                out);
  err << "scan: cells=" << records.size() << " both_beat_" << to_string(compare) << '='
      << both << " cell_errors=" << errors << '\n';
  return kExitOk;
}

int cmd_monogamy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const bool single = !c.state_path.empty() || has_three_mode_params(c);
  if (single) {
    const GaussianState state = !c.state_path.empty()
                                    ? load_state(c.state_path, c.allow_unphysical)
                                    : three_mode_from_params(c);
    const double n_bar = c.n_bar.value_or(kDefaultScanBudget);
    const MonogamyReport rep = monogamy_certificate(state, n_bar);
    auto pair_json = [&](const PairVerdict& v) {
      ojson j;
      j["criterion"] = v.criterion;
      j["criterion_initial"] = v.criterion_initial;
      j["h_max"] = v.h_max ? ojson(*v.h_max * capacity_scale(c)) : ojson(nullptr);
      j["advantage"] = v.advantage;
      if (!v.error.empty()) j["error"] = v.error;
      return j;
    };
    ojson r;
    r["n_bar"] = n_bar;
    r["hypothesis"] = std::string(to_string(rep.hypothesis));
    r["ab"] = pair_json(rep.ab);
    r["ac"] = pair_json(rep.ac);
    r["holds"] = rep.holds;
    r["advantaged_pair"] = rep.advantaged_pair;
    if (!rep.warning.empty()) {
      r["warning"] = rep.warning;
      err << "monogamy: warning: " << rep.warning << '\n';
    }
    write_result(c, r, out);
    return rep.holds ? kExitOk : kExitCertification;
  }

  const ScanConfig sc = scan_config(c);
  const MonogamyScan scan = monogamy_scan(sc);
  Metadata meta = grid_metadata(c, sc.a1, sc.n_bar);
  meta.emplace_back("cells", std::to_string(scan.records.size()));
  meta.emplace_back("red_cells", std::to_string(scan.red_cells));
  meta.emplace_back("blue_cells", std::to_string(scan.blue_cells));
  meta.emplace_back("overlap_cells", std::to_string(scan.overlap_cells));
  meta.emplace_back("fock_overlap_cells", std::to_string(scan.fock_overlap_cells));
  write_records(c, scan.records, RecordSchema::monogamy, meta, out);
  err << "monogamy: cells=" << scan.records.size() << " red=" << scan.red_cells
      << " blue=" << scan.blue_cells << " overlap=" << scan.overlap_cells
      << " fock_overlap=" << scan.fock_overlap_cells << '\n';
  const bool certified = scan.overlap_cells == 0 && scan.fock_overlap_cells == 0;
  if (!certified) err << "monogamy: certification failed, overlapping cells found\n";
  return certified ? kExitOk : kExitCertification;
}

int cmd_oracle_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const double n_bar = checked(c.n_bar, "nbar", c.command);
  if (!c.seed) throw std::invalid_argument("oracle-check needs --seed");
  const Source src = require_source(c);
  const ChannelStats st = pair_stats(src.pair, 0, 1);
  const EncodingPolicy enc =
      optimal_encoding(st, EnergyBudget{n_bar}.encoding_photons(st));
  MCConfig mc;
  mc.samples = c.samples;
  mc.seed = *c.seed;

  const MeasurementModel model = measurement_model(src.pair);
  const double analytic = mutual_information(st, enc);
  const double det = joint_gaussian_mi(model, enc);
  const MCEstimate est = monte_carlo_mi(model, enc, mc, c.threads);
  const double z = est.stderr_ > 0.0 ? (est.estimate - analytic) / est.stderr_ : 0.0;
  const double scale = capacity_scale(c);

  ojson r;
  r["source"] = src.description;
  r["n_bar"] = n_bar;
  r["sigma_x2"] = enc.sigma_x2;
  r["sigma_p2"] = enc.sigma_p2;
  r["analytic"] = analytic * scale;
  r["determinant_oracle"] = det * scale;
  r["monte_carlo"] = est.estimate * scale;
  r["monte_carlo_stderr"] = est.stderr_ * scale;
  r["z"] = z;
  r["samples"] = est.samples;
  r["seed"] = mc.seed;
  r["rng"] = est.algorithm;
  const bool ok = std::abs(analytic - det) <= 1e-9 && std::abs(z) <= 4.0;
  r["agree"] = ok;
  if (!c.dump_path.empty()) {
    std::ofstream dump(c.dump_path, std::ios::binary);
    if (!dump) throw std::runtime_error("cannot write " + c.dump_path);
    write_samples(model, enc, mc, dump);
  }
  write_result(c, r, out);
  if (!ok) err << "oracle-check: analytic and oracle values disagree\n";
  return ok ? kExitOk : kExitCertification;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::capacity: return "capacity";
    case Command::densecode: return "densecode";
    case Command::criterion: return "criterion";
    case Command::optimize: return "optimize";
    case Command::scan: return "scan";
    case Command::monogamy: return "monogamy";
    case Command::oracle_check: return "oracle-check";
  }
  return "unknown";
}

double parse_real(std::string_view text, std::string_view option) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("--" + std::string(option) + ": '" + std::string(text) +
                                "' is not a finite number");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text, std::string_view option) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("--" + std::string(option) + ": '" + std::string(text) +
                                "' is not a nonnegative integer");
  }
  return v;
}

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv,
                                        std::ostream& out, std::ostream& err) {
  CLI::App app{"cvdc: continuous-variable dense coding over two-mode Gaussian channels"};
  app.set_version_flag("--version", std::string("cvdc ") + CVDC_VERSION);
  app.require_subcommand(0, 1);
  RawOptions raw;
  add_options(app, raw);

  const std::pair<Command, const char*> commands[] = {
      {Command::capacity, "Single-mode or dense-coding capacity at a photon budget"},
      {Command::densecode, "Dense-coding h_max and advantage report of a state"},
      {Command::criterion, "Quantum-advantage criterion values of a state"},
      {Command::optimize, "Displacement, rotation and squeezing optimization"},
      {Command::scan, "Pure three-mode (c2, c3) region scan"},
      {Command::monogamy, "Monogamy certificate for one state or a region scan"},
      {Command::oracle_check, "Analytic vs determinant vs Monte Carlo mutual information"},
  };
  std::map<CLI::App*, Command> by_app;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(cmd)), help);
    add_options(*sub, raw);
    by_app[sub] = cmd;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 has its own code per error kind; collapse them to ours.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  RunConfig cfg;
  std::optional<Command> command;
  for (const auto& [sub, cmd] : by_app) {
    if (sub->parsed()) command = cmd;
  }

  std::map<std::string, std::string> values;
  if (!raw.preset.empty()) {
    const auto it = presets().find(raw.preset);
    if (it == presets().end()) {
      err << "cvdc: unknown preset '" << raw.preset
          << "' (expected fig1, fig2, fig3a, fig3b or fig4)\n";
      return kExitError;
    }
    values = it->second.values;
    cfg.extended_columns = it->second.extended;
    if (!command) command = it->second.command;
  }
  if (!command) {
    err << "cvdc: a command is required (or --preset)\n" << app.help();
    return kExitError;
  }
  cfg.command = *command;

  const std::pair<const char*, std::string*> text_opts[] = {
      {"state", &raw.state},     {"output", &raw.output}, {"format", &raw.format},
      {"preset", &raw.preset},   {"scheme", &raw.scheme}, {"compare", &raw.compare},
      {"pair", &raw.pair},       {"accounting", &raw.accounting},
      {"dump", &raw.dump},       {"nbar", &raw.nbar},     {"a1", &raw.a1},
      {"a2", &raw.a2},           {"a3", &raw.a3},         {"c2", &raw.c2},
      {"c3", &raw.c3},           {"s", &raw.s},           {"grid", &raw.grid},
      {"seed", &raw.seed},       {"samples", &raw.samples},
      {"threads", &raw.threads},
  };
  for (const auto& [name, value] : text_opts) {
    if (!value->empty()) {
      values[name] = *value;
      cfg.echo.emplace_back(name, *value);
    }
  }
  if (raw.bits) cfg.echo.emplace_back("bits", "1");
  if (raw.allow_unphysical) cfg.echo.emplace_back("allow-unphysical", "1");
  if (raw.extended) cfg.echo.emplace_back("extended", "1");

  try {
    auto get = [&](const char* k) -> const std::string* {
      const auto it = values.find(k);
      return it == values.end() ? nullptr : &it->second;
    };
    auto real = [&](const char* k) -> std::optional<double> {
      if (const auto* v = get(k)) return parse_real(*v, k);
      return std::nullopt;
    };
    if (const auto* v = get("state")) cfg.state_path = *v;
    if (const auto* v = get("output")) cfg.output_path = *v;
    if (const auto* v = get("format")) cfg.format = *v;
    if (const auto* v = get("preset")) cfg.preset = *v;
    if (const auto* v = get("scheme")) cfg.scheme = *v;
    if (const auto* v = get("compare")) cfg.compare = *v;
    if (const auto* v = get("pair")) cfg.pair = *v;
    if (const auto* v = get("accounting")) cfg.accounting = *v;
    if (const auto* v = get("dump")) cfg.dump_path = *v;
    cfg.n_bar = real("nbar");
    cfg.a1 = real("a1");
    cfg.a2 = real("a2");
    cfg.a3 = real("a3");
    cfg.c2 = real("c2");
    cfg.c3 = real("c3");
    cfg.s = real("s");
    if (const auto* v = get("grid")) cfg.grid = static_cast<int>(parse_u64(*v, "grid"));
    if (const auto* v = get("seed")) cfg.seed = parse_u64(*v, "seed");
    if (const auto* v = get("samples")) {
      cfg.samples = static_cast<std::size_t>(parse_real(*v, "samples"));
    }
    if (const auto* v = get("threads")) cfg.threads = static_cast<int>(parse_u64(*v, "threads"));
    cfg.bits = raw.bits;
    cfg.allow_unphysical = raw.allow_unphysical;
    cfg.extended_columns = cfg.extended_columns || raw.extended;

    if (cfg.n_bar && *cfg.n_bar < 0.0) throw std::invalid_argument("--nbar must be >= 0");
    if (cfg.grid < 2 || cfg.grid > kMaxGrid) {
      throw std::invalid_argument("--grid must be in [2, " + std::to_string(kMaxGrid) + "]");
    }
    if (cfg.samples < kMinSamples) {
      throw std::invalid_argument("--samples must be at least " + std::to_string(kMinSamples));
    }
    for (const auto* c : {&cfg.c2, &cfg.c3}) {
      if (*c && **c < 0.0) throw std::invalid_argument("--c2/--c3 must be >= 0");
    }
    if (cfg.a2.has_value() != cfg.a3.has_value() || cfg.c2.has_value() != cfg.c3.has_value()) {
      throw std::invalid_argument("give --a2 with --a3, and --c2 with --c3");
    }
    if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json") {
      throw std::invalid_argument("--format must be csv or json");
    }
  } catch (const std::exception& e) {
    err << "cvdc " << to_string(cfg.command) << ": " << e.what() << '\n';
    return kExitError;
  }
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::capacity: return cmd_capacity(config, out);
      case Command::densecode: return cmd_densecode(config, out);
      case Command::criterion: return cmd_criterion(config, out);
      case Command::optimize: return cmd_optimize(config, out);
      case Command::scan: return cmd_scan(config, out, err);
      case Command::monogamy: return cmd_monogamy(config, out, err);
      case Command::oracle_check: return cmd_oracle_check(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "cvdc " << to_string(config.command) << ": " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cvdc::cli
