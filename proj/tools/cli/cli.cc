// Copyright 2026 The lwhbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lwhb/energymodel/energy.h"
#include "lwhb/energymodel/trace_io.h"
#include "lwhb/error.h"
#include "lwhb/format.h"
#include "lwhb/hashkit/hasher.h"
#include "lwhb/hashkit/kat.h"
#include "lwhb/memfoot/memfoot.h"
#include "lwhb/metrics/dataset.h"
#include "lwhb/metrics/report.h"
#include "lwhb/profiler/profiler.h"

namespace lwhb::cli {

namespace {

std::string ImplementedIds() {
  std::string ids;
  for (const hashkit::HashSpec& s : hashkit::RegistryList()) {
    if (!s.implemented) continue;
    if (!ids.empty()) ids += ", ";
    ids += s.id;
  }
  return ids;
}

// Resolves a spec id for a command that needs a working implementation.
void RequireHashSpec(const std::string& id) {
  const hashkit::HashSpec* spec = hashkit::FindSpec(id);
  if (spec == nullptr || !spec->implemented) {
    ThrowNotImplemented("unknown or unimplemented spec '" + id +
                        "'; implemented: " + ImplementedIds());
  }
}

std::string ReadFile(const std::string& path) {
  return metrics::ReadTextFile(path);
}

std::string ReadStream(std::istream& in) {
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void Emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) ThrowInvalidArgument("cannot write '" + out_path + "'");
  file << text;
}

// --- hash -------------------------------------------------------------------

struct HashArgs {
  std::string spec;
  std::string input;
};

int RunHash(const HashArgs& a, std::istream& in, std::ostream& out) {
  RequireHashSpec(a.spec);
  const std::string message =
      a.input.empty() || a.input == "-" ? ReadStream(in) : ReadFile(a.input);
  out << hashkit::Hash(a.spec, AsBytes(message)).hex() << "\n";
  return kExitOk;
}

// --- kat --------------------------------------------------------------------

struct KatArgs {
  std::string spec;
  std::string file;
};

int RunKat(const KatArgs& a, std::ostream& out) {
  RequireHashSpec(a.spec);
  const auto vectors = hashkit::ParseKatFile(ReadFile(a.file));
  const hashkit::KatOutcome outcome = hashkit::RunKat(a.spec, vectors);
  for (const hashkit::KatFailure& f : outcome.failures) {
    out << "FAIL Count = " << f.count << " expected " << f.expected_hex
        << " got " << f.actual_hex << "\n";
  }
  out << a.spec << ": " << outcome.total - outcome.failures.size() << "/"
      << outcome.total << " vectors passed\n";
  return outcome.ok() ? kExitOk : kExitVerificationFailed;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> specs;
  std::size_t len = profiler::kDefaultMessageLen;
  std::size_t reps = profiler::kDefaultRepetitions;
  std::string source = "host";
  double clk = energymodel::CaptureConfig{}.f_clk;
  std::vector<std::uint64_t> script;
  std::string out_path;
};

int RunBench(const BenchArgs& a, std::ostream& out) {
  std::vector<std::string> ids;
  for (const std::string& s : a.specs) {
    if (s == "all-implemented") {
      for (const hashkit::HashSpec& spec : hashkit::RegistryList()) {
        if (spec.implemented) ids.emplace_back(spec.id);
      }
    } else {
      RequireHashSpec(s);
      ids.push_back(s);
    }
  }
  std::vector<profiler::CpbResult> results;
  for (const std::string& id : ids) {
    // A fresh source per function so scripted runs replay from the start.
    std::unique_ptr<profiler::CycleSource> source;
    if (a.source == "host") {
      source = profiler::NewHostCounter();
    } else if (a.source == "clock") {
      source = profiler::NewMonotonicClockScaled(a.clk);
    } else {
      if (a.script.empty()) {
        ThrowInvalidArgument("--source scripted needs --script c1,c2,...");
      }
      source = profiler::NewScripted(a.script, a.clk);
    }
    results.push_back(profiler::MeasureCpb(id, a.len, a.reps, *source));
  }
  Emit(profiler::FormatBenchCsv(results), a.out_path, out);
  return kExitOk;
}

// --- mem --------------------------------------------------------------------

struct MemArgs {
  std::string spec = "unnamed";
  std::string map;
  std::string su;
  std::string callgraph;
  std::optional<std::uint64_t> ram;
  std::optional<std::uint64_t> rom;
  std::string out_path;
};

int RunMem(const MemArgs& a, std::ostream& out) {
  memfoot::MemoryFootprint fp;
  if (a.ram || a.rom) {
    if (!a.ram || !a.rom || !a.map.empty()) {
      ThrowInvalidArgument(
          "external footprints need both --ram and --rom and no --map");
    }
    fp = memfoot::ExternalFootprint(*a.ram, *a.rom);
  } else {
    if (a.map.empty()) ThrowInvalidArgument("--map is required");
    if (!a.callgraph.empty() && a.su.empty()) {
      ThrowInvalidArgument("--callgraph needs --su");
    }
    const memfoot::MapSegments segments = memfoot::ParseMap(ReadFile(a.map));
    memfoot::StackUsage stack;
    if (!a.su.empty()) {
      const std::string su = ReadFile(a.su);
      stack = a.callgraph.empty()
                  ? memfoot::ParseSu(su)
                  : memfoot::ParseSu(
                        su, memfoot::ParseCallGraph(ReadFile(a.callgraph)));
    }
    fp = memfoot::Footprint(segments, stack);
    fp.sources = {a.map};
    if (!a.su.empty()) fp.sources.push_back(a.su);
    if (!a.callgraph.empty()) fp.sources.push_back(a.callgraph);
  }
  const memfoot::FootprintRow row{a.spec, fp};
  Emit(memfoot::FormatFootprintCsv({&row, 1}), a.out_path, out);
  return kExitOk;
}

// --- energy -----------------------------------------------------------------

struct EnergyArgs {
  std::string trace;
  double cycles = 0;
  energymodel::CaptureConfig config;
  std::optional<double> gain_db;
  std::string out_path;
};

int RunEnergy(const EnergyArgs& a, std::ostream& out) {
  energymodel::PowerTrace trace;
  trace.config = a.config;
  if (a.gain_db) trace.config.gain_factor = energymodel::GainFromDecibels(*a.gain_db);
  trace.config.Validate();
  trace.samples = energymodel::LoadTraceFile(a.trace);
  Emit(energymodel::FormatEnergyJson(energymodel::Energy(trace, a.cycles)),
       a.out_path, out);
  return kExitOk;
}

// --- rank / report ----------------------------------------------------------

struct InputArgs {
  bool paper = false;
  std::vector<std::string> inputs;
};

std::vector<metrics::MeasurementRecord> LoadRecords(const InputArgs& a) {
  std::vector<metrics::MeasurementRecord> records;
  if (a.paper) records = metrics::PaperDataset();
  for (const std::string& path : a.inputs) {
    auto more = metrics::ParseMeasurementCsv(ReadFile(path),
                                             metrics::RecordSource::kMeasured);
    records.insert(records.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
  }
  if (records.empty()) {
    ThrowInvalidArgument("no input records (use --paper or --in FILE)");
  }
  return records;
}

struct RankArgs {
  InputArgs input;
  std::string metric = "erank";
  std::string out_path;
};

int RunRank(const RankArgs& a, std::ostream& out) {
  const metrics::Metric m = metrics::ParseMetric(a.metric);
  const auto records = LoadRecords(a.input);
  const metrics::Metric ms[] = {m};
  const metrics::MetricReport report = metrics::BuildReport(records, ms);
  std::string text = "rank,spec_id," + a.metric + "\n";
  std::size_t rank = 0;
  for (const std::string& id : report.primary_ordering()) {
    const metrics::ReportRow& row = report.row(id);
    const double value =
        m == metrics::Metric::kErank ? row.erank : metrics::RawValue(row.record, m);
    text += std::to_string(++rank) + "," + id + "," + FormatNumber(value) + "\n";
  }
  Emit(text, a.out_path, out);
  return kExitOk;
}

struct ReportArgs {
  InputArgs input;
  std::string format = "csv";
  std::vector<std::string> metrics = {"cpb", "ram", "rom", "energy", "erank"};
  std::string sort = "erank";
  std::string log_form = "ratio";
  bool compare = false;
  std::string out_path;
};

int RunReport(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  const auto records = LoadRecords(a.input);
  if (a.compare) {
    Emit(metrics::FormatComparisonCsv(metrics::CompareToPaper(records)),
         a.out_path, out);
    return kExitOk;
  }
  std::vector<metrics::Metric> ms;
  for (const std::string& name : a.metrics) ms.push_back(metrics::ParseMetric(name));
  metrics::ReportOptions options;
  options.sort_by = metrics::ParseMetric(a.sort);
  options.log_form = a.log_form == "product" ? metrics::LogForm::kProduct
                                             : metrics::LogForm::kRatio;
  const metrics::MetricReport report = metrics::BuildReport(records, ms, options);
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  std::string text;
  if (a.format == "csv") {
    text = metrics::FormatReportCsv(report);
  } else if (a.format == "json") {
    text = metrics::FormatReportJson(report);
  } else {
    text = metrics::FormatReportSvg(report);
  }
  Emit(text, a.out_path, out);
  return kExitOk;
}

void AddInputOptions(CLI::App* cmd, InputArgs& a) {
  cmd->add_flag("--paper", a.paper,
                "Include the reference dataset (LWHBENCH_TABLE2 overrides)");
  cmd->add_option("--in", a.inputs,
                  "Measurement CSV (spec_id,cpb,ram,rom,energy_nj)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmarking suite for lightweight hash functions", "lwhbench"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "lwhbench 0.1.0");

  HashArgs hash_args;
  CLI::App* hash = app.add_subcommand("hash", "Print the hex digest of a file or stdin");
  hash->add_option("--spec", hash_args.spec, "Hash function id")->required();
  hash->add_option("--in", hash_args.input, "Input file (default: stdin)");

  KatArgs kat_args;
  CLI::App* kat = app.add_subcommand("kat", "Verify a known-answer test file");
  kat->add_option("--spec", kat_args.spec, "Hash function id")->required();
  kat->add_option("--file", kat_args.file, "LWC_HASH_KAT_256.txt style file")
      ->required()
      ->check(CLI::ExistingFile);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Measure cycles per byte");
  bench->add_option("--spec", bench_args.specs,
                    "Hash function id(s) or all-implemented")
      ->required();
  bench->add_option("--len", bench_args.len, "Message length in bytes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_args.reps, "Timed repetitions")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--source", bench_args.source, "Cycle source")
      ->capture_default_str()
      ->check(CLI::IsMember({"host", "clock", "scripted"}));
  bench->add_option("--clk", bench_args.clk,
                    "Nominal clock in Hz for the clock source")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--script", bench_args.script,
                    "Cycle counts replayed by the scripted source")
      ->delimiter(',');
  bench->add_option("--out", bench_args.out_path, "Output file (default: stdout)");

  MemArgs mem_args;
  CLI::App* mem = app.add_subcommand("mem", "RAM/ROM footprint from .map/.su files");
  mem->add_option("--spec", mem_args.spec, "Label for the output row")
      ->capture_default_str();
  mem->add_option("--map", mem_args.map, "GNU ld map file")->check(CLI::ExistingFile);
  mem->add_option("--su", mem_args.su, "GCC stack-usage file")->check(CLI::ExistingFile);
  mem->add_option("--callgraph", mem_args.callgraph,
                  "Caller/callee edge list; switches to deepest-path stack")
      ->check(CLI::ExistingFile);
  mem->add_option("--ram", mem_args.ram, "Externally measured RAM bytes");
  mem->add_option("--rom", mem_args.rom, "Externally measured ROM bytes");
  mem->add_option("--out", mem_args.out_path, "Output file (default: stdout)");

  EnergyArgs energy_args;
  CLI::App* energy = app.add_subcommand("energy", "Energy per execution from a power trace");
  energy->add_option("--trace", energy_args.trace, "Trace file (text or LWHTRC01)")
      ->required()
      ->check(CLI::ExistingFile);
  energy->add_option("--cycles", energy_args.cycles, "Cycles per execution")
      ->required()
      ->check(CLI::NonNegativeNumber);
  energy->add_option("--clk", energy_args.config.f_clk, "Clock in Hz")
      ->capture_default_str();
  CLI::Option* gain =
      energy->add_option("--gain", energy_args.config.gain_factor,
                         "Linear amplifier gain")
          ->capture_default_str();
  energy->add_option("--gain-db", energy_args.gain_db, "Amplifier gain in dB")
      ->excludes(gain);
  energy->add_option("--shunt", energy_args.config.r_shunt, "Shunt resistance in ohms")
      ->capture_default_str();
  energy->add_option("--vsup", energy_args.config.v_sup, "Supply voltage")
      ->capture_default_str();
  energy->add_option("--vref", energy_args.config.v_adc_ref, "ADC reference voltage")
      ->capture_default_str();
  energy->add_option("--out", energy_args.out_path, "Output file (default: stdout)");

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand("rank", "Order functions by one metric");
  AddInputOptions(rank, rank_args.input);
  rank->add_option("--metric", rank_args.metric, "cpb, ram, rom, energy or erank")
      ->capture_default_str();
  rank->add_option("--out", rank_args.out_path, "Output file (default: stdout)");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "Normalized metric report");
  AddInputOptions(report, report_args.input);
  report->add_option("--format", report_args.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  report->add_option("--metrics", report_args.metrics, "Metrics to include")
      ->delimiter(',')
      ->capture_default_str();
  report->add_option("--sort", report_args.sort, "Metric the rows are ordered by")
      ->capture_default_str();
  report->add_option("--log-form", report_args.log_form,
                     "Logarithmic normalization form")
      ->capture_default_str()
      ->check(CLI::IsMember({"ratio", "product"}));
  report->add_flag("--compare", report_args.compare,
                   "Emit relative deltas against the reference dataset instead");
  report->add_option("--out", report_args.out_path, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hash) return RunHash(hash_args, in, out);
    if (*kat) return RunKat(kat_args, out);
    if (*bench) return RunBench(bench_args, out);
    if (*mem) return RunMem(mem_args, out);
    if (*energy) return RunEnergy(energy_args, out);
    if (*rank) return RunRank(rank_args, out);
    if (*report) return RunReport(report_args, out, err);
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lwhb::cli
