// Copyright 2026 The qpadlock Authors
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

#include "qpadlock/harness/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpadlock/analysis/summary.hpp"
#include "qpadlock/harness/experiment.hpp"
#include "qpadlock/harness/transcript_io.hpp"
#include "qpadlock/protocol/classical.hpp"
#include "qpadlock/qcore/random.hpp"

namespace qpadlock::harness {

namespace {

void print_summary(const analysis::ExperimentSummary& summary,
                   const std::string& format) {
  if (format == "json") {
    std::cout << analysis::to_json(summary) << '\n';
  } else {
    std::cout << analysis::csv_header() << '\n'
              << analysis::csv_row(summary) << '\n';
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: \"" + text + "\"");
  }
  if (used != text.size()) throw ConfigError("not an integer: \"" + text + "\"");
  return value;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"laboratory for the two-padlock multi-pass key exchange"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand(
      "run", "run one experiment; writes transcripts.jsonl plus summaries");
  std::string run_config_path;
  std::uint64_t run_seed = 0;
  std::uint64_t run_sessions = 0;
  std::string run_strategy;
  int run_n = 0;
  std::string run_out_dir;
  int run_workers = 0;
  std::string run_format;
  auto* run_config_opt =
      run->add_option("--config", run_config_path, "JSON config file");
  auto* run_seed_opt = run->add_option("--seed", run_seed, "master seed");
  auto* run_sessions_opt =
      run->add_option("--sessions", run_sessions, "number of sessions");
  auto* run_strategy_opt = run->add_option(
      "--strategy", run_strategy,
      "strategy spec: name or name:pass,pass (e.g. intercept_resend:1)");
  auto* run_n_opt = run->add_option("--n", run_n, "padlocks per party");
  auto* run_out_opt =
      run->add_option("--out-dir", run_out_dir, "output directory");
  auto* run_workers_opt =
      run->add_option("--workers", run_workers, "worker thread count");
  auto* run_format_opt =
      run->add_option("--format", run_format, "stdout format: csv or json");

  auto* sweep = app.add_subcommand(
      "sweep", "run a strategy-by-n grid; writes one combined sweep.csv");
  std::string sweep_config_path;
  std::uint64_t sweep_seed = 0;
  std::uint64_t sweep_sessions = 0;
  std::string sweep_out_dir;
  int sweep_workers = 0;
  std::string sweep_strategies =
      "no_attack;intercept_resend:1;clone_attack:1;full_mitm";
  std::string sweep_ns = "1,2";
  auto* sweep_config_opt =
      sweep->add_option("--config", sweep_config_path, "JSON config file");
  auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "master seed");
  auto* sweep_sessions_opt = sweep->add_option("--sessions", sweep_sessions,
                                               "sessions per grid point");
  auto* sweep_out_opt =
      sweep->add_option("--out-dir", sweep_out_dir, "output directory");
  auto* sweep_workers_opt =
      sweep->add_option("--workers", sweep_workers, "worker thread count");
  sweep->add_option("--strategies", sweep_strategies,
                    "semicolon-separated strategy specs")->capture_default_str();
  sweep->add_option("--n-list", sweep_ns, "comma-separated padlock counts")->capture_default_str();

  auto* classical = app.add_subcommand(
      "classical-demo",
      "run the commuting three-pass cipher, then break every exchange from "
      "the public sequences alone");
  std::uint64_t demo_words = 1000;
  int demo_width = 8;
  std::uint64_t demo_seed = 1;
  classical->add_option("--words", demo_words, "number of message words")->capture_default_str();
  classical->add_option("--width", demo_width, "word width in bits (1..32)")->capture_default_str();
  classical->add_option("--seed", demo_seed, "master seed")->capture_default_str();

  auto* report = app.add_subcommand(
      "report", "recompute a summary from an existing transcripts.jsonl");
  std::string report_path;
  std::string report_format = "csv";
  std::string report_name = "transcripts";
  report->add_option("--transcripts", report_path, "transcripts.jsonl path")
      ->required();
  report->add_option("--format", report_format, "stdout format: csv or json")->capture_default_str();
  report->add_option("--strategy-name", report_name,
                     "strategy label for the summary row")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(run)) {
      ExperimentConfig config;
      if (run_config_opt->count() > 0) config = load_config(run_config_path);
      if (run_seed_opt->count() > 0) config.master_seed = run_seed;
      if (run_sessions_opt->count() > 0) config.sessions = run_sessions;
      if (run_strategy_opt->count() > 0) {
        config.strategy = StrategySpec::parse(run_strategy);
      }
      if (run_n_opt->count() > 0) config.session.padlocks_per_party = run_n;
      if (run_out_opt->count() > 0) config.out_dir = run_out_dir;
      if (run_workers_opt->count() > 0) config.workers = run_workers;
      if (run_format_opt->count() > 0) config.format = run_format;
      std::vector<protocol::SessionTranscript> transcripts;
      const auto summary = run_experiment(config, &transcripts);
      write_outputs(config, summary, transcripts);
      print_summary(summary, config.format);
      return 0;
    }

    if (app.got_subcommand(sweep)) {
      ExperimentConfig base;
      if (sweep_config_opt->count() > 0) base = load_config(sweep_config_path);
      if (sweep_seed_opt->count() > 0) base.master_seed = sweep_seed;
      if (sweep_sessions_opt->count() > 0) base.sessions = sweep_sessions;
      if (sweep_out_opt->count() > 0) base.out_dir = sweep_out_dir;
      if (sweep_workers_opt->count() > 0) base.workers = sweep_workers;
      std::vector<StrategySpec> specs;
      for (const auto& part : split(sweep_strategies, ';')) {
        if (!part.empty()) specs.push_back(StrategySpec::parse(part));
      }
      if (specs.empty()) throw ConfigError("empty strategy list");
      std::vector<int> ns;
      for (const auto& part : split(sweep_ns, ',')) {
        if (!part.empty()) ns.push_back(parse_int(part));
      }
      if (ns.empty()) throw ConfigError("empty n list");
      std::ostringstream table;
      table << analysis::csv_header() << '\n';
      for (const auto& spec : specs) {
        for (int n : ns) {
          ExperimentConfig config = base;
          config.strategy = spec;
          config.session.padlocks_per_party = n;
          table << analysis::csv_row(run_experiment(config)) << '\n';
        }
      }
      std::filesystem::create_directories(base.out_dir);
      const auto path = std::filesystem::path(base.out_dir) / "sweep.csv";
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << table.str();
      std::cout << table.str();
      return 0;
    }

    if (app.got_subcommand(classical)) {
      if (demo_words == 0) throw ConfigError("words must be positive");
      if (demo_width < 1 || demo_width > 32) {
        throw ConfigError("width must be in [1, 32]");
      }
      qcore::RandomSource rng(
          qcore::derive_stream(demo_seed, kStreamClassical, 0));
      const std::uint64_t mask =
          demo_width == 32 ? 0xFFFFFFFFull : ((1ull << demo_width) - 1);
      std::vector<std::uint32_t> message(demo_words);
      for (auto& word : message) {
        word = static_cast<std::uint32_t>(rng.next_u64() & mask);
      }
      const auto sequences =
          protocol::three_pass_run(message, demo_width, rng);
      const auto recovered = protocol::three_pass_break(sequences);
      std::uint64_t matches = 0;
      for (std::size_t i = 0; i < message.size(); ++i) {
        if (recovered[i] == message[i]) ++matches;
      }
      const double rate =
          static_cast<double>(matches) / static_cast<double>(message.size());
      char rate_text[32];
      std::snprintf(rate_text, sizeof rate_text, "%.6f", rate);
      std::cout << "words " << demo_words << '\n'
                << "width " << demo_width << '\n'
                << "recovered " << matches << '\n'
                << "recovery_rate " << rate_text << '\n';
      return matches == demo_words ? 0 : 2;
    }

    if (app.got_subcommand(report)) {
      if (report_format != "csv" && report_format != "json") {
        throw ConfigError("format must be \"csv\" or \"json\"");
      }
      const auto transcripts = read_transcripts(report_path);
      print_summary(summarize_transcripts(transcripts, report_name),
                    report_format);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qpadlock::harness
