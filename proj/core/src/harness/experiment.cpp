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

#include "qpadlock/harness/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "qpadlock/adversary/strategies.hpp"
#include "qpadlock/analysis/ensembles.hpp"
#include "qpadlock/analysis/estimators.hpp"
#include "qpadlock/harness/transcript_io.hpp"
#include "qpadlock/protocol/session.hpp"
#include "qpadlock/qcore/random.hpp"

namespace qpadlock::harness {

namespace {

int parse_strict_int(const std::string& text) {
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

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

StrategySpec StrategySpec::parse(const std::string& text) {
  StrategySpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw ConfigError("empty strategy name");
  if (colon != std::string::npos) {
    const std::string list = text.substr(colon + 1);
    if (list.empty()) {
      throw ConfigError("empty pass list in strategy spec \"" + text + "\"");
    }
    std::stringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
      spec.passes.insert(parse_strict_int(item));
    }
  }
  return spec;
}

void ExperimentConfig::validate() const {
  try {
    session.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (sessions == 0) throw ConfigError("sessions must be positive");
  const auto r = static_cast<std::uint64_t>(session.repetition_factor);
  if (sessions % r != 0) {
    throw ConfigError("sessions must be a multiple of the repetition factor");
  }
  if (workers < 1) throw ConfigError("workers must be positive");
  if (format != "csv" && format != "json") {
    throw ConfigError("format must be \"csv\" or \"json\"");
  }
  if (out_dir.empty()) throw ConfigError("out_dir must not be empty");
  (void)build_strategy(strategy);
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream out;
  out << "n=" << session.padlocks_per_party
      << ";r=" << session.repetition_factor
      << ";p=" << format_double(session.channel_depolarize_p)
      << ";dist=" << session.angle_distribution.describe()
      << ";sessions=" << sessions << ";strategy=" << strategy.name
      << ";passes=";
  bool first = true;
  for (int k : strategy.passes) {
    if (!first) out << ',';
    out << k;
    first = false;
  }
  out << ";basis=" << strategy.basis
      << ";clone_measurement=" << strategy.clone_measurement
      << ";seed=" << master_seed;
  return out.str();
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  static const std::set<std::string> kKnown = {
      "n",           "sessions", "repetition_factor",
      "channel_depolarize_p",    "angle_distribution",
      "strategy",    "master_seed",
      "out_dir",     "workers",  "format"};
  for (const auto& item : j.items()) {
    if (!kKnown.contains(item.key())) {
      throw ConfigError("unknown config key: " + item.key());
    }
  }
  ExperimentConfig config;
  try {
    if (j.contains("n")) {
      config.session.padlocks_per_party = j.at("n").get<int>();
    }
    if (j.contains("sessions")) {
      config.sessions = j.at("sessions").get<std::uint64_t>();
    }
    if (j.contains("repetition_factor")) {
      config.session.repetition_factor = j.at("repetition_factor").get<int>();
    }
    if (j.contains("channel_depolarize_p")) {
      config.session.channel_depolarize_p =
          j.at("channel_depolarize_p").get<double>();
    }
    if (j.contains("angle_distribution")) {
      config.session.angle_distribution = protocol::AngleDistribution::parse(
          j.at("angle_distribution").get<std::string>());
    }
    if (j.contains("strategy")) {
      const auto& s = j.at("strategy");
      if (s.is_string()) {
        config.strategy = StrategySpec::parse(s.get<std::string>());
      } else if (s.is_object()) {
        static const std::set<std::string> kKnownStrategy = {
            "name", "passes", "basis", "clone_measurement"};
        for (const auto& item : s.items()) {
          if (!kKnownStrategy.contains(item.key())) {
            throw ConfigError("unknown strategy key: " + item.key());
          }
        }
        if (s.contains("name")) {
          config.strategy.name = s.at("name").get<std::string>();
        }
        if (s.contains("passes")) {
          for (int k : s.at("passes").get<std::vector<int>>()) {
            config.strategy.passes.insert(k);
          }
        }
        if (s.contains("basis")) {
          const auto& basis = s.at("basis");
          config.strategy.basis = basis.is_string()
                                      ? basis.get<std::string>()
                                      : format_double(basis.get<double>());
        }
        if (s.contains("clone_measurement")) {
          config.strategy.clone_measurement =
              s.at("clone_measurement").get<std::string>();
        }
      } else {
        throw ConfigError("strategy must be a string or an object");
      }
    }
    if (j.contains("master_seed")) {
      config.master_seed = j.at("master_seed").get<std::uint64_t>();
    }
    if (j.contains("out_dir")) config.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("workers")) config.workers = j.at("workers").get<int>();
    if (j.contains("format")) config.format = j.at("format").get<std::string>();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  return config;
}

std::unique_ptr<adversary::AttackStrategy> build_strategy(
    const StrategySpec& spec) {
  const std::set<int> passes =
      spec.passes.empty() ? std::set<int>{1} : spec.passes;
  try {
    if (spec.name == "no_attack") return adversary::no_attack();
    if (spec.name == "full_mitm") return adversary::full_mitm();
    if (spec.name == "intercept_resend") {
      auto policy = adversary::BasisPolicy::uniform_random();
      if (spec.basis != "uniform") {
        std::size_t used = 0;
        const double phi = std::stod(spec.basis, &used);
        if (used != spec.basis.size()) {
          throw ConfigError(
              "basis must be \"uniform\" or an angle in radians");
        }
        policy = adversary::BasisPolicy::fixed(phi);
      }
      return adversary::intercept_resend(policy, passes);
    }
    if (spec.name == "clone_attack") {
      adversary::CloneMeasurement measurement;
      if (spec.clone_measurement == "computational") {
        measurement = adversary::CloneMeasurement::kComputational;
      } else if (spec.clone_measurement == "defer") {
        measurement = adversary::CloneMeasurement::kDefer;
      } else {
        throw ConfigError(
            "clone_measurement must be \"computational\" or \"defer\"");
      }
      return adversary::clone_attack(passes, measurement);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad strategy parameters: ") + e.what());
  }
  throw ConfigError("unknown strategy \"" + spec.name +
                    "\"; known strategies: no_attack, intercept_resend, "
                    "clone_attack, full_mitm");
}

analysis::ExperimentSummary run_experiment(
    const ExperimentConfig& config,
    std::vector<protocol::SessionTranscript>* transcripts_out) {
  config.validate();
  const std::uint64_t total = config.sessions;
  const auto r = static_cast<std::uint64_t>(config.session.repetition_factor);
  std::vector<protocol::SessionTranscript> transcripts(total);

  auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto strategy = build_strategy(config.strategy);
      // The bit stream is indexed by logical group so every repetition
      // copy of a bit sees the same value regardless of partitioning.
      qcore::RandomSource bit_rng(
          qcore::derive_stream(config.master_seed, kStreamBit, i / r));
      const int bit = bit_rng.coin();
      qcore::RandomSource rng(
          qcore::derive_stream(config.master_seed, kStreamSession, i));
      transcripts[i] = protocol::run_session(config.session, bit, *strategy,
                                             {config.master_seed, i}, rng);
    }
  };

  const std::uint64_t workers =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers), total);
  if (workers <= 1) {
    run_block(0, total);
  } else {
    // Static block partition: the work split never affects which stream a
    // session reads, only which thread runs it.
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&run_block, &errors, w, begin, end] {
        try {
          run_block(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& worker : pool) worker.join();
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  analysis::ExperimentSummary summary;
  summary.strategy = config.strategy.name;
  summary.n = config.session.padlocks_per_party;
  summary.sessions = total;
  summary.repetition_factor = config.session.repetition_factor;
  summary.qber = analysis::qber(transcripts);
  summary.eve_accuracy = analysis::eve_accuracy(transcripts);
  const auto [symbols, bits] = analysis::eve_symbol_samples(transcripts);
  summary.mutual_information_bits =
      analysis::mutual_information_bits(symbols, bits);
  summary.mismatch =
      analysis::mismatch_rate(transcripts, config.session.repetition_factor);
  const int passes = config.session.pass_count();
  const std::uint64_t samples = std::max<std::uint64_t>(total, 1000);
  for (int k = 1; k <= passes; ++k) {
    qcore::RandomSource rng(qcore::derive_stream(
        config.master_seed, kStreamDistinguishability,
        static_cast<std::uint64_t>(k)));
    summary.distinguishability_by_pass.push_back(
        analysis::ensemble_distinguishability(k, config.session, samples, rng));
  }
  summary.master_seed = config.master_seed;
  summary.config_hash = analysis::fnv1a64_hex(config.canonical());
  if (transcripts_out != nullptr) *transcripts_out = std::move(transcripts);
  return summary;
}

void write_outputs(
    const ExperimentConfig& config, const analysis::ExperimentSummary& summary,
    const std::vector<protocol::SessionTranscript>& transcripts) {
  const std::filesystem::path dir(config.out_dir);
  std::filesystem::create_directories(dir);
  write_transcripts((dir / "transcripts.jsonl").string(), transcripts);
  {
    const auto path = dir / "summary.csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << analysis::csv_header() << '\n' << analysis::csv_row(summary) << '\n';
  }
  {
    const auto path = dir / "summary.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << analysis::to_json(summary) << '\n';
  }
}

analysis::ExperimentSummary summarize_transcripts(
    const std::vector<protocol::SessionTranscript>& transcripts,
    const std::string& strategy_name) {
  if (transcripts.empty()) throw ConfigError("no transcripts to summarize");
  analysis::ExperimentSummary summary;
  summary.strategy = strategy_name;
  summary.n = transcripts.front().n;
  summary.sessions = transcripts.size();
  summary.repetition_factor = transcripts.front().repetition_factor;
  summary.qber = analysis::qber(transcripts);
  summary.eve_accuracy = analysis::eve_accuracy(transcripts);
  const auto [symbols, bits] = analysis::eve_symbol_samples(transcripts);
  summary.mutual_information_bits =
      analysis::mutual_information_bits(symbols, bits);
  summary.mismatch =
      analysis::mismatch_rate(transcripts, summary.repetition_factor);
  summary.master_seed = transcripts.front().master_seed;
  std::ostringstream tag;
  tag << "report;strategy=" << strategy_name << ";n=" << summary.n
      << ";r=" << summary.repetition_factor << ";sessions=" << summary.sessions
      << ";seed=" << summary.master_seed;
  summary.config_hash = analysis::fnv1a64_hex(tag.str());
  return summary;
}

}  // namespace qpadlock::harness
