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

#include "qpadlock/analysis/summary.hpp"

#include <cstdio>

#include <json.hpp>

namespace qpadlock::analysis {

namespace {

std::string fixed6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string join_fixed6(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += '|';
    out += fixed6(values[i]);
  }
  return out;
}

nlohmann::ordered_json rate_json(const RateEstimate& est) {
  return {{"rate", est.rate},
          {"ci_low", est.ci_low},
          {"ci_high", est.ci_high},
          {"successes", est.successes},
          {"trials", est.trials}};
}

}  // namespace

std::string csv_header() {
  return "strategy,n,sessions,repetition_factor,"
         "qber,qber_ci_low,qber_ci_high,"
         "eve_accuracy,eve_accuracy_ci_low,eve_accuracy_ci_high,"
         "mutual_information_bits,"
         "mismatch_rate,mismatch_ci_low,mismatch_ci_high,"
         "distinguishability_by_pass,master_seed,config_hash";
}

std::string csv_row(const ExperimentSummary& s) {
  std::string row;
  row += s.strategy;
  row += ',' + std::to_string(s.n);
  row += ',' + std::to_string(s.sessions);
  row += ',' + std::to_string(s.repetition_factor);
  row += ',' + fixed6(s.qber.rate);
  row += ',' + fixed6(s.qber.ci_low);
  row += ',' + fixed6(s.qber.ci_high);
  row += ',' + fixed6(s.eve_accuracy.rate);
  row += ',' + fixed6(s.eve_accuracy.ci_low);
  row += ',' + fixed6(s.eve_accuracy.ci_high);
  row += ',' + fixed6(s.mutual_information_bits);
  row += ',' + fixed6(s.mismatch.rate);
  row += ',' + fixed6(s.mismatch.ci_low);
  row += ',' + fixed6(s.mismatch.ci_high);
  row += ',' + join_fixed6(s.distinguishability_by_pass);
  row += ',' + std::to_string(s.master_seed);
  row += ',' + s.config_hash;
  return row;
}

std::string to_json(const ExperimentSummary& s) {
  nlohmann::ordered_json j;
  j["strategy"] = s.strategy;
  j["n"] = s.n;
  j["sessions"] = s.sessions;
  j["repetition_factor"] = s.repetition_factor;
  j["qber"] = rate_json(s.qber);
  j["eve_accuracy"] = rate_json(s.eve_accuracy);
  j["mutual_information_bits"] = s.mutual_information_bits;
  j["mismatch"] = rate_json(s.mismatch);
  j["distinguishability_by_pass"] = s.distinguishability_by_pass;
  j["master_seed"] = s.master_seed;
  j["config_hash"] = s.config_hash;
  return j.dump(2);
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

}  // namespace qpadlock::analysis
