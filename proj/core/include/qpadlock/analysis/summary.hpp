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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpadlock/analysis/estimators.hpp"

namespace qpadlock::analysis {

/// One experiment's aggregated results. Serializes to a CSV row and a
/// JSON object; both carry the master seed and the config fingerprint so
/// any number can be traced back to an exact rerun.
struct ExperimentSummary {
  std::string strategy;
  int n = 1;
  std::uint64_t sessions = 0;
  int repetition_factor = 1;
  RateEstimate qber;
  RateEstimate eve_accuracy;
  double mutual_information_bits = 0.0;
  RateEstimate mismatch;
  /// One value per pass index 1..2n+1; empty when the source data cannot
  /// support the estimate (transcript-only reports).
  std::vector<double> distinguishability_by_pass;
  std::uint64_t master_seed = 0;
  /// FNV-1a 64 of the canonical config string, 16 hex digits.
  std::string config_hash;
};

/// Stable column order; see the README for the schema.
std::string csv_header();
std::string csv_row(const ExperimentSummary& summary);

/// Pretty-printed JSON object with fixed key order.
std::string to_json(const ExperimentSummary& summary);

/// FNV-1a 64-bit content fingerprint (not cryptographic; a reproducibility
/// tag).
std::uint64_t fnv1a64(std::string_view text);
std::string fnv1a64_hex(std::string_view text);

}  // namespace qpadlock::analysis
