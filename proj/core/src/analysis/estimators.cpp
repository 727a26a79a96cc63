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

#include "qpadlock/analysis/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qpadlock::analysis {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

RateEstimate wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson interval needs trials");
  if (successes > trials) {
    throw std::invalid_argument("successes exceed trials");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  RateEstimate est;
  est.rate = p;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  // Degenerate counts give exact endpoints; the roundoff in center - half
  // must not let a zero-count interval exclude zero.
  if (successes == 0) est.ci_low = 0.0;
  if (successes == trials) est.ci_high = 1.0;
  est.successes = successes;
  est.trials = trials;
  return est;
}

RateEstimate qber(const std::vector<protocol::SessionTranscript>& transcripts) {
  std::uint64_t errors = 0;
  std::uint64_t trials = 0;
  for (const auto& t : transcripts) {
    if (t.aborted) continue;
    ++trials;
    if (t.bob_outcome != t.bit) ++errors;
  }
  if (trials == 0) {
    throw std::invalid_argument("qber needs a non-aborted transcript");
  }
  return wilson_interval(errors, trials);
}

RateEstimate eve_accuracy(
    const std::vector<protocol::SessionTranscript>& transcripts) {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  for (const auto& t : transcripts) {
    if (t.aborted || t.eve.guess < 0) continue;
    ++trials;
    if (t.eve.guess == t.bit) ++hits;
  }
  if (trials == 0) {
    throw std::invalid_argument("eve_accuracy needs sessions with guesses");
  }
  return wilson_interval(hits, trials);
}

RateEstimate mismatch_rate(
    const std::vector<protocol::SessionTranscript>& transcripts, int r) {
  if (r < 1) throw std::invalid_argument("repetition factor must be >= 1");
  const auto ur = static_cast<std::size_t>(r);
  if (transcripts.empty() || transcripts.size() % ur != 0) {
    throw std::invalid_argument(
        "transcript count must be a positive multiple of r");
  }
  const std::size_t groups = transcripts.size() / ur;
  std::uint64_t mismatched = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const auto& first = transcripts[g * ur];
    for (std::size_t c = 0; c < ur; ++c) {
      const auto& copy = transcripts[g * ur + c];
      if (copy.aborted || copy.bob_outcome != first.bob_outcome) {
        ++mismatched;
        break;
      }
    }
  }
  return wilson_interval(mismatched, groups);
}

double mutual_information_bits(const std::vector<int>& xs,
                               const std::vector<int>& ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("sample vectors differ in length");
  }
  if (xs.empty()) throw std::invalid_argument("no samples");

  constexpr std::size_t kMaxAlphabet = 64;
  std::map<int, std::size_t> x_index;
  std::map<int, std::size_t> y_index;
  for (const int x : xs) x_index.emplace(x, x_index.size());
  for (const int y : ys) y_index.emplace(y, y_index.size());
  if (x_index.size() > kMaxAlphabet || y_index.size() > kMaxAlphabet) {
    throw std::invalid_argument("alphabet exceeds 64 symbols");
  }

  const std::size_t kx = x_index.size();
  const std::size_t ky = y_index.size();
  std::vector<double> joint(kx * ky, 0.0);
  std::vector<double> px(kx, 0.0);
  std::vector<double> py(ky, 0.0);
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t xi = x_index[xs[i]];
    const std::size_t yi = y_index[ys[i]];
    joint[xi * ky + yi] += inv_n;
    px[xi] += inv_n;
    py[yi] += inv_n;
  }

  double mi = 0.0;
  std::size_t joint_support = 0;
  for (std::size_t xi = 0; xi < kx; ++xi) {
    for (std::size_t yi = 0; yi < ky; ++yi) {
      const double pxy = joint[xi * ky + yi];
      if (pxy <= 0.0) continue;
      ++joint_support;
      mi += pxy * std::log2(pxy / (px[xi] * py[yi]));
    }
  }

  // Miller-Madow over observed supports: the plug-in entropies that make
  // up MI each get +(K-1)/(2N ln 2), which nets out as below
  const double n = static_cast<double>(xs.size());
  const double correction =
      (static_cast<double>(kx) + static_cast<double>(ky) -
       static_cast<double>(joint_support) - 1.0) /
      (2.0 * n * std::numbers::ln2);
  return std::max(0.0, mi + correction);
}

std::pair<std::vector<int>, std::vector<int>> eve_symbol_samples(
    const std::vector<protocol::SessionTranscript>& transcripts) {
  std::vector<int> symbols;
  std::vector<int> bits;
  symbols.reserve(transcripts.size());
  bits.reserve(transcripts.size());
  for (const auto& t : transcripts) {
    if (t.aborted) continue;
    int symbol = 0;
    int width = 0;
    for (const auto& rec : t.eve.records) {
      if (!rec.outcome.has_value()) continue;
      if (width >= 6) break;
      symbol |= (*rec.outcome & 1) << width;
      ++width;
    }
    symbols.push_back(symbol);
    bits.push_back(t.bit);
  }
  return {std::move(symbols), std::move(bits)};
}

}  // namespace qpadlock::analysis
