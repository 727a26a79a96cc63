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

#include "qpadlock/harness/transcript_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qpadlock::harness {

namespace {

using Json = nlohmann::ordered_json;

Json event_to_json(const protocol::PassEvent& event) {
  Json j;
  j["pass_index"] = event.pass_index;
  j["direction"] = protocol::direction_name(event.direction);
  j["adversary_action_tag"] = event.adversary_action_tag;
  j["timestamp_index"] = event.timestamp_index;
  return j;
}

Json record_to_json(const protocol::EveActionRecord& record) {
  Json j;
  j["pass_index"] = record.pass_index;
  j["action"] = record.action;
  // Optional fields appear only when set, so the line stays an honest
  // record of what the adversary actually learned.
  if (record.outcome) j["outcome"] = *record.outcome;
  if (record.basis_angle) j["basis_angle"] = *record.basis_angle;
  if (record.stored_handle) j["stored_handle"] = *record.stored_handle;
  return j;
}

protocol::PassEvent event_from_json(const Json& j) {
  protocol::PassEvent event;
  event.pass_index = j.at("pass_index").get<int>();
  event.direction = protocol::parse_direction(j.at("direction").get<std::string>());
  event.adversary_action_tag = j.at("adversary_action_tag").get<std::string>();
  event.timestamp_index = j.at("timestamp_index").get<int>();
  return event;
}

protocol::EveActionRecord record_from_json(const Json& j) {
  protocol::EveActionRecord record;
  record.pass_index = j.at("pass_index").get<int>();
  record.action = j.at("action").get<std::string>();
  if (j.contains("outcome")) record.outcome = j.at("outcome").get<int>();
  if (j.contains("basis_angle")) {
    record.basis_angle = j.at("basis_angle").get<double>();
  }
  if (j.contains("stored_handle")) {
    record.stored_handle = j.at("stored_handle").get<int>();
  }
  return record;
}

}  // namespace

std::string to_jsonl_line(const protocol::SessionTranscript& transcript) {
  Json j;
  j["session_id"] = transcript.session_id;
  j["n"] = transcript.n;
  j["r"] = transcript.repetition_factor;
  j["bit"] = transcript.bit;
  j["events"] = Json::array();
  for (const auto& event : transcript.events) {
    j["events"].push_back(event_to_json(event));
  }
  j["bob_outcome"] = transcript.bob_outcome;
  j["aborted"] = transcript.aborted;
  j["abort_reason"] = transcript.abort_reason;
  j["master_seed"] = transcript.master_seed;
  j["session_index"] = transcript.session_index;
  Json eve;
  eve["records"] = Json::array();
  for (const auto& record : transcript.eve.records) {
    eve["records"].push_back(record_to_json(record));
  }
  eve["guess"] = transcript.eve.guess;
  eve["confidence"] = transcript.eve.confidence;
  j["eve"] = std::move(eve);
  return j.dump();
}

protocol::SessionTranscript from_jsonl_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad transcript line: ") + e.what());
  }
  try {
    protocol::SessionTranscript t;
    t.session_id = j.at("session_id").get<std::uint64_t>();
    t.n = j.at("n").get<int>();
    t.repetition_factor = j.at("r").get<int>();
    t.bit = j.at("bit").get<int>();
    for (const auto& event : j.at("events")) {
      t.events.push_back(event_from_json(event));
    }
    t.bob_outcome = j.at("bob_outcome").get<int>();
    t.aborted = j.at("aborted").get<bool>();
    t.abort_reason = j.at("abort_reason").get<std::string>();
    t.master_seed = j.at("master_seed").get<std::uint64_t>();
    t.session_index = j.at("session_index").get<std::uint64_t>();
    const auto& eve = j.at("eve");
    for (const auto& record : eve.at("records")) {
      t.eve.records.push_back(record_from_json(record));
    }
    t.eve.guess = eve.at("guess").get<int>();
    t.eve.confidence = eve.at("confidence").get<double>();
    return t;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad transcript line: ") + e.what());
  }
}

void write_transcripts(
    const std::string& path,
    const std::vector<protocol::SessionTranscript>& transcripts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& transcript : transcripts) {
    out << to_jsonl_line(transcript) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<protocol::SessionTranscript> read_transcripts(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<protocol::SessionTranscript> transcripts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    transcripts.push_back(from_jsonl_line(line));
  }
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return transcripts;
}

}  // namespace qpadlock::harness
