// Copyright 2026 The AMLE Authors
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

#ifndef AMLE_DATASET_IO_HPP_
#define AMLE_DATASET_IO_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "amle/model.hpp"

namespace amle {

// Malformed or inconsistent dataset content.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  Profile profile;
  std::optional<GroundTruth> ground_truth;
  // Non-fatal issues found while reading (e.g. omitted ballots).
  std::vector<std::string> warnings;

  bool operator==(const Dataset& o) const {
    return profile == o.profile && ground_truth == o.ground_truth;
  }
};

enum class DatasetFormat { kJson, kCsv };

// Structured document:
//   {"alternatives": [...], "voters": [...],
//    "instances": [{"id": ..., "ballots": {voter: [alternative, ...]}}],
//    "ground_truth": {instance: [alternative, ...]}}   (optional)
// A voter missing from an instance's ballots is an empty ballot (with a
// warning), or an error when strict.
Dataset parse_dataset_json(std::string_view text, bool strict = false);
std::string dataset_to_json(const Dataset& dataset);

// Long-form table with header instance_id,voter_id,alternative_id,approved
// and one row per (instance, voter, alternative). Ground truth membership
// is stored in rows whose voter_id is empty. Ids, voters and instances keep
// first-appearance order.
Dataset parse_dataset_csv(std::string_view text, bool strict = false);
std::string dataset_to_csv(const Dataset& dataset);

// Chooses the format from the extension (.csv → long-form, else JSON).
DatasetFormat format_for_path(const std::string& path);
Dataset read_dataset(const std::string& path, bool strict = false);
void write_dataset(const std::string& path, const Dataset& dataset);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Maps {"instance-id": ["alt-id", ...]} onto the profile's instance order.
// Every instance must be present.
GroundTruth parse_set_map(std::string_view json_object_text, const Profile& profile);

// Minimal RFC 4180 helpers shared with the benchmark table.
std::string csv_escape(std::string_view field);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace amle

#endif  // AMLE_DATASET_IO_HPP_
