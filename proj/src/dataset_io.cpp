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

#include "amle/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace amle {
namespace {

using Json = nlohmann::ordered_json;

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& ids,
                                            const char* what) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!idx.emplace(ids[k], k).second) {
      throw DatasetError(std::string("duplicate ") + what + " id '" + ids[k] + "'");
    }
  }
  return idx;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw DatasetError(std::string("missing list \"") + key + "\"");
  }
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw DatasetError(std::string("\"") + key + "\" must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

AltSet resolve_alternatives(const Json& list,
                            const std::map<std::string, std::size_t>& alt_idx,
                            const std::string& where) {
  if (!list.is_array()) throw DatasetError(where + ": expected a list of alternatives");
  std::vector<AltIndex> out;
  for (const auto& e : list) {
    if (!e.is_string()) throw DatasetError(where + ": alternative ids must be strings");
    const auto it = alt_idx.find(e.get<std::string>());
    if (it == alt_idx.end()) {
      throw DatasetError(where + ": unknown alternative '" + e.get<std::string>() + "'");
    }
    out.push_back(it->second);
  }
  return make_set(std::move(out));
}

std::vector<std::string> alternative_ids(const Profile& profile) {
  std::vector<std::string> ids;
  for (const auto& a : profile.alternatives) ids.push_back(a.id);
  return ids;
}

Json id_list(const Profile& profile, const AltSet& set) {
  Json out = Json::array();
  for (AltIndex a : set) out.push_back(profile.alternatives.at(a).id);
  return out;
}

GroundTruth set_map_from_json(const Json& j, const Profile& profile) {
  if (!j.is_object()) throw DatasetError("ground truth must map instance ids to lists");
  std::map<std::string, std::size_t> alt_idx;
  for (const auto& a : profile.alternatives) alt_idx.emplace(a.id, a.index);
  std::map<std::string, std::size_t> inst_idx;
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    inst_idx.emplace(profile.instances[z].id, z);
  }
  GroundTruth out(profile.instances.size());
  std::vector<char> seen(profile.instances.size(), 0);
  for (const auto& [id, list] : j.items()) {
    const auto it = inst_idx.find(id);
    if (it == inst_idx.end()) throw DatasetError("ground truth names unknown instance '" + id + "'");
    out[it->second] = resolve_alternatives(list, alt_idx, "ground truth of '" + id + "'");
    seen[it->second] = 1;
  }
  for (std::size_t z = 0; z < seen.size(); ++z) {
    if (!seen[z]) {
      throw DatasetError("ground truth missing for instance '" + profile.instances[z].id + "'");
    }
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError("cannot write '" + path + "'");
  out << content;
  if (!out) throw DatasetError("failed writing '" + path + "'");
}

Dataset parse_dataset_json(std::string_view text, bool strict) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DatasetError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DatasetError("dataset must be a JSON object");

  Dataset ds;
  Profile& profile = ds.profile;
  const auto alt_ids = string_list(j, "alternatives");
  profile.voters = string_list(j, "voters");
  const auto alt_idx = index_of(alt_ids, "alternative");
  const auto voter_idx = index_of(profile.voters, "voter");
  for (std::size_t k = 0; k < alt_ids.size(); ++k) {
    profile.alternatives.push_back({alt_ids[k], k});
  }

  if (!j.contains("instances") || !j["instances"].is_array()) {
    throw DatasetError("missing list \"instances\"");
  }
  for (const auto& ji : j["instances"]) {
    if (!ji.is_object() || !ji.contains("id") || !ji["id"].is_string()) {
      throw DatasetError("every instance needs a string \"id\"");
    }
    Instance inst;
    inst.id = ji["id"].get<std::string>();
    inst.ballots.resize(profile.voters.size());
    std::vector<char> present(profile.voters.size(), 0);
    const Json ballots = ji.value("ballots", Json::object());
    if (!ballots.is_object()) {
      throw DatasetError("instance '" + inst.id + "': \"ballots\" must map voters to lists");
    }
    for (const auto& [voter, list] : ballots.items()) {
      const auto it = voter_idx.find(voter);
      if (it == voter_idx.end()) {
        throw DatasetError("instance '" + inst.id + "': unknown voter '" + voter + "'");
      }
      inst.ballots[it->second].approved = resolve_alternatives(
          list, alt_idx, "instance '" + inst.id + "', voter '" + voter + "'");
      present[it->second] = 1;
    }
    for (std::size_t i = 0; i < present.size(); ++i) {
      if (present[i]) continue;
      const std::string msg = "instance '" + inst.id + "': no ballot for voter '" +
                              profile.voters[i] + "'";
      if (strict) throw DatasetError(msg);
      ds.warnings.push_back(msg + "; treated as an empty ballot");
    }
    profile.instances.push_back(std::move(inst));
  }
  index_of([&] {
    std::vector<std::string> ids;
    for (const auto& inst : profile.instances) ids.push_back(inst.id);
    return ids;
  }(), "instance");

  if (j.contains("ground_truth") && !j["ground_truth"].is_null()) {
    ds.ground_truth = set_map_from_json(j["ground_truth"], profile);
  }
  return ds;
}

std::string dataset_to_json(const Dataset& ds) {
  const Profile& profile = ds.profile;
  Json j;
  j["alternatives"] = alternative_ids(profile);
  j["voters"] = profile.voters;
  Json insts = Json::array();
  for (const auto& inst : profile.instances) {
    Json ballots = Json::object();
    for (std::size_t i = 0; i < inst.ballots.size(); ++i) {
      ballots[profile.voters.at(i)] = id_list(profile, inst.ballots[i].approved);
    }
    insts.push_back(Json{{"id", inst.id}, {"ballots", ballots}});
  }
  j["instances"] = insts;
  if (ds.ground_truth) {
    Json gt = Json::object();
    for (std::size_t z = 0; z < profile.instances.size(); ++z) {
      gt[profile.instances[z].id] = id_list(profile, ds.ground_truth->at(z));
    }
    j["ground_truth"] = gt;
  }
  return j.dump(2) + "\n";
}

GroundTruth parse_set_map(std::string_view json_object_text, const Profile& profile) {
  try {
    return set_map_from_json(Json::parse(json_object_text), profile);
  } catch (const Json::parse_error& e) {
    throw DatasetError(std::string("malformed JSON: ") + e.what());
  }
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < text.size() && text[k + 1] == '"') {
          field += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && k + 1 < text.size() && text[k + 1] == '\n') ++k;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw DatasetError("unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

Dataset parse_dataset_csv(std::string_view text, bool strict) {
  const auto rows = parse_csv(text);
  if (rows.empty()) throw DatasetError("empty CSV dataset");
  const std::vector<std::string> header = {"instance_id", "voter_id", "alternative_id",
                                           "approved"};
  if (rows[0] != header) {
    throw DatasetError("CSV header must be instance_id,voter_id,alternative_id,approved");
  }

  std::vector<std::string> inst_ids, voter_ids, alt_ids;
  std::map<std::string, std::size_t> inst_idx, voter_idx, alt_idx;
  auto intern = [](std::map<std::string, std::size_t>& idx,
                   std::vector<std::string>& ids, const std::string& id) {
    auto [it, inserted] = idx.emplace(id, ids.size());
    if (inserted) ids.push_back(id);
    return it->second;
  };
  struct Cell {
    std::size_t z, voter, alt;
    bool truth, approved;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string where = "CSV row " + std::to_string(r + 1);
    if (row.size() != 4) throw DatasetError(where + ": expected 4 fields");
    if (row[3] != "0" && row[3] != "1") throw DatasetError(where + ": approved must be 0 or 1");
    if (row[0].empty() || row[2].empty()) {
      throw DatasetError(where + ": instance and alternative ids must be non-empty");
    }
    Cell c{};
    c.z = intern(inst_idx, inst_ids, row[0]);
    c.alt = intern(alt_idx, alt_ids, row[2]);
    c.truth = row[1].empty();
    if (!c.truth) c.voter = intern(voter_idx, voter_ids, row[1]);
    c.approved = row[3] == "1";
    cells.push_back(c);
  }

  Dataset ds;
  Profile& profile = ds.profile;
  for (std::size_t k = 0; k < alt_ids.size(); ++k) profile.alternatives.push_back({alt_ids[k], k});
  profile.voters = voter_ids;
  profile.instances.resize(inst_ids.size());
  std::vector<std::vector<char>> present(inst_ids.size(),
                                         std::vector<char>(voter_ids.size(), 0));
  std::vector<char> has_truth(inst_ids.size(), 0);
  GroundTruth truth(inst_ids.size());
  for (std::size_t z = 0; z < inst_ids.size(); ++z) {
    profile.instances[z].id = inst_ids[z];
    profile.instances[z].ballots.resize(voter_ids.size());
  }
  for (const auto& c : cells) {
    if (c.truth) {
      has_truth[c.z] = 1;
      if (c.approved) truth[c.z].push_back(c.alt);
      continue;
    }
    present[c.z][c.voter] = 1;
    if (c.approved) profile.instances[c.z].ballots[c.voter].approved.push_back(c.alt);
  }
  for (std::size_t z = 0; z < inst_ids.size(); ++z) {
    for (auto& b : profile.instances[z].ballots) b.approved = make_set(std::move(b.approved));
    truth[z] = make_set(std::move(truth[z]));
    for (std::size_t i = 0; i < voter_ids.size(); ++i) {
      if (present[z][i]) continue;
      const std::string msg =
          "instance '" + inst_ids[z] + "': no rows for voter '" + voter_ids[i] + "'";
      if (strict) throw DatasetError(msg);
      ds.warnings.push_back(msg + "; treated as an empty ballot");
    }
  }
  const auto truth_count = std::count(has_truth.begin(), has_truth.end(), 1);
  if (truth_count > 0) {
    if (static_cast<std::size_t>(truth_count) != inst_ids.size()) {
      throw DatasetError("ground truth rows must cover every instance or none");
    }
    ds.ground_truth = std::move(truth);
  }
  return ds;
}

std::string dataset_to_csv(const Dataset& ds) {
  const Profile& profile = ds.profile;
  const std::size_t m = profile.num_alternatives();
  std::string out = "instance_id,voter_id,alternative_id,approved\n";
  for (std::size_t z = 0; z < profile.instances.size(); ++z) {
    const auto& inst = profile.instances[z];
    const std::string iid = csv_escape(inst.id);
    for (std::size_t i = 0; i < inst.ballots.size(); ++i) {
      const auto mask = membership_mask(inst.ballots[i].approved, m);
      const std::string vid = csv_escape(profile.voters.at(i));
      for (std::size_t a = 0; a < m; ++a) {
        out += iid + "," + vid + "," + csv_escape(profile.alternatives[a].id) + "," +
               (mask[a] ? "1" : "0") + "\n";
      }
    }
    if (ds.ground_truth) {
      const auto mask = membership_mask(ds.ground_truth->at(z), m);
      for (std::size_t a = 0; a < m; ++a) {
        out += iid + ",," + csv_escape(profile.alternatives[a].id) + "," +
               (mask[a] ? "1" : "0") + "\n";
      }
    }
  }
  return out;
}

DatasetFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == "csv") return DatasetFormat::kCsv;
  }
  return DatasetFormat::kJson;
}

Dataset read_dataset(const std::string& path, bool strict) {
  const std::string text = read_file(path);
  return format_for_path(path) == DatasetFormat::kCsv ? parse_dataset_csv(text, strict)
                                                      : parse_dataset_json(text, strict);
}

void write_dataset(const std::string& path, const Dataset& dataset) {
  write_file(path, format_for_path(path) == DatasetFormat::kCsv ? dataset_to_csv(dataset)
                                                                : dataset_to_json(dataset));
}

}  // namespace amle
