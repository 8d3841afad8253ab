// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readk/family_io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "readk/errors.h"

namespace readk {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw ValidationError(where + ": missing \"" + key + "\"");
  return *it;
}

Variable parse_variable(const json& item, std::size_t index) {
  const std::string where = "variables[" + std::to_string(index) + "]";
  if (!item.is_object()) throw ValidationError(where + ": expected an object");
  Variable v;
  v.name = item.contains("name") ? item.at("name").get<std::string>() : "x" + std::to_string(index + 1);
  const json& support = require(item, "support", where);
  if (!support.is_number_integer()) throw ValidationError(where + ": \"support\" must be an integer");
  v.support = support.get<int>();
  if (auto it = item.find("probs"); it != item.end()) {
    if (!it->is_array()) throw ValidationError(where + ": \"probs\" must be an array");
    for (const auto& p : *it) {
      if (!p.is_number()) throw ValidationError(where + ": \"probs\" entries must be numbers");
      v.probs.push_back(p.get<double>());
    }
  }
  return v;
}

ReadFunction parse_function(const json& item, std::size_t index) {
  const std::string where = "functions[" + std::to_string(index) + "]";
  if (!item.is_object()) throw ValidationError(where + ": expected an object");
  ReadFunction f;
  f.name = item.contains("name") ? item.at("name").get<std::string>() : "y" + std::to_string(index + 1);
  const json& vars = require(item, "vars", where);
  if (!vars.is_array()) throw ValidationError(where + ": \"vars\" must be an array");
  for (const auto& v : vars) {
    if (!v.is_number_unsigned()) {
      throw ValidationError(where + ": \"vars\" entries must be non-negative integers");
    }
    f.vars.push_back(v.get<std::size_t>());
  }
  const json& table = require(item, "truth_table", where);
  if (!table.is_string()) throw ValidationError(where + ": \"truth_table\" must be a string");
  for (char c : table.get_ref<const std::string&>()) {
    if (c != '0' && c != '1') {
      throw ValidationError(where + ": \"truth_table\" may only contain '0' and '1'");
    }
    f.table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return f;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("family file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("family file: top level must be an object");
  try {
    const json& vars = require(doc, "variables", "family file");
    const json& funcs = require(doc, "functions", "family file");
    if (!vars.is_array() || !funcs.is_array()) {
      throw ValidationError("family file: \"variables\" and \"functions\" must be arrays");
    }
    std::vector<Variable> variables;
    for (std::size_t i = 0; i < vars.size(); ++i) variables.push_back(parse_variable(vars[i], i));
    std::vector<ReadFunction> functions;
    for (std::size_t j = 0; j < funcs.size(); ++j) functions.push_back(parse_function(funcs[j], j));
    return FamilySpec(std::move(variables), std::move(functions));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("family file: ") + e.what());
  }
}

FamilySpec load_family(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open family file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

std::string dump_family(const FamilySpec& spec) {
  ordered_json doc;
  ordered_json vars = ordered_json::array();
  for (const auto& v : spec.variables()) {
    ordered_json item;
    item["name"] = v.name;
    item["support"] = v.support;
    if (v.has_explicit_probs()) item["probs"] = v.probs;
    vars.push_back(std::move(item));
  }
  ordered_json funcs = ordered_json::array();
  for (const auto& f : spec.functions()) {
    ordered_json item;
    item["name"] = f.name;
    item["vars"] = f.vars;
    std::string table(f.table.size(), '0');
    for (std::size_t i = 0; i < f.table.size(); ++i) table[i] = static_cast<char>('0' + f.table[i]);
    item["truth_table"] = std::move(table);
    funcs.push_back(std::move(item));
  }
  doc["variables"] = std::move(vars);
  doc["functions"] = std::move(funcs);
  return doc.dump(2) + "\n";
}

void save_family(const FamilySpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write family file " + path.string());
  out << dump_family(spec);
}

}  // namespace readk
