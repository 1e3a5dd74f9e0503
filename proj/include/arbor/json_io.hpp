#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "arbor/pocset.hpp"

namespace arbor {

using Json = nlohmann::json;

// Pocset file schema:
// {
//   "elements": ["A","B"],               // base names, star partners implied
//   "corners": {"A|B": ["large","empty","large","large"]},   // optional
//   "relations": [["A","B"]],            // optional, tokens may be starred
//   "parts": {"X1": ["A"], "X2": ["B"]}, // optional
//   "action": {"g": {"A": "B"}},         // optional, partial, plus keys
//   "membership": {"A": true}            // optional identity-side oracle
// }
// Corner entries follow the fixed order (AnB, AnB*, A*nB, A*nB*). When both
// corners and relations are present the corners win and relations are
// checked against the derived order.
struct PocsetFile {
  Pocset pocset;
  std::map<std::string, bool> membership;       // by base name, may be empty
  std::vector<std::vector<std::string>> ball;   // generator words, may be empty
};

PocsetFile load_pocset_json(const Json& j);
PocsetFile load_pocset_file(const std::string& path);

Json pocset_to_json(const Pocset& p);
Json report_to_json(const ValidationReport& rep);

}  // namespace arbor
