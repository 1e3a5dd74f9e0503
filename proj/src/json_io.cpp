#include "arbor/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace arbor {

namespace {

std::vector<std::string> split_pair_key(const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos)
    throw StructuralError("corner key '" + key + "' is not of the form A|B");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

}  // namespace

PocsetFile load_pocset_json(const Json& j) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw StructuralError("pocset file needs an \"elements\" array");

  std::vector<std::string> bases = j["elements"].get<std::vector<std::string>>();
  for (auto& b : bases)
    if (!b.empty() && b.back() == '*')
      throw StructuralError("element list must contain base names only, got '" + b + "'");

  // Parts determine canonical base order: (part name, base name).
  std::map<std::string, std::string> part_by_base;
  std::vector<std::string> part_names;
  if (j.contains("parts")) {
    for (auto it = j["parts"].begin(); it != j["parts"].end(); ++it) {
      part_names.push_back(it.key());
      for (const auto& tok : it.value()) {
        std::string b = tok.get<std::string>();
        if (!b.empty() && b.back() == '*') b.pop_back();
        if (part_by_base.count(b))
          throw StructuralError("element " + b + " assigned to two parts");
        part_by_base[b] = it.key();
      }
    }
    std::sort(part_names.begin(), part_names.end());
    for (const auto& b : bases)
      if (!part_by_base.count(b))
        throw StructuralError("element " + b + " missing from parts");
  } else {
    part_names = {"all"};
    for (const auto& b : bases) part_by_base[b] = "all";
  }

  std::sort(bases.begin(), bases.end(), [&](const std::string& x, const std::string& y) {
    if (part_by_base[x] != part_by_base[y]) return part_by_base[x] < part_by_base[y];
    return x < y;
  });

  ElementTable elems(bases);
  const std::int32_t npairs = elems.pair_count();

  std::vector<std::int32_t> part_of_pair(npairs);
  for (std::int32_t q = 0; q < npairs; ++q) {
    const auto& pname = part_by_base[elems.base_name(q)];
    part_of_pair[q] = static_cast<std::int32_t>(
        std::find(part_names.begin(), part_names.end(), pname) - part_names.begin());
  }

  ActionFragment action;
  if (j.contains("action")) {
    for (auto it = j["action"].begin(); it != j["action"].end(); ++it) {
      std::vector<ElemId> m(elems.size(), -1);
      for (auto e = it.value().begin(); e != it.value().end(); ++e) {
        ElemId src = elems.parse(e.key());
        ElemId dst = elems.parse(e.value().get<std::string>());
        m[src] = dst;
        m[star(src)] = star(dst);
      }
      action.maps[it.key()] = std::move(m);
    }
  }

  PocsetFile out;

  if (j.contains("corners")) {
    const std::size_t ncells = std::size_t(npairs) * (npairs - 1) / 2;
    std::vector<std::array<CornerStatus, 4>> cells(
        ncells, {CornerStatus::Large, CornerStatus::Large, CornerStatus::Large,
                 CornerStatus::Large});
    std::vector<bool> seen(ncells, false);
    for (auto it = j["corners"].begin(); it != j["corners"].end(); ++it) {
      auto names = split_pair_key(it.key());
      ElemId a = elems.parse(names[0]), b = elems.parse(names[1]);
      if (!is_plus(a) || !is_plus(b))
        throw StructuralError("corner keys must use unstarred names: " + it.key());
      if (pair_of(a) == pair_of(b))
        throw StructuralError("degenerate corner key: " + it.key());
      if (it.value().size() != 4)
        throw StructuralError("corner " + it.key() + " needs 4 statuses");
      std::array<CornerStatus, 4> cell;
      for (int i = 0; i < 4; ++i) {
        auto s = corner_status_from_string(it.value()[i].get<std::string>());
        if (!s) throw StructuralError("bad corner status in " + it.key());
        cell[i] = *s;
      }
      std::int32_t p = pair_of(a), q = pair_of(b);
      if (p > q) {
        std::swap(p, q);
        cell = {cell[0], cell[2], cell[1], cell[3]};  // transpose
      }
      std::size_t s = CornerTable::slot(p, q, npairs);
      if (seen[s] && cells[s] != cell)
        throw StructuralError("conflicting corner entries for " + it.key());
      seen[s] = true;
      cells[s] = cell;
    }
    CornerTable table(elems, std::move(cells));
    out.pocset = derive_order_from_corners(table, part_names, part_of_pair, action);
    if (j.contains("relations")) {
      for (const auto& rel : j["relations"]) {
        ElemId a = elems.parse(rel[0].get<std::string>());
        ElemId b = elems.parse(rel[1].get<std::string>());
        if (!out.pocset.leq.get(a, b))
          throw StructuralError("declared relation " + elems.name(a) + " <= " +
                                elems.name(b) + " not implied by corners");
      }
    }
  } else {
    Pocset p;
    p.elements = elems;
    p.part_names = part_names;
    p.part_of_pair = part_of_pair;
    p.action = action;
    p.leq = Relation(elems.size());
    for (ElemId e = 0; e < elems.size(); ++e) p.leq.set(e, e);
    if (j.contains("relations")) {
      for (const auto& rel : j["relations"]) {
        ElemId a = elems.parse(rel[0].get<std::string>());
        ElemId b = elems.parse(rel[1].get<std::string>());
        p.leq.set(a, b);
        p.leq.set(star(b), star(a));
      }
    }
    p.leq.transitive_close();
    p.incl = p.leq;
    out.pocset = std::move(p);
  }

  if (j.contains("membership")) {
    for (auto it = j["membership"].begin(); it != j["membership"].end(); ++it)
      out.membership[it.key()] = it.value().get<bool>();
  }
  if (j.contains("ball")) {
    for (const auto& w : j["ball"]) {
      std::vector<std::string> word;
      if (w.is_string()) {
        // space-separated generator names, '-' suffix for inverses
        std::string s = w.get<std::string>(), cur;
        for (char c : s + " ") {
          if (c == ' ') {
            if (!cur.empty()) word.push_back(cur);
            cur.clear();
          } else {
            cur += c;
          }
        }
      } else {
        word = w.get<std::vector<std::string>>();
      }
      out.ball.push_back(word);
    }
  }
  return out;
}

PocsetFile load_pocset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path);
  Json j;
  in >> j;
  return load_pocset_json(j);
}

Json pocset_to_json(const Pocset& p) {
  Json j;
  std::vector<std::string> bases;
  for (std::int32_t q = 0; q < p.elements.pair_count(); ++q)
    bases.push_back(p.elements.base_name(q));
  j["elements"] = bases;

  Json parts = Json::object();
  for (std::size_t k = 0; k < p.part_names.size(); ++k) {
    std::vector<std::string> members;
    for (std::int32_t q = 0; q < p.elements.pair_count(); ++q)
      if (p.part_of_pair[q] == static_cast<std::int32_t>(k))
        members.push_back(p.elements.base_name(q));
    parts[p.part_names[k]] = members;
  }
  j["parts"] = parts;

  Json rels = Json::array();
  for (ElemId a = 0; a < p.size(); ++a)
    for (ElemId b = 0; b < p.size(); ++b)
      if (a != b && p.leq.get(a, b)) rels.push_back({p.name(a), p.name(b)});
  j["relations"] = rels;

  if (p.corners) {
    Json corners = Json::object();
    const std::int32_t n = p.elements.pair_count();
    for (std::int32_t q = 0; q < n; ++q)
      for (std::int32_t r = q + 1; r < n; ++r) {
        auto cs = p.corners->corners(plus_of_pair(q), plus_of_pair(r));
        corners[p.elements.base_name(q) + "|" + p.elements.base_name(r)] = {
            to_string(cs[0]), to_string(cs[1]), to_string(cs[2]), to_string(cs[3])};
      }
    j["corners"] = corners;
  }

  if (!p.action.empty()) {
    Json action = Json::object();
    for (const auto& [gen, m] : p.action.maps) {
      Json gm = Json::object();
      for (ElemId e = 0; e < p.size(); e += 2)
        if (m[e] >= 0) gm[p.name(e)] = p.name(m[e]);
      action[gen] = gm;
    }
    j["action"] = action;
  }
  return j;
}

Json report_to_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  Json vs = Json::array();
  for (const auto& v : rep.violations) {
    Json e;
    e["axiom"] = v.axiom;
    e["witness"] = v.witness;
    if (!v.detail.empty()) e["detail"] = v.detail;
    vs.push_back(e);
  }
  j["violations"] = vs;
  return j;
}

}  // namespace arbor
