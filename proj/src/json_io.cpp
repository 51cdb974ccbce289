#include "kptrop/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kptrop {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
  if (!j.is_string() && !j.is_number_integer())
    throw std::invalid_argument(where + ": rationals must be \"num/den\" or integer strings");
  if (j.is_number_integer()) return Rational(j.get<long long>());
  auto q = parse_rational(j.get<std::string>());
  if (!q || j.get<std::string>().find('.') != std::string::npos)
    throw std::invalid_argument(where + ": bad rational '" + j.get<std::string>() + "'");
  return *q;
}

std::vector<Rational> rational_list(const json& j, const std::string& where) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_field(e, where));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SolitonConfig parse_config(const json& j) {
  int M = j.at("M").get<int>();
  auto p = rational_list(j.at("p"), "p");
  auto c = rational_list(j.at("c"), "c");
  std::map<int, Rational> times;
  if (j.contains("times")) {
    for (const auto& [key, val] : j.at("times").items()) {
      if (key.size() < 2 || key[0] != 't')
        throw std::invalid_argument("times keys look like \"t4\", \"t5\", ...");
      times[std::stoi(key.substr(1))] = rational_field(val, "times." + key);
    }
  }
  int horizon = j.contains("horizon") ? j.at("horizon").get<int>() : 0;
  auto v = validate_config(M, std::move(p), std::move(c), std::move(times), horizon);
  if (!v.ok) {
    std::string msg = "invalid config:";
    for (const auto& e : v.errors) msg += "\n  - " + e;
    throw std::invalid_argument(msg);
  }
  return v.config;
}

}  // namespace

SolitonConfig config_from_json(const std::string& text) {
  return parse_config(json::parse(text));
}

SolitonConfig config_from_file(const std::string& path) {
  return config_from_json(slurp(path));
}

WedgeInput wedge_from_json(const std::string& text) {
  json j = json::parse(text);
  WedgeInput in;
  in.config = parse_config(j);
  for (const auto& factor : j.at("factors")) {
    std::map<int, Rational> entries;
    for (const auto& term : factor) {
      int idx = term.at("index").get<int>();
      Rational sign = term.contains("sign") ? rational_field(term.at("sign"), "sign")
                                            : Rational(1);
      entries[idx] = sign;
    }
    in.spec.factors.push_back(std::move(entries));
  }
  return in;
}

WedgeInput wedge_from_file(const std::string& path) { return wedge_from_json(slurp(path)); }

namespace {

json tree_to_json(const SolitonTree& tree) {
  json t;
  t["code"] = seq_str(tree.code);
  t["level_code"] = seq_str(tree.level_code);
  json triples = json::array();
  for (std::size_t n = 0; n < tree.triples.size(); ++n) {
    json node;
    node["triple"] = IndexSet{tree.triples[n][0], tree.triples[n][1], tree.triples[n][2]}.str();
    node["y"] = to_string(tree.y_values[n]);
    triples.push_back(node);
  }
  t["nodes"] = triples;
  return t;
}

}  // namespace

std::string chain_to_json(const EvolutionChain& chain) {
  json j;
  j["initial"] = tree_to_json(chain.initial);
  j["degenerate"] = chain.degenerate;
  if (chain.table_type) j["type"] = *chain.table_type;
  json events = json::array();
  for (const auto& ev : chain.events) {
    json e;
    e["t"] = to_string(ev.time);
    json rots = json::array();
    for (const auto& r : ev.rotations) rots.push_back(r.str());
    e["rotations"] = rots;
    e["after"] = tree_to_json(ev.after);
    events.push_back(e);
  }
  j["events"] = events;
  if (!chain.notes.empty()) j["notes"] = chain.notes;
  return j.dump(2);
}

std::string refined_to_json(const RefinedChain& refined) {
  json j;
  j["initial_level_code"] = seq_str(refined.initial_level_code);
  json steps = json::array();
  for (const auto& step : refined.steps) {
    json s;
    s["t"] = to_string(step.time);
    if (step.kind == RefinedStep::Kind::Rotation) {
      s["kind"] = "rotation";
      json rots = json::array();
      for (const auto& r : step.rotations) rots.push_back(r.str());
      s["rotations"] = rots;
    } else {
      s["kind"] = "level-exchange";
      s["swap"] = {IndexSet{step.swap_upper[0], step.swap_upper[1], step.swap_upper[2]}.str(),
                   IndexSet{step.swap_lower[0], step.swap_lower[1], step.swap_lower[2]}.str()};
    }
    s["level_code_after"] = seq_str(step.level_code_after);
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j.dump(2);
}

std::string level_report_to_json(const LevelReport& report) {
  json j;
  json vis = json::array();
  for (const auto& cv : report.visible) {
    json v;
    v["indices"] = cv.indices.str();
    v["value"] = to_string(cv.value);
    vis.push_back(v);
  }
  j["visible"] = vis;
  j["degenerate"] = report.degenerate;
  json rel = json::array();
  for (const auto& [a, b] : report.order_relations) rel.push_back(a.str() + "<" + b.str());
  j["order_relations"] = rel;
  return j.dump(2);
}

}  // namespace kptrop
