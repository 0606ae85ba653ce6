#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fibtab/error.hpp"
#include "fibtab/tableau.hpp"

// Tableau serialisation:
//   {"k":K,"columns":[{"single":{"h":H,"label":L}}
//                     |{"double":{"top_h":H,"top":L1,"bottom":L2}}]}
// leftmost column first.  Parsing validates every tableau invariant.

namespace fibtab {

inline nlohmann::json tableau_to_json(const tableau& t) {
  nlohmann::json cols = nlohmann::json::array();
  for (const column& c : t.cols) {
    if (c.is_double())
      cols.push_back({{"double",
                       {{"top_h", c.top_height()}, {"top", c.top_label()}, {"bottom", c.bottom_label()}}}});
    else
      cols.push_back({{"single", {{"h", c.single_height()}, {"label", c.bottom_label()}}}});
  }
  return {{"k", t.k}, {"columns", cols}};
}

inline tableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("columns"))
    throw error("tableau_from_json: expected an object with \"k\" and \"columns\"");
  if (!j["k"].is_number_integer()) throw error("tableau_from_json: \"k\" must be an integer");
  tableau t(j["k"].get<int>());
  if (!j["columns"].is_array()) throw error("tableau_from_json: \"columns\" must be an array");
  int idx = 0;
  for (const auto& cj : j["columns"]) {
    ++idx;
    if (cj.is_object() && cj.contains("single")) {
      const auto& s = cj["single"];
      if (!s.contains("h") || !s.contains("label"))
        throw error("tableau_from_json: single column needs \"h\" and \"label\"", idx);
      int h = s["h"].get<int>(), label = s["label"].get<int>();
      if (h < 1 || label < 1) throw error("tableau_from_json: bad single column", idx);
      t.cols.push_back(column::single(h, label));
    } else if (cj.is_object() && cj.contains("double")) {
      const auto& d = cj["double"];
      if (!d.contains("top_h") || !d.contains("top") || !d.contains("bottom"))
        throw error("tableau_from_json: double column needs \"top_h\", \"top\", \"bottom\"", idx);
      int h = d["top_h"].get<int>(), top = d["top"].get<int>(), bottom = d["bottom"].get<int>();
      if (h < 1 || top < 1 || bottom < 1) throw error("tableau_from_json: bad double column", idx);
      t.cols.push_back(column::stacked(h, top, bottom));
    } else {
      throw error("tableau_from_json: column must be a \"single\" or \"double\" object", idx);
    }
  }
  validate(t);
  return t;
}

inline std::string dump_tableau(const tableau& t) { return tableau_to_json(t).dump(); }

inline tableau parse_tableau(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("parse_tableau: ") + e.what());
  }
  return tableau_from_json(j);
}

}  // namespace fibtab
