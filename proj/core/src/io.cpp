#include "efl/hypercore.hpp"

#include <json.hpp>

namespace efl {

std::string coloring_to_json(const EdgeColoring& col) {
  nlohmann::json j;
  j["palette_size"] = col.palette_size;
  j["colors"] = col.color;
  return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  EdgeColoring col;
  col.palette_size = j.at("palette_size").get<int>();
  col.color = j.at("colors").get<std::vector<Color>>();
  return col;
}

}  // namespace efl
