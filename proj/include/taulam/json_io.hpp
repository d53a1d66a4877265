// JSON readers and writers for quivers, triangulations, seeds and laminations.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "taulam/mutation.hpp"
#include "taulam/quiver.hpp"
#include "taulam/surface.hpp"

namespace taulam {

using Json = nlohmann::json;

// line and column are 1-based; 0 when the error has no text position.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& msg, int line = 0, int column = 0);
  int line;
  int column;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// A quiver file: the base quiver and, if a "fringe" block is present, the
// fringing obtained by adding its vertices and arrows.
struct QuiverFile {
  PolarizedQuiver base;
  std::optional<Fringing> fringing;
};
QuiverFile quiver_from_json(const Json& j);
Json quiver_to_json(const PolarizedQuiver& q);
Json fringing_to_json(const Fringing& f);

Triangulation triangulation_from_json(const Json& j);

Seed seed_from_json(const Json& j);
Json seed_to_json(const Seed& s);

// {"classes": {"<decorated word>": multiplicity, ...}}
std::map<std::string, int> lamination_from_json(const Json& j);

}  // namespace taulam
