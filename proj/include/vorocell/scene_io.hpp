#ifndef VOROCELL_SCENE_IO_HPP
#define VOROCELL_SCENE_IO_HPP

#include <string>

#include <json.hpp>

#include "vorocell/sites.hpp"

namespace vorocell {

// Scene file rejection with the position (1-based line/column for syntax
// errors; 0/0 plus a key path for semantic ones).
struct SceneParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  SceneParseError(const std::string& msg, int line_ = 0, int column_ = 0)
      : std::runtime_error(msg), line(line_), column(column_) {}
};

// Scene files are JSON documents with keys
//   norm:   {p: number or "inf"}
//   domain: {min: [..], max: [..]}
//   sites:  [{type: "points", points: [[..],..]} |
//            {type: "segments", segments: [[[..],[..]],..]} |
//            {type: "sequence_example", role: "P"|"A"}]
// Unknown keys are rejected. Line comments (//) are permitted.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

nlohmann::json scene_to_json(const Scene& scene);
std::string write_scene(const Scene& scene);  // pretty JSON, deterministic

// FNV-1a hash of the canonical serialization, as a fixed-width hex string.
std::string scene_digest(const Scene& scene);

}  // namespace vorocell

#endif  // VOROCELL_SCENE_IO_HPP
