#include "vorocell/scene_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "vorocell/errors.hpp"

namespace vorocell {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SceneParseError(where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known) fail(where, "unknown key '" + item.key() + "'");
  }
}

double parse_p(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf")
      return std::numeric_limits<double>::infinity();
    fail("norm.p", "expected a number or \"inf\"");
  }
  if (!v.is_number()) fail("norm.p", "expected a number or \"inf\"");
  const double p = v.get<double>();
  if (!(p >= 1.0)) fail("norm.p", "p must satisfy p >= 1");
  return p;
}

Vector parse_coords(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a coordinate array");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const auto& c = v[static_cast<size_t>(i)];
    if (!c.is_number()) fail(where, "coordinates must be numbers");
    out(i) = c.get<double>();
  }
  return out;
}

SitePrimitive parse_site(const json& v, const std::string& where,
                         Eigen::Index dim) {
  if (!v.is_object()) fail(where, "expected an object");
  if (!v.contains("type")) fail(where, "missing 'type'");
  const std::string type = v["type"].get<std::string>();

  if (type == "points") {
    reject_unknown_keys(v, where, {"type", "points"});
    if (!v.contains("points") || !v["points"].is_array() ||
        v["points"].empty())
      fail(where, "'points' must be a nonempty array");
    Eigen::MatrixXd pts(dim, static_cast<Eigen::Index>(v["points"].size()));
    for (Eigen::Index i = 0; i < pts.cols(); ++i) {
      const Vector c =
          parse_coords(v["points"][static_cast<size_t>(i)], where + ".points");
      if (c.size() != dim) fail(where, "point dimension mismatch");
      pts.col(i) = c;
    }
    return PointSet{std::move(pts)};
  }
  if (type == "segments") {
    reject_unknown_keys(v, where, {"type", "segments"});
    if (!v.contains("segments") || !v["segments"].is_array() ||
        v["segments"].empty())
      fail(where, "'segments' must be a nonempty array");
    Eigen::MatrixXd a(dim, static_cast<Eigen::Index>(v["segments"].size()));
    Eigen::MatrixXd b(dim, a.cols());
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
      const auto& seg = v["segments"][static_cast<size_t>(i)];
      if (!seg.is_array() || seg.size() != 2)
        fail(where, "each segment is a pair of endpoints");
      const Vector ca = parse_coords(seg[0], where + ".segments");
      const Vector cb = parse_coords(seg[1], where + ".segments");
      if (ca.size() != dim || cb.size() != dim)
        fail(where, "segment dimension mismatch");
      a.col(i) = ca;
      b.col(i) = cb;
    }
    return SegmentSet{std::move(a), std::move(b)};
  }
  if (type == "sequence_example") {
    reject_unknown_keys(v, where, {"type", "role"});
    if (!v.contains("role")) fail(where, "missing 'role'");
    const std::string role = v["role"].get<std::string>();
    if (role == "P") return SequenceSite{SequenceRole::P};
    if (role == "A") return SequenceSite{SequenceRole::A};
    fail(where, "role must be \"P\" or \"A\"");
  }
  fail(where, "unknown site type '" + type + "'");
}

}  // namespace

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a 1-based line/column pair.
    int line = 1, col = 1;
    const size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "scene parse error at line " << line << ", column " << col << ": "
        << e.what();
    throw SceneParseError(msg.str(), line, col);
  }

  if (!doc.is_object()) fail("scene", "top level must be an object");
  reject_unknown_keys(doc, "scene", {"norm", "domain", "sites"});
  for (const char* key : {"norm", "domain", "sites"})
    if (!doc.contains(key)) fail("scene", std::string("missing '") + key + "'");

  reject_unknown_keys(doc["norm"], "norm", {"p"});
  if (!doc["norm"].contains("p")) fail("norm", "missing 'p'");
  reject_unknown_keys(doc["domain"], "domain", {"min", "max"});
  if (!doc["domain"].contains("min") || !doc["domain"].contains("max"))
    fail("domain", "missing 'min' or 'max'");

  Scene scene;
  scene.norm.p = parse_p(doc["norm"]["p"]);
  scene.domain_min = parse_coords(doc["domain"]["min"], "domain.min");
  scene.domain_max = parse_coords(doc["domain"]["max"], "domain.max");
  if (scene.domain_min.size() != scene.domain_max.size())
    fail("domain", "min/max dimensions disagree");
  scene.dimension = scene.domain_min.size();

  if (!doc["sites"].is_array() || doc["sites"].empty())
    fail("sites", "expected a nonempty array");
  for (size_t i = 0; i < doc["sites"].size(); ++i) {
    std::ostringstream where;
    where << "sites[" << i << "]";
    scene.sites.push_back(
        site_of(parse_site(doc["sites"][i], where.str(), scene.dimension)));
  }

  try {
    validate(scene);
  } catch (const std::exception& e) {
    fail("scene", e.what());
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scene file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

nlohmann::json scene_to_json(const Scene& scene) {
  json doc;
  if (scene.norm.is_inf())
    doc["norm"]["p"] = "inf";
  else
    doc["norm"]["p"] = scene.norm.p;
  doc["domain"]["min"] = std::vector<double>(
      scene.domain_min.data(), scene.domain_min.data() + scene.domain_min.size());
  doc["domain"]["max"] = std::vector<double>(
      scene.domain_max.data(), scene.domain_max.data() + scene.domain_max.size());
  doc["sites"] = json::array();
  for (const auto& site : scene.sites) {
    for (const auto& prim : site.primitives) {
      json entry;
      std::visit(
          [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PointSet>) {
              entry["type"] = "points";
              auto arr = json::array();
              for (Eigen::Index i = 0; i < p.points.cols(); ++i) {
                auto pt = json::array();
                for (Eigen::Index j = 0; j < p.points.rows(); ++j)
                  pt.push_back(p.points(j, i));
                arr.push_back(std::move(pt));
              }
              entry["points"] = std::move(arr);
            } else if constexpr (std::is_same_v<T, SegmentSet>) {
              entry["type"] = "segments";
              auto arr = json::array();
              for (Eigen::Index i = 0; i < p.a.cols(); ++i) {
                auto ea = json::array(), eb = json::array();
                for (Eigen::Index j = 0; j < p.a.rows(); ++j) {
                  ea.push_back(p.a(j, i));
                  eb.push_back(p.b(j, i));
                }
                arr.push_back(json::array({std::move(ea), std::move(eb)}));
              }
              entry["segments"] = std::move(arr);
            } else {
              entry["type"] = "sequence_example";
              entry["role"] = p.role == SequenceRole::P ? "P" : "A";
            }
          },
          prim);
      doc["sites"].push_back(std::move(entry));
    }
  }
  return doc;
}

std::string write_scene(const Scene& scene) {
  return scene_to_json(scene).dump(2) + "\n";
}

std::string scene_digest(const Scene& scene) {
  const std::string canon = scene_to_json(scene).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace vorocell
