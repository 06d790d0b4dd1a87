#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "vorocell/scene_io.hpp"

using namespace vorocell;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

Scene sample_scene() {
  Scene s;
  s.dimension = 2;
  s.domain_min = vec2(-5, -5);
  s.domain_max = vec2(5, 5);
  s.norm = NormSpec::lp(2.718281828);
  s.sites.push_back(site_of(make_points2d({{0.25, -1.5}, {3, 4}})));
  s.sites.push_back(site_of(make_segments2d({{-1, -1, 2, -2}})));
  return s;
}

void check_equal(const Scene& a, const Scene& b) {
  CHECK(a.dimension == b.dimension);
  CHECK(a.norm.p == b.norm.p);
  CHECK(a.domain_min == b.domain_min);
  CHECK(a.domain_max == b.domain_max);
  REQUIRE(a.sites.size() == b.sites.size());
  for (size_t i = 0; i < a.sites.size(); ++i) {
    REQUIRE(a.sites[i].primitives.size() == b.sites[i].primitives.size());
    for (size_t j = 0; j < a.sites[i].primitives.size(); ++j) {
      const auto& pa = a.sites[i].primitives[j];
      const auto& pb = b.sites[i].primitives[j];
      REQUIRE(pa.index() == pb.index());
      if (const auto* pts = std::get_if<PointSet>(&pa))
        CHECK(pts->points == std::get<PointSet>(pb).points);
      if (const auto* segs = std::get_if<SegmentSet>(&pa)) {
        CHECK(segs->a == std::get<SegmentSet>(pb).a);
        CHECK(segs->b == std::get<SegmentSet>(pb).b);
      }
      if (const auto* seq = std::get_if<SequenceSite>(&pa))
        CHECK(seq->role == std::get<SequenceSite>(pb).role);
    }
  }
}

}  // namespace

TEST_CASE("scene round-trips through its file form field-for-field") {
  const Scene s = sample_scene();
  check_equal(s, parse_scene(write_scene(s)));

  Scene seq;
  seq.dimension = 2;
  seq.domain_min = vec2(-2, -2);
  seq.domain_max = vec2(2, 2);
  seq.norm = NormSpec::lp(2);
  seq.sites.push_back(site_of(SequenceSite{SequenceRole::P}));
  seq.sites.push_back(site_of(SequenceSite{SequenceRole::A}));
  check_equal(seq, parse_scene(write_scene(seq)));

  Scene inf = sample_scene();
  inf.norm = NormSpec::linf();
  inf.sites.pop_back();
  check_equal(inf, parse_scene(write_scene(inf)));
}

TEST_CASE("serialization is deterministic and digests are stable") {
  const Scene s = sample_scene();
  CHECK(write_scene(s) == write_scene(s));
  CHECK(scene_digest(s) == scene_digest(s));
  CHECK(scene_digest(s).size() == 16);
  Scene other = s;
  other.domain_max = vec2(6, 5);
  CHECK(scene_digest(s) != scene_digest(other));
}

TEST_CASE("syntax errors carry line and column") {
  const std::string bad = "{\n  \"norm\": {\"p\": 2},\n  \"domain\": oops\n}";
  try {
    parse_scene(bad);
    FAIL("expected SceneParseError");
  } catch (const SceneParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 0);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("semantic validation failures") {
  const char* missing_norm =
      R"({"domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0,0]]}]})";
  CHECK_THROWS_AS(parse_scene(missing_norm), SceneParseError);

  const char* unknown_key =
      R"({"norm": {"p": 2}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0,0]]}], "extra": 1})";
  CHECK_THROWS_WITH_AS(parse_scene(unknown_key),
                       doctest::Contains("unknown key 'extra'"),
                       SceneParseError);

  const char* bad_p =
      R"({"norm": {"p": 0.5}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0,0]]}]})";
  CHECK_THROWS_AS(parse_scene(bad_p), SceneParseError);

  const char* bad_role =
      R"({"norm": {"p": 2}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "sequence_example", "role": "Q"}]})";
  CHECK_THROWS_AS(parse_scene(bad_role), SceneParseError);

  const char* mixed_dims =
      R"({"norm": {"p": 2}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0,0,0]]}]})";
  CHECK_THROWS_AS(parse_scene(mixed_dims), SceneParseError);

  const char* empty_sites =
      R"({"norm": {"p": 2}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": []})";
  CHECK_THROWS_AS(parse_scene(empty_sites), SceneParseError);

  const char* empty_domain =
      R"({"norm": {"p": 2}, "domain": {"min": [2,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0,0]]}]})";
  CHECK_THROWS_AS(parse_scene(empty_domain), SceneParseError);

  const char* seq_wrong_norm =
      R"({"norm": {"p": 3}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "sequence_example", "role": "P"}]})";
  CHECK_THROWS_AS(parse_scene(seq_wrong_norm), SceneParseError);
}

TEST_CASE("inf norm and comments parse") {
  const char* text =
      "// header comment\n"
      R"({"norm": {"p": "inf"}, "domain": {"min": [0,0], "max": [1,1]},
          "sites": [{"type": "points", "points": [[0.5,0.5]]}]})";
  const Scene s = parse_scene(text);
  CHECK(s.norm.is_inf());
  CHECK(write_scene(s).find("\"inf\"") != std::string::npos);
}

TEST_CASE("all repository fixtures load and validate") {
  const std::filesystem::path dir = VOROCELL_SCENE_DIR;
  size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".scene") continue;
    ++count;
    CHECK_NOTHROW(load_scene(entry.path().string()));
  }
  CHECK(count >= 7);
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(load_scene("/nonexistent/never.scene"), IoError);
}
