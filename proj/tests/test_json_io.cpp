#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fusionkit/error.hpp"
#include "fusionkit/json_io.hpp"

using namespace fusionkit;
using io::Json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("presentation round trip") {
  for (auto kind : {pc::SylowKind::L34, pc::SylowKind::L34_f, pc::SylowKind::L34_u,
                    pc::SylowKind::L34_fu}) {
    const auto pres = pc::sylow_presentation(kind);
    const auto j = io::presentation_to_json(pres);
    const auto back = io::presentation_from_json(j);
    CHECK(back.generators == pres.generators);
    CHECK(io::presentation_to_json(back) == j);
    CHECK(pc::build_presented_group(back).order() == pc::builtin_sylow(kind).order());
  }
}

TEST_CASE("presentation from hand-written JSON") {
  const Json j = Json::parse(R"({"generators": ["z", "a", "b"],
                                 "powers": {"a": "z", "b": "z"},
                                 "commutators": {"[b,a]": "z"}})");
  const auto g = pc::build_presented_group(io::presentation_from_json(j));
  CHECK(g.order() == 8);
  CHECK(g.element_order(g.generator("a")) == 4);
  CHECK(g.comm(g.generator("b"), g.generator("a")) == g.generator("z"));
}

TEST_CASE("presentation errors") {
  CHECK(kind_of([] { io::presentation_from_json(Json::parse(R"({"powers": {}})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] {
          io::presentation_from_json(Json::parse(R"({"generators": ["a"], "powers": {"q": ""}})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::presentation_from_json(
              Json::parse(R"({"generators": ["a", "b"], "commutators": {"b,a": ""}})"));
        }) == ErrorKind::Parse);
}

TEST_CASE("permutation group round trip") {
  const auto g = perm::l32_group();
  const auto j = io::group_to_json(g);
  CHECK(j.at("degree") == 7);
  const auto back = io::group_from_json(j);
  CHECK(back.order() == 168);
  CHECK(back.generators() == g.generators());
}

TEST_CASE("group files") {
  const auto path = write_temp("fusionkit_s4.json",
                               R"({"degree": 4, "generators": [[2,1,3,4],[2,3,4,1]], "name": "S4"})");
  CHECK(io::load_group_file(path).order() == 24);
  std::filesystem::remove(path);

  CHECK(kind_of([] { io::load_group_file("/nonexistent-dir/g.json"); }) == ErrorKind::Io);
  const auto bad = write_temp("fusionkit_bad.json", "{ not json");
  CHECK(kind_of([&] { io::load_group_file(bad); }) == ErrorKind::Parse);
  std::filesystem::remove(bad);
  CHECK(kind_of([] {
          io::group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,1,2]]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::group_from_json(Json::parse(R"({"degree": 3, "generators": [[1,2]]})"));
        }) == ErrorKind::Parse);
}

TEST_CASE("extension spec") {
  // Split extension of the natural GL2(2)-module: 2^2:S3 = S4.
  const Json j = Json::parse(R"({"dim": 2,
                                 "quotient_generators": [[2, 3], [2, 1]],
                                 "x": 1, "v_basis": [1, 2],
                                 "g_generators": [[2, 1]]})");
  const auto spec = io::extension_from_json(j);
  CHECK(spec.gamma->order() == 6);
  CHECK(spec.extension.order() == 24);
  CHECK(spec.x == 1);
  CHECK(spec.v_basis == std::vector<mod::Vec>{1, 2});
  CHECK(spec.g_gens.size() == 1);
  CHECK(coh::complement_search(spec.extension).has_value());

  CHECK(kind_of([] {
          io::extension_from_json(Json::parse(R"({"dim": 2, "quotient_generators": [[1, 2]],
                                                  "g_generators": [[2, 1]]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::extension_from_json(Json::parse(R"({"dim": 0})")); }) == ErrorKind::Parse);
}
