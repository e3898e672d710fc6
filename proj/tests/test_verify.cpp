#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fusionkit/error.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;
using verify::CheckReport;
using verify::Status;

namespace {

const std::vector<CheckReport>& all_reports() {
  static const auto reports = verify::run_checks(7);
  return reports;
}

}  // namespace

TEST_CASE("every registered check passes") {
  const auto& reports = all_reports();
  CHECK(reports.size() == verify::registry(7).size());
  for (const auto& r : reports) {
    INFO(r.check_id << " " << r.details.dump());
    CHECK(r.status == Status::Pass);
  }
  CHECK(verify::exit_code(reports) == 0);
}

TEST_CASE("reports come back in registry order") {
  const auto reg = verify::registry(7);
  const auto& reports = all_reports();
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reports[i].check_id == reg[i].id);
}

TEST_CASE("report schema") {
  for (const auto& r : all_reports()) {
    const auto j = r.to_json();
    CHECK(j.at("check_id").is_string());
    CHECK(j.at("status").is_string());
    CHECK(j.at("details").is_object());
    CHECK(j.at("elapsed_ms").is_number_integer());
    CHECK(!r.to_json_untimed().contains("elapsed_ms"));
    const bool seeded = r.check_id == "check_lemma31" || r.check_id == "check_lemma32_scenarios" ||
                        r.check_id == "negative_controls";
    CHECK(j.contains("seed") == seeded);
  }
}

TEST_CASE("corrupted variants fail") {
  CHECK(verify::check_lemma31_corrupted(7).status == Status::Fail);
  CHECK(verify::check_lemma32_corrupted().status == Status::Fail);
  CHECK(verify::check_lemma33_corrupted().status == Status::Fail);
  CHECK(verify::check_wreath_corrupted("a6").status == Status::Fail);
  CHECK(verify::check_wreath_corrupted("l32").status == Status::Fail);
  CHECK(verify::check_fusion_corrupted().status == Status::Fail);
}

TEST_CASE("same seed gives the same reports") {
  const auto again = verify::run_checks(7);
  const auto& first = all_reports();
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(again[i].to_json_untimed() == first[i].to_json_untimed());
}

TEST_CASE("filtering by id") {
  const auto one = verify::run_checks(1, std::string("check_lemma33:L34_u"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].check_id == "check_lemma33:L34_u");
  const auto family = verify::run_checks(1, std::string("check_wreath_model"));
  CHECK(family.size() == 2);
  CHECK_THROWS_AS(verify::run_checks(1, std::string("no_such_check")), Error);
}

TEST_CASE("exit code precedence") {
  CheckReport pass{"a", Status::Pass};
  CheckReport fail{"b", Status::Fail};
  CheckReport err{"c", Status::Error};
  CHECK(verify::exit_code({pass}) == 0);
  CHECK(verify::exit_code({pass, fail}) == 1);
  CHECK(verify::exit_code({fail, err}) == 2);
  CHECK(verify::exit_code({}) == 0);
}

TEST_CASE("run_all writes the report and maps IO failure to 2") {
  const auto path = std::filesystem::temp_directory_path() / "fusionkit_test_report.json";
  CHECK(verify::run_all(3, path.string(), std::string("check_lemma33:L34")) == 0);
  std::ifstream in(path);
  const auto j = verify::Json::parse(in);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("status") == "pass");
  std::filesystem::remove(path);
  CHECK(verify::run_all(3, "/nonexistent-dir/report.json", std::string("check_lemma33:L34")) == 2);
}

TEST_CASE("builtin groups") {
  CHECK(verify::builtin_group("s4").order() == 24);
  CHECK(verify::builtin_group("d8").order() == 8);
  CHECK(verify::builtin_group("a6").order() == 360);
  CHECK(verify::builtin_group("l32").order() == 168);
  CHECK_THROWS_AS(verify::builtin_group("m11"), Error);
}
