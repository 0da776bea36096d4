#include <doctest.h>

#include <nlohmann/json.hpp>

#include "iterseq/report.hpp"

using namespace iterseq;

TEST_CASE("base string rendering") {
  CHECK(to_base_string(41, 2) == "101001");
  CHECK(to_base_string(6174, 10) == "6174");
  CHECK(to_base_string(0, 2) == "0");
  CHECK(parse_base_string("101001", 2) == 41);
  CHECK(parse_base_string("6174", 10) == 6174);
  CHECK_THROWS_AS(parse_base_string("12", 2), parse_error);
}

TEST_CASE("base string round trip") {
  for (nat v : {nat{0}, nat{1}, nat{41}, nat{93}, nat{6174}, nat{49995}})
    for (int base : {2, 10, 16})
      CHECK(parse_base_string(to_base_string(v, base), base) == v);
}

TEST_CASE("trajectory CSV") {
  const auto t = collatz_trajectory(36);
  const std::string csv = render_trajectory_csv(t.values);
  CHECK(csv.starts_with("step,value\n0,36\n1,18\n"));
  CHECK(csv.ends_with("\n"));
  // header + 22 data rows
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 23);
  CHECK(csv.find("21,1\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("table1 rows match the published catalog") {
  std::vector<kaprekar_classification> results;
  for (int length = 4; length <= 9; ++length)
    results.push_back(classify_all({2, length, 2, 2}));
  const auto rows = table1_rows(results);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].fixed_points == "101, 10");
  CHECK(rows[0].loops == "none");
  CHECK(rows[1].fixed_points == "none");
  CHECK(rows[1].loops == "{110, 1111}");
  CHECK(rows[2].fixed_points == "101001");
  CHECK(rows[2].loops == "none");
  CHECK(rows[3].fixed_points == "none");
  CHECK(rows[3].loops == "{1001011, 1011101}");
  CHECK(rows[4].fixed_points == "11010001");
  CHECK(rows[4].loops == "none");
  CHECK(rows[5].fixed_points == "none");
  CHECK(rows[5].loops == "{110010101, 110111001}");

  const std::string table = render_table1(results);
  CHECK(table.find("101, 10") != std::string::npos);
  CHECK(table.find("{110010101, 110111001}") != std::string::npos);
}

TEST_CASE("classification JSON schema") {
  const auto result = classify_all({10, 4, 1, 1});
  const std::string text = render(result, {render_format::json});
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("config").at("base") == 10);
  CHECK(j.at("config").at("length") == 4);
  CHECK(j.at("config").at("u") == 1);
  CHECK(j.at("config").at("v") == 1);
  CHECK(j.at("fixed_points") == nlohmann::json::array({6174}));
  CHECK(j.at("cycles").empty());
  CHECK(j.at("degenerate_starts_count") == 10);
  CHECK(j.at("basins").at("6174") == 9990);
  // byte-identical on repeat
  CHECK(render(result, {render_format::json}) == text);
}

TEST_CASE("empty-ish classification is valid JSON") {
  kaprekar_classification empty;
  empty.config = {10, 4, 2, 2};
  const auto j = nlohmann::json::parse(render(empty, {render_format::json}));
  CHECK(j.at("fixed_points").is_array());
  CHECK(j.at("fixed_points").empty());
  CHECK(j.at("cycles").empty());
}

TEST_CASE("verification JSON schema") {
  const auto report = verify_theorem(dfp());
  render_spec spec{render_format::json};
  const auto j = nlohmann::json::parse(render(report, spec));
  CHECK(j.at("process") == "dfp");
  CHECK(j.at("cases") == 11439);
  CHECK(j.at("unknown").empty());
  CHECK(j.at("max_transient") == 57);
  CHECK(j.at("terminals").size() == 7);
  CHECK(j.at("terminals").at(0).at("name") == "fixA");
  CHECK(j.at("terminals").at(0).at("cycle") == nlohmann::json::array({1}));
  CHECK(j.contains("elapsed_ms"));

  // stripped of timing, the rendering is deterministic
  spec.include_elapsed = false;
  CHECK(render(report, spec) == render(report, spec));
}

TEST_CASE("unsupported formats throw") {
  const auto result = classify_all({2, 4, 2, 2});
  CHECK_THROWS_AS(render(result, {render_format::csv}), unsupported_format);
  kaprekar_classification c;
  c.config = {2, 4, 2, 2};
  CHECK_NOTHROW(render(c, {render_format::table}));
}

TEST_CASE("conjecture rendering") {
  std::vector<conjecture_result> results{conjecture_check(3)};
  const auto j = nlohmann::json::parse(render(results, {render_format::json}));
  REQUIRE(j.size() == 1);
  CHECK(j.at(0).at("m") == 3);
  CHECK(j.at(0).at("fixed_point_ok") == true);
  CHECK(j.at(0).at("loop_ok") == true);
  CHECK(j.at(0).at("fixed_point") == 41);
  CHECK(j.at(0).at("loop") == nlohmann::json::array({75, 93}));
}
