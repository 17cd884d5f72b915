#include <doctest.h>

#include <sstream>

#include "cyclemap/errors.hpp"
#include "cyclemap/report.hpp"

using namespace cyclemap;

TEST_CASE("CSV layout") {
  const ScanResult r = scan_range(*preset("5n+1"), 5, 7, Bounds{}, known_cycles("5n+1"));
  std::ostringstream out;
  write_csv(r.report, out);
  std::istringstream lines(out.str());
  std::string header, five, six, seven;
  std::getline(lines, header);
  std::getline(lines, five);
  std::getline(lines, six);
  std::getline(lines, seven);
  CHECK(header == "seed,classification,cycle_min,cycle_len,entry_steps,steps,peak");
  CHECK(five == "5,EntersCycle,13,10,1,11,416");
  CHECK(six.rfind("6,ReachesOne,,,,", 0) == 0);
  CHECK(seven.rfind("7,Undetermined,,,,", 0) == 0);
}

TEST_CASE("CSV and JSON carry the same records") {
  for (const auto& name : preset_names()) {
    const ScanResult r = scan_range(*preset(name), 1, 150, Bounds{}, known_cycles(name), 2);
    std::ostringstream csv;
    write_csv(r.report, csv);
    std::istringstream in(csv.str());
    const auto from_csv = read_csv(in);

    const ScanReport from_json = report_from_json(nlohmann::json::parse(report_to_json(r.report).dump()));
    REQUIRE(from_csv.size() == r.report.records.size());
    REQUIRE(from_json.records.size() == r.report.records.size());
    CHECK(from_json.records == r.report.records);
    for (std::size_t i = 0; i < from_csv.size(); ++i) {
      ScanRecord expected = r.report.records[i];
      expected.bound_hit.reset();  // not a CSV column
      CHECK(from_csv[i] == expected);
    }
    CHECK(from_json.map == r.report.map);
    CHECK(from_json.bounds == r.report.bounds);
    CHECK(from_json.lo == 1);
    CHECK(from_json.hi == 150);
    CHECK(report_to_json(from_json).dump() == report_to_json(r.report).dump());
  }
}

TEST_CASE("JSON integers are decimal strings") {
  const ScanResult r = scan_range(*preset("5n+1"), 5, 5, Bounds{}, known_cycles("5n+1"));
  const auto doc = report_to_json(r.report);
  CHECK(doc["records"][0]["seed"] == "5");
  CHECK(doc["records"][0]["peak"] == "416");
  CHECK(doc["records"][0]["cycle_ref"]["min"] == "13");
  CHECK(doc["records"][0]["entry_steps"] == "1");
  CHECK(doc["bounds"]["max_steps"] == "100000");
  CHECK(doc["summary"]["counts"]["EntersCycle"] == "1");
}

TEST_CASE("malformed CSV is rejected with the row number") {
  std::istringstream bad_header("seed,class\n");
  CHECK_THROWS_AS(read_csv(bad_header), CorruptionError);
  std::istringstream bad_row("seed,classification,cycle_min,cycle_len,entry_steps,steps,peak\n1,ReachesOne,,,,0,1\n2,Sideways,,,,1,2\n");
  try {
    read_csv(bad_row);
    FAIL("expected CorruptionError");
  } catch (const CorruptionError& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"map":1})")), CorruptionError);
}
