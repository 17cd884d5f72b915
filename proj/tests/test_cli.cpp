#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cyclemap/catalog.hpp"
#include "cyclemap/cli.hpp"
#include "cyclemap/report.hpp"

using namespace cyclemap;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclemap");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cyclemap_cli_" + name);
}

}  // namespace

TEST_CASE("orbit subcommand") {
  Run r = run({"orbit", "--map", "5n+1", "--seed", "5"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "classification: EntersCycle"));
  CHECK(has(r.out, "cycle_min: 13"));

  r = run({"orbit", "--map", "3n+5", "--seed", "1"});
  CHECK(has(r.out, "cycle: 1, 8, 4, 2"));

  r = run({"orbit", "--map", "3n+1", "--seed", "1"});
  CHECK(has(r.out, "classification: ReachesOne"));
  CHECK(has(r.out, "steps: 0"));

  r = run({"orbit", "--seed", "7", "--trajectory"});
  CHECK(has(r.out, "trajectory:\n7\n22\n11\n"));
  CHECK(has(r.out, "\n2\n1\n"));

  r = run({"orbit", "--map", "5n+1", "--seed", "7"});
  CHECK(has(r.out, "classification: Undetermined"));
  CHECK(has(r.out, "bound: "));
  CHECK_FALSE(has(r.out, "diverg"));

  r = run({"orbit", "--odd-mul", "7", "--odd-add", "3", "--seed", "3", "--max-steps", "10"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "map: 7n+3"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"orbit", "--seed", "0"}).code == kExitUsage);
  CHECK(run({"orbit", "--seed", "x"}).code == kExitUsage);
  CHECK(run({"orbit", "--map", "4n+1", "--seed", "3"}).code == kExitUsage);
  CHECK(run({"orbit", "--odd-mul", "4", "--odd-add", "1", "--seed", "3"}).code == kExitUsage);
  CHECK(run({"orbit", "--odd-mul", "3", "--seed", "3"}).code == kExitUsage);
  CHECK(run({"orbit", "--seed", "3", "--max-value-bits", "4"}).code == kExitUsage);
  CHECK(run({"scan", "--from", "0", "--to", "10"}).code == kExitUsage);
  CHECK(run({"scan", "--from", "10", "--to", "1"}).code == kExitUsage);
  CHECK(run({"scan", "--from", "1", "--to", "10", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"cycles", "--map", "3n+5"}).code == kExitUsage);
}

TEST_CASE("scan subcommand writes CSV to stdout and a summary to stderr") {
  Run r = run({"scan", "--map", "3n+5", "--from", "1", "--to", "100", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  const auto records = read_csv(in);
  CHECK(records.size() == 100);
  std::set<std::string> mins;
  for (const auto& rec : records) mins.insert(to_decimal(rec.cycle_ref->min));
  CHECK(mins == std::set<std::string>{"1", "19", "23", "5"});
  CHECK(has(r.err, "EntersCycle: 100"));

  r = run({"scan", "--map", "3n+1", "--from", "1", "--to", "100"});
  CHECK(has(r.err, "ReachesOne: 100"));

  r = run({"scan", "--map", "3n+5", "--from", "1", "--to", "30", "--no-fixtures"});
  CHECK(has(r.err, "discovery: new cycle(min=5, len=3)"));

  r = run({"scan", "--map", "5n+1", "--from", "1", "--to", "10"});
  CHECK(has(r.err, "undetermined seeds: 7("));
}

TEST_CASE("scan files are byte-identical across runs and worker counts") {
  const auto a = temp_file("a.json");
  const auto b = temp_file("b.json");
  REQUIRE(run({"scan", "--map", "5n+1", "--from", "1", "--to", "120", "--format", "json", "--out", a.string()}).code == 0);
  REQUIRE(run({"scan", "--map", "5n+1", "--from", "1", "--to", "120", "--format", "json", "--out", b.string(),
               "--workers", "4"})
              .code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("unwritable output is an I/O error") {
  CHECK(run({"scan", "--from", "1", "--to", "5", "--out", "/nonexistent-dir/x.csv"}).code == kExitIo);
}

TEST_CASE("cycles subcommand") {
  Run r = run({"cycles", "--map", "3n+5", "--fixtures"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "cycles: 4"));
  CHECK(has(r.out, "min=1 length=4"));
  CHECK(has(r.out, "min=5 length=3"));
  CHECK(has(r.out, "min=19 length=8"));
  CHECK(has(r.out, "min=23 length=8"));

  r = run({"cycles", "--map", "5n+1", "--fixtures"});
  CHECK(has(r.out, "cycles: 2"));
  CHECK(has(r.out, "min=13 length=10"));
  CHECK(has(r.out, "min=17 length=10"));

  const auto path = temp_file("catalog.json");
  REQUIRE(run({"cycles", "--map", "5n+1", "--fixtures", "--save", path.string()}).code == 0);
  CHECK(load_catalog(path) == known_cycles("5n+1"));
  r = run({"cycles", "--catalog", path.string(), "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == slurp(path));

  std::string text = slurp(path);
  text.replace(text.find("\"416\""), 5, "\"417\"");
  std::ofstream(path, std::ios::binary) << text;
  r = run({"cycles", "--catalog", path.string()});
  CHECK(r.code == kExitIo);
  CHECK(has(r.err, "cycle #0 [13,"));
}

TEST_CASE("verify subcommand") {
  Run r = run({"verify", "entry", "--limit", "10"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "MEASURED\t10-pow2-entry\toffset=2"));
  CHECK(has(r.out, "PASS\t10-pow2-entry\ttested=11\tfailures=0"));

  CHECK(run({"verify", "pow2", "--limit", "5"}).code == kExitOk);
  CHECK(run({"verify", "digits"}).code == kExitOk);
  CHECK(run({"verify", "mult5", "--extra", "225", "--extra", "17585", "--extra", "3698450"}).code == kExitOk);
  CHECK(run({"verify", "correspondence", "--limit", "50", "--steps", "50"}).code == kExitOk);

  r = run({"verify", "mult5", "--limit", "5", "--extra", "23"});
  CHECK(r.code == kExitClaimFailed);
  CHECK(has(r.out, "FAIL\tmultiples-of-5\tinput=seed=23\tobserved=EntersCycle cycle(min=23, len=8)"));

  r = run({"verify", "pow2", "--member", "5", "--limit", "2"});
  CHECK(r.code == kExitClaimFailed);
}
