#include "cyclemap/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cyclemap/catalog.hpp"
#include "cyclemap/errors.hpp"
#include "cyclemap/orbit.hpp"
#include "cyclemap/report.hpp"
#include "cyclemap/scanner.hpp"
#include "cyclemap/verifiers.hpp"

namespace cyclemap {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapOptions {
  std::string preset_name = "3n+1";
  std::optional<std::int64_t> odd_mul;
  std::optional<std::int64_t> odd_add;
  CLI::Option* map_flag = nullptr;

  void attach(CLI::App& app) {
    map_flag = app.add_option("--map", preset_name, "Preset map: 3n+1, 5n+1 or 3n+5")
                   ->capture_default_str();
    app.add_option("--odd-mul", odd_mul, "Custom odd-branch multiplier a (odd, >= 1)");
    app.add_option("--odd-add", odd_add, "Custom odd-branch addend b (odd, >= 1)");
  }

  MapSpec resolve() const {
    if (odd_mul.has_value() != odd_add.has_value()) {
      throw UsageError("--odd-mul and --odd-add must be given together");
    }
    if (odd_mul) {
      if (map_flag->count() > 0) throw UsageError("--map cannot be combined with --odd-mul/--odd-add");
      return make_map(*odd_mul, *odd_add, default_name(static_cast<std::uint64_t>(std::max<std::int64_t>(*odd_mul, 0)),
                                                       static_cast<std::uint64_t>(std::max<std::int64_t>(*odd_add, 0))));
    }
    auto m = preset(preset_name);
    if (!m) throw UsageError("unknown map '" + preset_name + "' (expected 3n+1, 5n+1 or 3n+5)");
    return *m;
  }
};

struct BoundsOptions {
  Bounds bounds;
  bool no_stop_at_one = false;
  bool stop_at_one = false;

  void attach(CLI::App& app) {
    app.add_option("--max-steps", bounds.max_steps, "Iteration cap")->capture_default_str();
    app.add_option("--max-value-bits", bounds.max_value_bits, "Magnitude cap in bits")->capture_default_str();
    auto* no = app.add_flag("--no-stop-at-one", no_stop_at_one, "Keep iterating through 1 to expose its loop");
    app.add_flag("--stop-at-one", stop_at_one, "Treat 1 as terminal (default for a*n+1 maps)")->excludes(no);
  }

  Bounds resolve(const MapSpec& map) const {
    Bounds b = bounds;
    b.stop_at_one = Bounds::defaults_for(map).stop_at_one;
    if (no_stop_at_one) b.stop_at_one = false;
    if (stop_at_one) b.stop_at_one = true;
    b.validate();
    return b;
  }
};

Natural parse_positive(const std::string& text, const char* flag) {
  Natural n;
  try {
    n = parse_natural(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected a positive integer, got '" + text + "'");
  }
  if (n < 1) throw UsageError(std::string(flag) + ": must be >= 1");
  return n;
}

std::string join(const std::vector<Natural>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(values[i]);
  }
  return out;
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void close(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw IoError("write failed" + (path.empty() ? std::string() : ": " + path));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

CycleCatalog starting_catalog(const MapSpec& map, const std::string& catalog_path, bool fixtures) {
  if (!catalog_path.empty()) {
    CycleCatalog c = load_catalog(catalog_path);
    if (!c.map().same_dynamics(map)) {
      throw UsageError("catalog " + catalog_path + " is for " + c.map().name + ", not " + map.name);
    }
    return c;
  }
  if (fixtures && preset(map.name) && preset(map.name)->same_dynamics(map)) {
    return known_cycles(map.name);
  }
  return CycleCatalog(map);
}

void print_catalog(const CycleCatalog& catalog, std::ostream& out) {
  out << "map: " << catalog.map().name << " (a=" << catalog.map().a << ", b=" << catalog.map().b << ")\n";
  out << "cycles: " << catalog.size() << '\n';
  for (const auto* e : catalog.entries()) {
    out << "min=" << to_decimal(e->cycle.min_element()) << " length=" << e->cycle.length()
        << " provenance=" << to_string(e->provenance) << '\n';
    out << "  " << join(e->cycle.elements, ", ") << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Halve-if-even, a*n+b-if-odd maps: orbits, cycles and claim checks", "cyclemap"};
  app.require_subcommand(1);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Classify one seed");
  MapOptions orbit_map;
  BoundsOptions orbit_bounds;
  std::string orbit_seed;
  bool orbit_trajectory = false;
  std::size_t orbit_show = 0;
  orbit_map.attach(*orbit_cmd);
  orbit_bounds.attach(*orbit_cmd);
  orbit_cmd->add_option("--seed", orbit_seed, "Starting value (>= 1)")->required();
  orbit_cmd->add_flag("--trajectory", orbit_trajectory, "Print the trajectory, one value per line");
  orbit_cmd->add_option("--show", orbit_show, "Print at most this many trajectory values (0 = all)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Classify every seed in a range");
  MapOptions scan_map;
  BoundsOptions scan_bounds;
  std::string scan_from, scan_to, scan_format = "csv", scan_out, scan_catalog, scan_save;
  std::size_t scan_workers = 1;
  bool scan_no_fixtures = false;
  scan_map.attach(*scan_cmd);
  scan_bounds.attach(*scan_cmd);
  scan_cmd->add_option("--from", scan_from, "First seed")->required();
  scan_cmd->add_option("--to", scan_to, "Last seed (inclusive)")->required();
  scan_cmd->add_option("--workers", scan_workers, "Worker threads")->capture_default_str();
  scan_cmd->add_option("--format", scan_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scan_cmd->add_option("--out", scan_out, "Output file (default: standard output)");
  scan_cmd->add_option("--catalog", scan_catalog, "Starting catalog file");
  scan_cmd->add_flag("--no-fixtures", scan_no_fixtures, "Start from an empty catalog");
  scan_cmd->add_option("--save-catalog", scan_save, "Write the grown catalog here");

  // cycles
  auto* cycles_cmd = app.add_subcommand("cycles", "List or persist cycle catalogs");
  MapOptions cycles_map;
  bool cycles_fixtures = false;
  std::string cycles_catalog, cycles_save, cycles_format = "text";
  cycles_map.attach(*cycles_cmd);
  cycles_cmd->add_flag("--fixtures", cycles_fixtures, "Use the built-in known cycles of the preset map");
  cycles_cmd->add_option("--catalog", cycles_catalog, "Catalog file to load and validate");
  cycles_cmd->add_option("--save", cycles_save, "Write the catalog to this file");
  cycles_cmd->add_option("--format", cycles_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run a bounded claim check");
  std::string claim;
  std::optional<std::uint64_t> verify_limit;
  std::uint64_t verify_steps = 1000;
  std::vector<std::string> verify_extra;
  std::string verify_catalog, verify_member;
  verify_cmd->add_option("claim", claim, "pow2 | entry | digits | mult5 | correspondence")
      ->required()
      ->check(CLI::IsMember({"pow2", "entry", "digits", "mult5", "correspondence"}));
  verify_cmd->add_option("--limit", verify_limit,
                         "pow2/entry: max r (20/10); mult5: largest seed (100); correspondence: max k (10000)");
  verify_cmd->add_option("--steps", verify_steps, "correspondence: steps per k")->capture_default_str();
  verify_cmd->add_option("--extra", verify_extra, "mult5: additional seeds");
  verify_cmd->add_option("--catalog", verify_catalog, "pow2/digits: 5n+1 catalog file instead of built-in cycles");
  verify_cmd->add_option("--member", verify_member, "pow2: check only this cycle member");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*orbit_cmd) {
      const MapSpec map = orbit_map.resolve();
      const Bounds bounds = orbit_bounds.resolve(map);
      const Natural seed = parse_positive(orbit_seed, "--seed");
      const Orbit o = classify_orbit(map, seed, bounds,
                                     orbit_trajectory ? (orbit_show ? Retention::first(orbit_show) : Retention::full())
                                                      : Retention::none());
      out << "map: " << map.name << '\n';
      out << "seed: " << to_decimal(o.seed) << '\n';
      out << "classification: " << to_string(o.classification) << '\n';
      out << "steps: " << o.steps_to_termination << '\n';
      if (o.entry_steps) out << "entry_steps: " << *o.entry_steps << '\n';
      if (o.cycle) {
        out << "cycle_min: " << to_decimal(o.cycle->min_element()) << '\n';
        out << "cycle_len: " << o.cycle->length() << '\n';
        out << "cycle: " << join(o.cycle->elements, ", ") << '\n';
      }
      if (o.bound_hit) out << "bound: " << to_string(*o.bound_hit) << '\n';
      out << "peak: " << to_decimal(o.peak) << '\n';
      if (orbit_trajectory) {
        out << "trajectory:\n";
        for (const auto& v : o.prefix) out << to_decimal(v) << '\n';
        if (o.prefix_truncated) out << "...\n";
      }
      return kExitOk;
    }

    if (*scan_cmd) {
      const MapSpec map = scan_map.resolve();
      const Bounds bounds = scan_bounds.resolve(map);
      const Natural lo = parse_positive(scan_from, "--from");
      const Natural hi = parse_positive(scan_to, "--to");
      if (hi < lo) throw UsageError("--to must be >= --from");
      if (scan_workers < 1) throw UsageError("--workers must be >= 1");
      const CycleCatalog start = starting_catalog(map, scan_catalog, !scan_no_fixtures);

      Sink sink(scan_out, out);
      const ScanResult result = scan_range(map, lo, hi, bounds, start, scan_workers);
      if (scan_format == "csv") {
        write_csv(result.report, sink.stream());
      } else {
        sink.stream() << report_to_json(result.report).dump(2) << '\n';
      }
      sink.close(scan_out);
      if (!scan_save.empty()) save_catalog(result.catalog, scan_save);

      const auto& s = result.report.summary;
      err << "scanned " << map.name << " seeds " << to_decimal(lo) << ".." << to_decimal(hi) << '\n';
      for (const auto& [c, n] : s.by_classification) err << "  " << to_string(c) << ": " << n << '\n';
      for (const auto& [id, n] : s.by_cycle) err << "  " << to_string(id) << ": " << n << " seeds\n";
      for (const auto& c : result.report.catalog_delta) {
        err << "  discovery: new " << to_string(c.id()) << " [" << join(c.elements, ", ") << "]\n";
      }
      if (!s.undetermined.empty()) {
        err << "  undetermined seeds:";
        for (const auto& u : s.undetermined) err << ' ' << to_decimal(u.seed) << '(' << to_string(u.bound) << ')';
        err << '\n';
      }
      return kExitOk;
    }

    if (*cycles_cmd) {
      const MapSpec map = cycles_map.resolve();
      if (!cycles_fixtures && cycles_catalog.empty()) throw UsageError("cycles needs --fixtures or --catalog FILE");
      if (cycles_fixtures && !cycles_catalog.empty()) throw UsageError("--fixtures and --catalog are exclusive");
      CycleCatalog catalog = cycles_fixtures ? known_cycles(map.name) : load_catalog(cycles_catalog);
      if (cycles_fixtures && !catalog.map().same_dynamics(map)) throw UsageError("no built-in cycles for " + map.name);
      if (cycles_format == "json") {
        out << catalog_to_json(catalog).dump(2) << '\n';
      } else {
        print_catalog(catalog, out);
      }
      if (!cycles_save.empty()) save_catalog(catalog, cycles_save);
      return kExitOk;
    }

    if (*verify_cmd) {
      ClaimResult result;
      auto five_n_one_catalog = [&] {
        if (verify_catalog.empty()) return known_cycles("5n+1");
        return load_catalog(verify_catalog);
      };
      if (claim == "pow2") {
        const auto r_max = static_cast<std::uint32_t>(verify_limit.value_or(20));
        const CycleCatalog catalog = five_n_one_catalog();
        if (!verify_member.empty()) {
          result = verify_pow2_same_cycle(catalog.map(), parse_positive(verify_member, "--member"), r_max);
        } else {
          result = verify_pow2_same_cycle_all(catalog, r_max);
        }
      } else if (claim == "entry") {
        result = verify_10_pow2_entry(static_cast<std::uint32_t>(verify_limit.value_or(10)));
      } else if (claim == "digits") {
        result = verify_odd_digit_pattern(five_n_one_catalog());
      } else if (claim == "mult5") {
        std::vector<Natural> extras;
        for (const auto& e : verify_extra) extras.push_back(parse_positive(e, "--extra"));
        const std::uint64_t limit = verify_limit.value_or(100);
        if (limit < 5) throw UsageError("--limit must be >= 5 for mult5");
        result = verify_multiples_of_5(limit, extras);
      } else {
        const std::uint64_t k_max = verify_limit.value_or(10000);
        if (k_max < 1 || verify_steps < 1) throw UsageError("--limit and --steps must be >= 1");
        result = verify_correspondence(k_max, verify_steps);
      }

      for (const auto& f : result.failures) {
        out << "FAIL\t" << result.claim_id << "\tinput=" << f.input << "\tobserved=" << f.observed
            << "\texpected=" << f.expected << '\n';
      }
      for (const auto& [k, v] : result.measured_constants) out << "MEASURED\t" << result.claim_id << '\t' << k << '=' << v << '\n';
      out << (result.passed() ? "PASS" : "FAIL") << '\t' << result.claim_id << "\ttested=" << result.tested_instances
          << "\tfailures=" << result.failures.size() << '\n';
      return result.passed() ? kExitOk : kExitClaimFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CorruptionError& e) {
    err << "load error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace cyclemap
