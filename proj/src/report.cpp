#include "cyclemap/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cyclemap/errors.hpp"

namespace cyclemap {

namespace {

constexpr const char* kCsvHeader = "seed,classification,cycle_min,cycle_len,entry_steps,steps,peak";

std::uint64_t parse_u64(const std::string& text) {
  Natural n = parse_natural(text);
  if (!n.fits_ulong_p()) throw CorruptionError("integer out of range: " + text);
  return n.get_ui();
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

void write_csv(const ScanReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << to_decimal(r.seed) << ',' << to_string(r.classification) << ',';
    if (r.cycle_ref) out << to_decimal(r.cycle_ref->min);
    out << ',';
    if (r.cycle_ref) out << r.cycle_ref->length;
    out << ',';
    if (r.entry_steps) out << *r.entry_steps;
    out << ',' << r.steps_to_termination << ',' << to_decimal(r.peak) << '\n';
  }
}

std::vector<ScanRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw CorruptionError("scan CSV: unexpected header '" + line + "'");
  }
  std::vector<ScanRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    try {
      auto cells = split_row(line);
      if (cells.size() != 7) throw CorruptionError("expected 7 cells");
      ScanRecord r;
      r.seed = parse_natural(cells[0]);
      auto c = parse_classification(cells[1]);
      if (!c) throw CorruptionError("unknown classification '" + cells[1] + "'");
      r.classification = *c;
      if (cells[2].empty() != cells[3].empty()) throw CorruptionError("partial cycle reference");
      if (!cells[2].empty()) r.cycle_ref = CycleId{parse_natural(cells[2]), parse_u64(cells[3])};
      if (!cells[4].empty()) r.entry_steps = parse_u64(cells[4]);
      r.steps_to_termination = parse_u64(cells[5]);
      r.peak = parse_natural(cells[6]);
      records.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw CorruptionError("scan CSV row " + std::to_string(row) + ": " + e.what());
    }
  }
  return records;
}

nlohmann::ordered_json report_to_json(const ScanReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["map"] = {{"a", std::to_string(report.map.a)},
                {"b", std::to_string(report.map.b)},
                {"name", report.map.name}};
  doc["range"] = {{"lo", to_decimal(report.lo)}, {"hi", to_decimal(report.hi)}};
  doc["bounds"] = {{"max_steps", std::to_string(report.bounds.max_steps)},
                   {"max_value_bits", std::to_string(report.bounds.max_value_bits)},
                   {"stop_at_one", report.bounds.stop_at_one}};

  auto records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["seed"] = to_decimal(r.seed);
    rec["classification"] = to_string(r.classification);
    rec["cycle_ref"] = r.cycle_ref ? ordered_json{{"min", to_decimal(r.cycle_ref->min)},
                                                  {"length", std::to_string(r.cycle_ref->length)}}
                                   : ordered_json(nullptr);
    rec["entry_steps"] = r.entry_steps ? ordered_json(std::to_string(*r.entry_steps)) : ordered_json(nullptr);
    rec["steps_to_termination"] = std::to_string(r.steps_to_termination);
    rec["peak"] = to_decimal(r.peak);
    rec["bound_hit"] = r.bound_hit ? ordered_json(to_string(*r.bound_hit)) : ordered_json(nullptr);
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);

  ordered_json summary;
  ordered_json counts;
  for (const auto& [c, n] : report.summary.by_classification) counts[std::string(to_string(c))] = std::to_string(n);
  summary["counts"] = std::move(counts);
  auto cycles = ordered_json::array();
  for (const auto& [id, n] : report.summary.by_cycle) {
    cycles.push_back({{"min", to_decimal(id.min)}, {"length", std::to_string(id.length)}, {"count", std::to_string(n)}});
  }
  summary["cycles"] = std::move(cycles);
  auto undetermined = ordered_json::array();
  for (const auto& u : report.summary.undetermined) {
    undetermined.push_back({{"seed", to_decimal(u.seed)}, {"bound", to_string(u.bound)}});
  }
  summary["undetermined"] = std::move(undetermined);
  doc["summary"] = std::move(summary);

  auto delta = ordered_json::array();
  for (const auto& c : report.catalog_delta) {
    auto elems = ordered_json::array();
    for (const auto& v : c.elements) elems.push_back(to_decimal(v));
    delta.push_back(std::move(elems));
  }
  doc["catalog_delta"] = std::move(delta);
  return doc;
}

ScanReport report_from_json(const nlohmann::json& doc) {
  try {
    auto str = [](const nlohmann::json& v) { return v.get<std::string>(); };
    ScanReport report;
    const auto& m = doc.at("map");
    report.map = make_map(static_cast<std::int64_t>(parse_u64(str(m.at("a")))),
                          static_cast<std::int64_t>(parse_u64(str(m.at("b")))), str(m.at("name")));
    report.lo = parse_natural(str(doc.at("range").at("lo")));
    report.hi = parse_natural(str(doc.at("range").at("hi")));
    const auto& b = doc.at("bounds");
    report.bounds.max_steps = parse_u64(str(b.at("max_steps")));
    report.bounds.max_value_bits = parse_u64(str(b.at("max_value_bits")));
    report.bounds.stop_at_one = b.at("stop_at_one").get<bool>();

    for (const auto& rec : doc.at("records")) {
      ScanRecord r;
      r.seed = parse_natural(str(rec.at("seed")));
      auto c = parse_classification(str(rec.at("classification")));
      if (!c) throw CorruptionError("unknown classification");
      r.classification = *c;
      if (!rec.at("cycle_ref").is_null()) {
        r.cycle_ref = CycleId{parse_natural(str(rec["cycle_ref"].at("min"))),
                              parse_u64(str(rec["cycle_ref"].at("length")))};
      }
      if (!rec.at("entry_steps").is_null()) r.entry_steps = parse_u64(str(rec["entry_steps"]));
      r.steps_to_termination = parse_u64(str(rec.at("steps_to_termination")));
      r.peak = parse_natural(str(rec.at("peak")));
      if (rec.contains("bound_hit") && !rec["bound_hit"].is_null()) {
        auto hit = parse_bound_hit(str(rec["bound_hit"]));
        if (!hit) throw CorruptionError("unknown bound");
        r.bound_hit = *hit;
      }
      report.records.push_back(std::move(r));
    }
    report.summary = summarize(report.records);
    for (const auto& c : doc.at("catalog_delta")) {
      Cycle cycle;
      for (const auto& v : c) cycle.elements.push_back(parse_natural(str(v)));
      report.catalog_delta.push_back(std::move(cycle));
    }
    return report;
  } catch (const CorruptionError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptionError(std::string("malformed scan report: ") + e.what());
  }
}

}  // namespace cyclemap
