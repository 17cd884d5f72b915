#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "cyclemap/scanner.hpp"

namespace cyclemap {

// One header row, then one row per record:
//   seed,classification,cycle_min,cycle_len,entry_steps,steps,peak
// Absent optional fields are empty cells.
void write_csv(const ScanReport& report, std::ostream& out);
// Throws CorruptionError on a malformed header or row.
std::vector<ScanRecord> read_csv(std::istream& in);

// Field names mirror ScanReport; every integer is a decimal string.
nlohmann::ordered_json report_to_json(const ScanReport& report);
ScanReport report_from_json(const nlohmann::json& doc);

}  // namespace cyclemap
