#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cyclemap/cycle.hpp"
#include "cyclemap/map.hpp"
#include "cyclemap/natural.hpp"

namespace cyclemap {

// Where a catalog entry came from.
struct Provenance {
  enum class Source { Fixture, Discovered };
  Source source = Source::Discovered;
  std::optional<Natural> seed;  // discovering seed, for Discovered entries
  std::string note;

  static Provenance fixture(std::string note = {}) { return {Source::Fixture, std::nullopt, std::move(note)}; }
  static Provenance discovered(Natural seed) { return {Source::Discovered, std::move(seed), {}}; }

  // Total order used when two catalogs disagree about the same cycle:
  // fixtures first, then the smallest discovering seed.
  bool preferred_over(const Provenance& other) const;

  friend bool operator==(const Provenance& l, const Provenance& r) {
    return l.source == r.source && l.seed == r.seed && l.note == r.note;
  }
};

std::string to_string(const Provenance& p);

// Known cycles of one map, keyed by minimum element. Cycles are pairwise
// disjoint and step-closed under map(); both are checked on every insert.
// Const member functions may be called concurrently; mutation requires
// exclusive access.
class CycleCatalog {
 public:
  struct Entry {
    Cycle cycle;
    Provenance provenance;
  };

  explicit CycleCatalog(MapSpec map) : map_(std::move(map)) {}

  const MapSpec& map() const { return map_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Inserts the cycle unless one with the same minimum is already present.
  // Returns true if the cycle was new. Throws ValidationError if the cycle is
  // not a canonical step-closed loop of map(), and CorruptionError if it
  // shares some but not all elements with an existing entry.
  bool register_cycle(const Cycle& cycle, Provenance provenance);

  // The cycle containing value, if cataloged.
  std::optional<CycleId> lookup(const Natural& value) const;
  const Cycle* find(const CycleId& id) const;
  const Cycle* find_containing(const Natural& value) const;
  const Entry* entry(const Natural& min_element) const;

  // Entries ordered by min_element.
  std::vector<const Entry*> entries() const;

  // Set union. Commutative and associative: a cycle present in both keeps the
  // preferred provenance. Throws ValidationError when the maps differ.
  void merge(const CycleCatalog& other);

  friend bool operator==(const CycleCatalog& l, const CycleCatalog& r);

 private:
  MapSpec map_;
  std::map<Natural, Entry> entries_;
  std::unordered_map<Natural, Natural, NaturalHash> owner_;  // element -> min
};

// Hard-coded cycles observed for the three preset maps; each is re-validated
// against the map when built. Throws ValidationError("map_name") for any other
// name.
CycleCatalog known_cycles(std::string_view map_name);

// Catalog document:
//   {"map": {"a": "5", "b": "1", "name": "5n+1"},
//    "cycles": [["13", "66", ...], ...],
//    "provenance": [{"source": "fixture"|"discovered", "seed": "...", "note": "..."}, ...]}
// Integers are decimal strings; cycles are sorted by minimum element.
nlohmann::ordered_json catalog_to_json(const CycleCatalog& catalog);

// Throws CorruptionError naming the offending cycle when a cycle is not closed
// under the map, overlaps another, or the document is malformed.
CycleCatalog catalog_from_json(const nlohmann::json& doc);

void save_catalog(const CycleCatalog& catalog, const std::filesystem::path& path);
CycleCatalog load_catalog(const std::filesystem::path& path);

}  // namespace cyclemap
