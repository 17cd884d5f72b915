#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cyclemap/catalog.hpp"
#include "cyclemap/cycle.hpp"
#include "cyclemap/map.hpp"
#include "cyclemap/natural.hpp"
#include "cyclemap/orbit.hpp"

namespace cyclemap {

// Seed -> classification cache for one map and one set of bounds.
class Memo {
 public:
  struct Entry {
    Classification classification = Classification::Undetermined;
    std::optional<CycleId> cycle;
    std::uint64_t entry_steps = 0;
    std::uint64_t steps_to_termination = 0;
    Natural peak;
    std::optional<BoundHit> bound_hit;
  };

  Memo(MapSpec map, Bounds bounds) : map_(std::move(map)), bounds_(bounds) {}

  const MapSpec& map() const { return map_; }
  const Bounds& bounds() const { return bounds_; }
  std::size_t size() const { return entries_.size(); }

  void insert(const Orbit& orbit);
  const Entry* find(const Natural& seed) const;

 private:
  MapSpec map_;
  Bounds bounds_;
  std::unordered_map<Natural, Entry, NaturalHash> entries_;
};

// Same answer as classify_orbit (classification, cycle, entry_steps,
// steps_to_termination, peak), but stops early when the trajectory touches a
// cataloged cycle or a memoized seed. Throws ValidationError when memo or
// catalog belong to another map, or when memo was built under bounds smaller
// than `bounds` or with a different stop_at_one.
Orbit memoized_classify(const MapSpec& map, const Natural& seed, const Bounds& bounds,
                        const Memo& memo, const CycleCatalog& catalog,
                        Retention retention = Retention::none());

struct ScanRecord {
  Natural seed;
  Classification classification = Classification::Undetermined;
  std::optional<CycleId> cycle_ref;
  std::optional<std::uint64_t> entry_steps;
  std::uint64_t steps_to_termination = 0;
  Natural peak;
  std::optional<BoundHit> bound_hit;

  friend bool operator==(const ScanRecord& l, const ScanRecord& r) {
    return l.seed == r.seed && l.classification == r.classification && l.cycle_ref == r.cycle_ref &&
           l.entry_steps == r.entry_steps && l.steps_to_termination == r.steps_to_termination &&
           l.peak == r.peak && l.bound_hit == r.bound_hit;
  }
};

ScanRecord to_record(const Orbit& orbit);

struct ScanSummary {
  std::map<Classification, std::uint64_t> by_classification;
  std::map<CycleId, std::uint64_t> by_cycle;
  struct Undetermined {
    Natural seed;
    BoundHit bound;
  };
  std::vector<Undetermined> undetermined;
};

ScanSummary summarize(const std::vector<ScanRecord>& records);

struct ScanReport {
  MapSpec map;
  Natural lo;
  Natural hi;
  Bounds bounds;
  std::vector<ScanRecord> records;  // ordered by seed
  ScanSummary summary;
  std::vector<Cycle> catalog_delta;  // new cycles, ordered by minimum
};

struct ScanResult {
  ScanReport report;
  CycleCatalog catalog;
};

// Classifies every seed in [lo, hi] using `workers` contiguous shards. Each
// shard owns a copy of the catalog and a private memo; shard catalogs are
// merged afterwards, so the result does not depend on the worker count.
// Throws ValidationError for lo < 1, lo > hi, workers < 1, or a catalog for a
// different map.
ScanResult scan_range(const MapSpec& map, const Natural& lo, const Natural& hi,
                      const Bounds& bounds, const CycleCatalog& catalog, std::size_t workers = 1);

}  // namespace cyclemap
