#include "cyclemap/scanner.hpp"

#include <algorithm>
#include <thread>

#include "cyclemap/errors.hpp"

namespace cyclemap {

void Memo::insert(const Orbit& orbit) {
  Entry e;
  e.classification = orbit.classification;
  e.cycle = orbit.cycle_ref();
  e.entry_steps = orbit.entry_steps.value_or(0);
  e.steps_to_termination = orbit.steps_to_termination;
  e.peak = orbit.peak;
  e.bound_hit = orbit.bound_hit;
  entries_.insert_or_assign(orbit.seed, std::move(e));
}

const Memo::Entry* Memo::find(const Natural& seed) const {
  auto it = entries_.find(seed);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

// Tail of a trajectory that starts on a cataloged cycle at `value`.
KnownTail tail_on_cycle(const Cycle& cycle, const Natural& value, bool stop_at_one) {
  const auto& el = cycle.elements;
  const std::size_t start = static_cast<std::size_t>(std::find(el.begin(), el.end(), value) - el.begin());
  KnownTail tail;
  tail.peak = value;

  if (stop_at_one) {
    for (std::size_t k = 0; k < el.size(); ++k) {
      const Natural& v = el[(start + k) % el.size()];
      if (v > tail.peak) tail.peak = v;
      if (v == 1) {
        tail.classification = Classification::ReachesOne;
        tail.steps_to_termination = k;
        return tail;
      }
    }
  }
  tail.classification = Classification::EntersCycle;
  tail.cycle = cycle;
  tail.entry_steps = 0;
  tail.steps_to_termination = el.size();
  tail.peak = *std::max_element(el.begin(), el.end());
  return tail;
}

}  // namespace

Orbit memoized_classify(const MapSpec& map, const Natural& seed, const Bounds& bounds,
                        const Memo& memo, const CycleCatalog& catalog, Retention retention) {
  if (!memo.map().same_dynamics(map)) {
    throw ValidationError("memo", "built for " + memo.map().name + ", not " + map.name);
  }
  if (!catalog.map().same_dynamics(map)) {
    throw ValidationError("catalog", "built for " + catalog.map().name + ", not " + map.name);
  }
  if (!bounds.covered_by(memo.bounds())) {
    throw ValidationError("memo", "built under smaller or incompatible bounds");
  }

  TailProbe probe = [&](std::uint64_t, const Natural& value) -> std::optional<KnownTail> {
    if (const Cycle* c = catalog.find_containing(value)) {
      return tail_on_cycle(*c, value, bounds.stop_at_one);
    }
    const Memo::Entry* e = memo.find(value);
    if (!e) return std::nullopt;
    KnownTail tail;
    tail.classification = e->classification;
    tail.entry_steps = e->entry_steps;
    tail.steps_to_termination = e->steps_to_termination;
    tail.peak = e->peak;
    tail.bound_hit = e->bound_hit;
    if (e->classification == Classification::Undetermined &&
        memo.bounds().max_value_bits != bounds.max_value_bits) {
      return std::nullopt;
    }
    if (e->classification == Classification::EntersCycle) {
      // Only cycles the catalog vouches for are trusted.
      const Cycle* c = e->cycle ? catalog.find(*e->cycle) : nullptr;
      if (!c) return std::nullopt;
      tail.cycle = *c;
    }
    return tail;
  };
  return classify_orbit(map, seed, bounds, retention, probe);
}

ScanRecord to_record(const Orbit& orbit) {
  return ScanRecord{orbit.seed,  orbit.classification, orbit.cycle_ref(), orbit.entry_steps,
                    orbit.steps_to_termination, orbit.peak, orbit.bound_hit};
}

ScanSummary summarize(const std::vector<ScanRecord>& records) {
  ScanSummary s;
  for (auto c : {Classification::ReachesOne, Classification::EntersCycle,
                 Classification::Undetermined}) {
    s.by_classification[c] = 0;
  }
  for (const auto& r : records) {
    ++s.by_classification[r.classification];
    if (r.cycle_ref) ++s.by_cycle[*r.cycle_ref];
    if (r.classification == Classification::Undetermined) {
      s.undetermined.push_back({r.seed, r.bound_hit.value_or(BoundHit::MaxSteps)});
    }
  }
  return s;
}

namespace {

struct Shard {
  Natural first;
  std::uint64_t count = 0;
  std::vector<ScanRecord> records;
  CycleCatalog catalog;
};

void run_shard(const MapSpec& map, const Bounds& bounds, Shard& shard) {
  Memo memo(map, bounds);
  shard.records.reserve(shard.count);
  Natural seed = shard.first;
  for (std::uint64_t i = 0; i < shard.count; ++i, ++seed) {
    Orbit o = memoized_classify(map, seed, bounds, memo, shard.catalog);
    if (o.cycle && !shard.catalog.find(o.cycle->id())) {
      shard.catalog.register_cycle(*o.cycle, Provenance::discovered(seed));
    }
    memo.insert(o);
    shard.records.push_back(to_record(o));
  }
}

}  // namespace

ScanResult scan_range(const MapSpec& map, const Natural& lo, const Natural& hi,
                      const Bounds& bounds, const CycleCatalog& catalog, std::size_t workers) {
  if (lo < 1) throw ValidationError("lo", "must be >= 1, got " + to_decimal(lo));
  if (hi < lo) throw ValidationError("hi", "must be >= lo");
  if (workers < 1) throw ValidationError("workers", "must be >= 1");
  if (!catalog.map().same_dynamics(map)) {
    throw ValidationError("catalog", "built for " + catalog.map().name + ", not " + map.name);
  }
  bounds.validate();

  const Natural span = hi - lo + 1;
  if (!span.fits_ulong_p()) throw ValidationError("hi", "range too large");
  const std::uint64_t total = span.get_ui();
  const std::uint64_t shard_count = std::min<std::uint64_t>(workers, total);

  std::vector<Shard> shards;
  shards.reserve(shard_count);
  Natural next = lo;
  for (std::uint64_t s = 0; s < shard_count; ++s) {
    const std::uint64_t n = total / shard_count + (s < total % shard_count ? 1 : 0);
    shards.push_back(Shard{next, n, {}, catalog});
    next += n;
  }

  if (shards.size() == 1) {
    run_shard(map, bounds, shards.front());
  } else {
    std::vector<std::jthread> threads;
    std::vector<std::exception_ptr> errors(shards.size());
    threads.reserve(shards.size());
    for (std::size_t s = 0; s < shards.size(); ++s) {
      threads.emplace_back([&, s] {
        try {
          run_shard(map, bounds, shards[s]);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    threads.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ScanResult result{ScanReport{map, lo, hi, bounds, {}, {}, {}}, catalog};
  result.report.records.reserve(total);
  for (auto& shard : shards) {
    result.catalog.merge(shard.catalog);
    std::move(shard.records.begin(), shard.records.end(), std::back_inserter(result.report.records));
  }
  for (const auto* e : result.catalog.entries()) {
    if (!catalog.find(e->cycle.id())) result.report.catalog_delta.push_back(e->cycle);
  }
  result.report.summary = summarize(result.report.records);
  return result;
}

}  // namespace cyclemap
