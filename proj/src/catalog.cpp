#include "cyclemap/catalog.hpp"

#include <fstream>
#include <initializer_list>

#include "cyclemap/errors.hpp"

namespace cyclemap {

bool Provenance::preferred_over(const Provenance& other) const {
  if (source != other.source) return source == Source::Fixture;
  if (seed.has_value() != other.seed.has_value()) return seed.has_value();
  if (seed && *seed != *other.seed) return *seed < *other.seed;
  return note < other.note;
}

std::string to_string(const Provenance& p) {
  std::string out = p.source == Provenance::Source::Fixture ? "fixture" : "discovered";
  if (p.seed) out += " from seed " + to_decimal(*p.seed);
  if (!p.note.empty()) out += " (" + p.note + ")";
  return out;
}

bool CycleCatalog::register_cycle(const Cycle& cycle, Provenance provenance) {
  // Disjointness first: any overlap with a stored cycle is either the same
  // cycle or evidence of corruption, whatever the closure check would say.
  const Natural* overlap = nullptr;
  std::size_t shared = 0;
  for (const auto& v : cycle.elements) {
    auto it = owner_.find(v);
    if (it == owner_.end()) continue;
    if (overlap && *overlap != it->second) {
      throw CorruptionError("cycle starting " + to_decimal(cycle.elements.front()) +
                            " intersects more than one cataloged cycle");
    }
    overlap = &it->second;
    ++shared;
  }

  if (overlap) {
    const Entry& existing = entries_.at(*overlap);
    if (shared == cycle.length() && shared == existing.cycle.length() &&
        rotate_to_min(cycle.elements) == existing.cycle.elements) {
      return false;
    }
    throw CorruptionError("cycle starting " + to_decimal(cycle.elements.front()) + " shares " +
                          std::to_string(shared) + " element(s) with cataloged " +
                          to_string(existing.cycle.id()));
  }

  Cycle canonical = canonicalize(map_, cycle.elements);
  for (const auto& v : canonical.elements) owner_.emplace(v, canonical.min_element());
  Natural key = canonical.min_element();
  entries_.emplace(std::move(key), Entry{std::move(canonical), std::move(provenance)});
  return true;
}

std::optional<CycleId> CycleCatalog::lookup(const Natural& value) const {
  if (const Cycle* c = find_containing(value)) return c->id();
  return std::nullopt;
}

const Cycle* CycleCatalog::find(const CycleId& id) const {
  auto it = entries_.find(id.min);
  if (it == entries_.end() || it->second.cycle.length() != id.length) return nullptr;
  return &it->second.cycle;
}

const Cycle* CycleCatalog::find_containing(const Natural& value) const {
  auto it = owner_.find(value);
  if (it == owner_.end()) return nullptr;
  return &entries_.at(it->second).cycle;
}

const CycleCatalog::Entry* CycleCatalog::entry(const Natural& min_element) const {
  auto it = entries_.find(min_element);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const CycleCatalog::Entry*> CycleCatalog::entries() const {
  std::vector<const Entry*> out;
  out.reserve(entries_.size());
  for (const auto& [_, e] : entries_) out.push_back(&e);
  return out;
}

void CycleCatalog::merge(const CycleCatalog& other) {
  if (!map_.same_dynamics(other.map_)) {
    throw ValidationError("catalog", "cannot merge " + other.map_.name + " catalog into " + map_.name);
  }
  for (const auto& [min, e] : other.entries_) {
    if (!register_cycle(e.cycle, e.provenance)) {
      Entry& mine = entries_.at(min);
      if (e.provenance.preferred_over(mine.provenance)) mine.provenance = e.provenance;
    }
  }
}

bool operator==(const CycleCatalog& l, const CycleCatalog& r) {
  if (!(l.map_ == r.map_) || l.entries_.size() != r.entries_.size()) return false;
  auto li = l.entries_.begin();
  for (auto ri = r.entries_.begin(); ri != r.entries_.end(); ++li, ++ri) {
    if (!(li->second.cycle == ri->second.cycle) ||
        !(li->second.provenance == ri->second.provenance)) {
      return false;
    }
  }
  return true;
}

namespace {

Cycle cycle_of(std::initializer_list<unsigned long> values) {
  Cycle c;
  for (unsigned long v : values) c.elements.emplace_back(v);
  return c;
}

}  // namespace

CycleCatalog known_cycles(std::string_view map_name) {
  auto map = preset(map_name);
  if (!map) throw ValidationError("map_name", "no known cycles for '" + std::string(map_name) + "'");

  CycleCatalog catalog(*map);
  auto add = [&](Cycle c) {
    // register_cycle re-checks closure, so a typo here fails loudly.
    if (!catalog.register_cycle(c, Provenance::fixture(map->name + " cycle through " +
                                                       to_decimal(c.elements.front())))) {
      throw CorruptionError("duplicate fixture cycle in " + map->name);
    }
  };

  if (map->name == "5n+1") {
    add(cycle_of({13, 66, 33, 166, 83, 416, 208, 104, 52, 26}));
    add(cycle_of({17, 86, 43, 216, 108, 54, 27, 136, 68, 34}));
  } else if (map->name == "3n+5") {
    add(cycle_of({1, 8, 4, 2}));
    add(cycle_of({5, 20, 10}));
    add(cycle_of({19, 62, 31, 98, 49, 152, 76, 38}));
    add(cycle_of({23, 74, 37, 116, 58, 29, 92, 46}));
  } else {
    add(cycle_of({1, 4, 2}));
  }
  return catalog;
}

nlohmann::ordered_json catalog_to_json(const CycleCatalog& catalog) {
  nlohmann::ordered_json doc;
  doc["map"] = {{"a", std::to_string(catalog.map().a)},
                {"b", std::to_string(catalog.map().b)},
                {"name", catalog.map().name}};
  auto cycles = nlohmann::ordered_json::array();
  auto provenance = nlohmann::ordered_json::array();
  for (const auto* e : catalog.entries()) {
    auto elems = nlohmann::ordered_json::array();
    for (const auto& v : e->cycle.elements) elems.push_back(to_decimal(v));
    cycles.push_back(std::move(elems));

    nlohmann::ordered_json p;
    p["source"] = e->provenance.source == Provenance::Source::Fixture ? "fixture" : "discovered";
    if (e->provenance.seed) p["seed"] = to_decimal(*e->provenance.seed);
    if (!e->provenance.note.empty()) p["note"] = e->provenance.note;
    provenance.push_back(std::move(p));
  }
  doc["cycles"] = std::move(cycles);
  doc["provenance"] = std::move(provenance);
  return doc;
}

namespace {

std::int64_t parse_map_param(const nlohmann::json& v, const char* field) {
  if (!v.is_string()) throw CorruptionError(std::string("map.") + field + " must be a decimal string");
  Natural n = parse_natural(v.get<std::string>());
  if (!n.fits_slong_p()) throw CorruptionError(std::string("map.") + field + " out of range");
  return n.get_si();
}

}  // namespace

CycleCatalog catalog_from_json(const nlohmann::json& doc) {
  try {
    const auto& m = doc.at("map");
    MapSpec map = make_map(parse_map_param(m.at("a"), "a"), parse_map_param(m.at("b"), "b"),
                           m.at("name").get<std::string>());
    CycleCatalog catalog(map);

    const auto& cycles = doc.at("cycles");
    const auto& provenance = doc.at("provenance");
    if (!cycles.is_array() || !provenance.is_array() || cycles.size() != provenance.size()) {
      throw CorruptionError("cycles and provenance must be arrays of equal length");
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      Cycle c;
      std::string label = "cycle #" + std::to_string(i) + " [";
      for (const auto& v : cycles[i]) {
        c.elements.push_back(parse_natural(v.get<std::string>()));
        label += (c.elements.size() > 1 ? "," : "") + v.get<std::string>();
      }
      label += "]";

      const auto& p = provenance[i];
      Provenance prov;
      prov.source = p.at("source").get<std::string>() == "fixture" ? Provenance::Source::Fixture
                                                                    : Provenance::Source::Discovered;
      if (p.contains("seed")) prov.seed = parse_natural(p.at("seed").get<std::string>());
      if (p.contains("note")) prov.note = p.at("note").get<std::string>();

      try {
        if (!catalog.register_cycle(c, std::move(prov))) {
          throw CorruptionError("duplicate cycle");
        }
      } catch (const std::exception& e) {
        throw CorruptionError(label + ": " + e.what());
      }
    }
    return catalog;
  } catch (const CorruptionError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptionError(std::string("malformed catalog: ") + e.what());
  }
}

void save_catalog(const CycleCatalog& catalog, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << catalog_to_json(catalog).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

CycleCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CorruptionError(path.string() + ": " + e.what());
  }
  return catalog_from_json(doc);
}

}  // namespace cyclemap
