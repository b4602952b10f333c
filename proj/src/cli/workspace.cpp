#include <fstream>
#include <sstream>

#include "zstab/cli.hpp"
#include "zstab/errors.hpp"

namespace zstab::cli {

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& id, const char* kind) {
  const auto it = m.find(id);
  if (it == m.end()) throw ParseError(std::string("unknown ") + kind + " '" + id + "'");
  return it->second;
}

std::string ring_ref(const io::Json& entry, const std::string& id) {
  if (!entry.is_object() || !entry.contains("ring") || !entry["ring"].is_string())
    throw ParseError("'" + id + "' must name its ring");
  return entry["ring"].get<std::string>();
}

}  // namespace

Workspace Workspace::from_json(const std::vector<io::Json>& docs, bool validate_rings) {
  static const char* kSections[] = {"rings", "classes", "charges", "gammas", "lattices"};
  std::map<std::string, io::Json> merged;
  for (const char* s : kSections) merged[s] = io::Json::object();
  for (const auto& doc : docs) {
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    for (const auto& [key, section] : doc.items()) {
      const auto it = merged.find(key);
      if (it == merged.end()) throw ParseError("unknown section '" + key + "'");
      if (!section.is_object()) throw ParseError("section '" + key + "' must be an object");
      for (const auto& [id, v] : section.items()) {
        if (it->second.contains(id)) throw ParseError("duplicate " + key + " id '" + id + "'");
        it->second[id] = v;
      }
    }
  }

  Workspace ws;
  for (const auto& [id, v] : merged["rings"].items()) {
    RingPtr r = io::ring_from_json(v);
    if (validate_rings) {
      const auto bad = validate_ring(*r);
      if (!bad.empty()) throw PreconditionError("ring '" + id + "' is invalid: " + bad.front().describe());
    }
    ws.rings_.emplace(id, std::move(r));
  }
  for (const auto& [id, v] : merged["classes"].items()) {
    io::Json entry = v;
    if (!entry.contains("label")) entry["label"] = id;
    ws.classes_.emplace(id, io::sheaf_from_json(ws.ring(ring_ref(v, id)), entry));
  }
  for (const auto& [id, v] : merged["charges"].items())
    ws.charges_.emplace(id, io::charge_from_json(ws.ring(ring_ref(v, id)), v));
  for (const auto& [id, v] : merged["gammas"].items())
    ws.gammas_.emplace(id, io::gamma_from_json(ws.ring(ring_ref(v, id)), v));
  for (const auto& [id, v] : merged["lattices"].items()) {
    const RingPtr& ring = ws.ring(ring_ref(v, id));
    auto resolve = [&](const std::string& cid) {
      const SheafClass& s = ws.sheaf(cid);
      if (s.ring().get() != ring.get()) throw RingMismatch();
      return s;
    };
    ws.lattices_.emplace(id, SubobjectLattice(io::lattice_from_json(ring, v, resolve)));
  }
  return ws;
}

Workspace Workspace::load(const std::vector<std::string>& files, bool validate_rings) {
  std::vector<io::Json> docs;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw ParseError("cannot open input file '" + f + "'");
    try {
      docs.push_back(io::Json::parse(in));
    } catch (const io::Json::parse_error& e) {
      throw ParseError(f + ": " + e.what());
    }
  }
  return from_json(docs, validate_rings);
}

const RingPtr& Workspace::ring(const std::string& id) const { return lookup(rings_, id, "ring"); }
const SheafClass& Workspace::sheaf(const std::string& id) const { return lookup(classes_, id, "class"); }
const ChargeData& Workspace::charge(const std::string& id) const { return lookup(charges_, id, "charge"); }
const GammaSpec& Workspace::gamma(const std::string& id) const { return lookup(gammas_, id, "gamma spec"); }
const SubobjectLattice& Workspace::lattice(const std::string& id) const { return lookup(lattices_, id, "lattice"); }

}  // namespace zstab::cli
