#include <map>

#include "zstab/errors.hpp"
#include "zstab/filtr.hpp"

namespace zstab {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

SubobjectLattice::SubobjectLattice(const LatticeSpec& spec) { validate_and_close(spec); }

void SubobjectLattice::validate_and_close(const LatticeSpec& spec) {
  if (!spec.ring) throw InvalidLattice("lattice has no ring");
  ring_ = spec.ring;
  strict_ = spec.strict;
  const std::size_t n = spec.nodes.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(spec.nodes[i].id, i).second) throw InvalidLattice("duplicate node id '" + spec.nodes[i].id + "'");
    ids_.push_back(spec.nodes[i].id);
  }
  auto find = [&](const std::string& id) {
    const auto it = index.find(id);
    if (it == index.end()) throw InvalidLattice("unknown node id '" + id + "'");
    return it->second;
  };
  bottom_ = find(spec.bottom);
  top_ = find(spec.top);
  if (n < 2 || top_ == bottom_) throw InvalidLattice("lattice needs distinct top and bottom");

  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = spec.nodes[i];
    if (i == bottom_) {
      if (node.cls && !node.cls->chern().is_zero()) throw InvalidLattice("bottom node must carry the zero class");
      classes_.emplace_back(ring_);
      sheaves_.emplace_back();
      continue;
    }
    if (!node.cls) throw InvalidLattice("node '" + node.id + "' has no class");
    if (node.cls->ring().get() != ring_.get()) throw RingMismatch();
    classes_.push_back(node.cls->chern());
    sheaves_.push_back(node.cls);
  }

  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  for (const auto& [a, b] : spec.leq) leq_[find(a) * n + find(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i)) throw InvalidLattice("order is not antisymmetric: '" + ids_[i] + "', '" + ids_[j] + "'");
    if (!leq(bottom_, i)) throw InvalidLattice("bottom is not below '" + ids_[i] + "'");
    if (!leq(i, top_)) throw InvalidLattice("'" + ids_[i] + "' is not below top");
  }

  join_.assign(n * n, kNone);
  meet_.assign(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t lub = kNone, glb = kNone;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && (lub == kNone || leq(c, lub))) lub = c;
        if (leq(c, a) && leq(c, b) && (glb == kNone || leq(glb, c))) glb = c;
      }
      // The candidate found by the scan must bound every other one.
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && !leq(lub, c))
          throw InvalidLattice("no join of '" + ids_[a] + "' and '" + ids_[b] + "'");
        if (leq(c, a) && leq(c, b) && !leq(c, glb))
          throw InvalidLattice("no meet of '" + ids_[a] + "' and '" + ids_[b] + "'");
      }
      join_[a * n + b] = lub;
      meet_[a * n + b] = glb;
    }
  }
  for (const auto& t : spec.join)
    if (join(find(t[0]), find(t[1])) != find(t[2]))
      throw InvalidLattice("join('" + t[0] + "', '" + t[1] + "') is not the least upper bound '" + t[2] + "'");
  for (const auto& t : spec.meet)
    if (meet(find(t[0]), find(t[1])) != find(t[2]))
      throw InvalidLattice("meet('" + t[0] + "', '" + t[1] + "') is not the greatest lower bound '" + t[2] + "'");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (strict_ && a < b && cls(join(a, b)) + cls(meet(a, b)) != cls(a) + cls(b))
        throw InvalidLattice("class additivity fails for '" + ids_[a] + "', '" + ids_[b] + "'");
      if (less(a, b) && (cls(b) - cls(a)).is_zero())
        throw InvalidLattice("zero difference class on '" + ids_[a] + "' < '" + ids_[b] + "'");
    }
  }
}

std::size_t SubobjectLattice::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == id) return i;
  throw InvalidLattice("unknown node id '" + id + "'");
}

const SheafClass& SubobjectLattice::sheaf(std::size_t i) const {
  if (!sheaves_.at(i)) throw PreconditionError("the bottom node has no sheaf class");
  return *sheaves_[i];
}

SheafClass SubobjectLattice::difference(std::size_t lo, std::size_t hi) const {
  if (lo == bottom_) return sheaf(hi);
  return SheafClass::from_chern(cls(hi) - cls(lo), id(hi) + "/" + id(lo));
}

LatticeSpec SubobjectLattice::spec() const {
  LatticeSpec s;
  s.ring = ring_;
  s.strict = strict_;
  s.top = ids_[top_];
  s.bottom = ids_[bottom_];
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) s.nodes.push_back({ids_[i], sheaves_[i]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (less(a, b)) s.leq.emplace_back(ids_[a], ids_[b]);
      if (a < b) {
        s.join.push_back({ids_[a], ids_[b], ids_[join(a, b)]});
        s.meet.push_back({ids_[a], ids_[b], ids_[meet(a, b)]});
      }
    }
  return s;
}

SubobjectLattice SubobjectLattice::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw PreconditionError("permutation size mismatch");
  LatticeSpec s = spec();
  std::vector<LatticeSpec::Node> nodes;
  for (std::size_t i : perm) nodes.push_back(s.nodes.at(i));
  s.nodes = std::move(nodes);
  return SubobjectLattice(s);
}

}  // namespace zstab
