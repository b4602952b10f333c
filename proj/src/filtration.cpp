#include <algorithm>

#include "zstab/errors.hpp"
#include "zstab/filtr.hpp"

namespace zstab {

MuValue interval_mu(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t x) {
  return mu_value(cond, l.difference(lo, x));
}

namespace {

template <class Cmp>
bool interval_check(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi, Cmp ok) {
  const MuValue whole = interval_mu(cond, l, lo, hi);
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.less(lo, x) && l.less(x, hi) && !ok(interval_mu(cond, l, lo, x), whole)) return false;
  return true;
}

void require_adapted(const MuCondition& cond, const SubobjectLattice& l) {
  const auto* s = std::get_if<SlopeLex>(&cond);
  if (!s) return;
  const int d = l.ring()->dim() - l.sheaf(l.top()).codim();
  if (!s->charge.rho().normalized() || !is_adapted(s->charge.rho().entries(), d))
    throw NotAdapted("stability vector is not adapted to sheaves of dimension " + std::to_string(d));
}

GradedPiece piece(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi) {
  SheafClass c = l.difference(lo, hi);
  MuValue mu = mu_value(cond, c);
  return {std::move(c), std::move(mu)};
}

}  // namespace

bool is_semistable_interval(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi) {
  return interval_check(cond, l, lo, hi, [](const MuValue& x, const MuValue& w) { return x <= w; });
}

bool is_stable_interval(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi) {
  return interval_check(cond, l, lo, hi, [](const MuValue& x, const MuValue& w) { return x < w; });
}

bool is_semistable(const MuCondition& cond, const SubobjectLattice& l) {
  return is_semistable_interval(cond, l, l.bottom(), l.top());
}

bool is_stable(const MuCondition& cond, const SubobjectLattice& l) {
  return is_stable_interval(cond, l, l.bottom(), l.top());
}

bool is_polystable(const MuCondition& cond, const SubobjectLattice& l) {
  if (!is_semistable(cond, l)) return false;
  const MuValue whole = mu_value(cond, l.sheaf(l.top()));
  for (std::size_t f = 0; f < l.size(); ++f) {
    if (!l.less(l.bottom(), f) || !l.less(f, l.top())) continue;
    if (mu_value(cond, l.sheaf(f)) != whole) continue;
    bool split = false;
    for (std::size_t c = 0; c < l.size() && !split; ++c)
      split = l.meet(f, c) == l.bottom() && l.join(f, c) == l.top() && l.cls(f) + l.cls(c) == l.cls(l.top());
    if (!split) return false;
  }
  return true;
}

std::size_t max_destabilizer(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> nodes;
  std::vector<MuValue> mus;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!l.less(lo, x) || !l.leq(x, hi)) continue;
    nodes.push_back(x);
    mus.push_back(interval_mu(cond, l, lo, x));
  }
  if (nodes.empty()) throw PreconditionError("max_destabilizer: empty interval");
  const MuValue best = *std::max_element(mus.begin(), mus.end());
  std::vector<std::size_t> maximisers;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (mus[i] == best) maximisers.push_back(nodes[i]);
  std::vector<std::size_t> maximal;
  for (std::size_t a : maximisers)
    if (std::none_of(maximisers.begin(), maximisers.end(), [&](std::size_t b) { return l.less(a, b); }))
      maximal.push_back(a);
  if (maximal.size() != 1) {
    std::vector<std::string> ids;
    for (std::size_t m : maximal) ids.push_back(l.id(m));
    std::sort(ids.begin(), ids.end());
    std::string msg = "no unique maximal destabiliser:";
    for (const auto& id : ids) msg += " '" + id + "'";
    throw NotUnique(msg, ids);
  }
  return maximal.front();
}

std::size_t max_destabilizer(const MuCondition& cond, const SubobjectLattice& l) {
  return max_destabilizer(cond, l, l.bottom(), l.top());
}

const char* to_string(Filtration::Mode m) { return m == Filtration::Mode::HN ? "hn" : "jh"; }

std::vector<std::string> chain_ids(const SubobjectLattice& l, const Filtration& f) {
  std::vector<std::string> ids;
  for (std::size_t i : f.chain) ids.push_back(l.id(i));
  return ids;
}

Filtration hn_filtration(const MuCondition& cond, const SubobjectLattice& l) {
  require_adapted(cond, l);
  Filtration f;
  f.mode = Filtration::Mode::HN;
  f.chain.push_back(l.bottom());
  for (std::size_t lo = l.bottom(); lo != l.top();) {
    const std::size_t next = max_destabilizer(cond, l, lo, l.top());
    f.graded.push_back(piece(cond, l, lo, next));
    f.chain.push_back(next);
    lo = next;
  }
  for (std::size_t i = 1; i < f.graded.size(); ++i)
    if (!(f.graded[i].mu < f.graded[i - 1].mu))
      throw InvalidLattice("graded slopes fail to decrease at '" + l.id(f.chain[i + 1]) + "'");
  return f;
}

namespace {

// x with lo < x, mu(x - lo) = target and [lo, x] stable.
std::vector<std::size_t> stable_steps(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo,
                                      const MuValue& target) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.less(lo, x) && interval_mu(cond, l, lo, x) == target && is_stable_interval(cond, l, lo, x)) out.push_back(x);
  return out;
}

void require_semistable(const MuCondition& cond, const SubobjectLattice& l) {
  if (!is_semistable(cond, l)) throw NotSemistable("the top object is not semistable");
}

void enumerate(const MuCondition& cond, const SubobjectLattice& l, const MuValue& target, Filtration& cur,
               std::vector<Filtration>& out) {
  const std::size_t lo = cur.chain.back();
  if (lo == l.top()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x : stable_steps(cond, l, lo, target)) {
    cur.chain.push_back(x);
    cur.graded.push_back(piece(cond, l, lo, x));
    enumerate(cond, l, target, cur, out);
    cur.chain.pop_back();
    cur.graded.pop_back();
  }
}

}  // namespace

Filtration jh_filtration(const MuCondition& cond, const SubobjectLattice& l) {
  require_semistable(cond, l);
  const MuValue target = mu_value(cond, l.sheaf(l.top()));
  Filtration f;
  f.mode = Filtration::Mode::JH;
  f.chain.push_back(l.bottom());
  for (std::size_t lo = l.bottom(); lo != l.top();) {
    const auto steps = stable_steps(cond, l, lo, target);
    std::optional<std::size_t> pick;
    for (std::size_t x : steps)
      if (std::none_of(steps.begin(), steps.end(), [&](std::size_t y) { return l.less(y, x); })) {
        pick = x;
        break;
      }
    if (!pick) throw NoStablePiece("no stable piece above '" + l.id(lo) + "'");
    f.graded.push_back(piece(cond, l, lo, *pick));
    f.chain.push_back(*pick);
    lo = *pick;
  }
  return f;
}

std::vector<Filtration> all_jh_chains(const MuCondition& cond, const SubobjectLattice& l) {
  require_semistable(cond, l);
  const MuValue target = mu_value(cond, l.sheaf(l.top()));
  Filtration cur;
  cur.mode = Filtration::Mode::JH;
  cur.chain.push_back(l.bottom());
  std::vector<Filtration> out;
  enumerate(cond, l, target, cur, out);
  return out;
}

std::vector<GradedClass> graded_object(const Filtration& f) {
  std::vector<GradedClass> gr;
  for (const auto& p : f.graded) gr.push_back(p.cls.chern());
  std::sort(gr.begin(), gr.end(),
            [](const GradedClass& a, const GradedClass& b) { return to_string(a) < to_string(b); });
  return gr;
}

bool is_saturated(const SubobjectLattice& l, std::size_t x) {
  if (x == l.top()) return true;
  const auto c = (l.cls(l.top()) - l.cls(x)).lowest_degree();
  return c && *c == l.sheaf(l.top()).codim();
}

Saturation saturate(const SubobjectLattice& l, std::size_t f) {
  std::vector<std::size_t> cands;
  for (std::size_t g = 0; g < l.size(); ++g)
    if (l.leq(f, g) && is_saturated(l, g)) cands.push_back(g);
  std::vector<std::size_t> minimal;
  for (std::size_t a : cands)
    if (std::none_of(cands.begin(), cands.end(), [&](std::size_t b) { return l.less(b, a); })) minimal.push_back(a);
  if (minimal.size() != 1) throw NoSaturation("no unique saturation of '" + l.id(f) + "'");
  return {minimal.front(), minimal.front() == l.top() && f != l.top()};
}

namespace {

template <class Cmp>
bool saturated_check(const MuCondition& cond, const SubobjectLattice& l, Cmp ok) {
  const MuValue whole = mu_value(cond, l.sheaf(l.top()));
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.less(l.bottom(), x) && l.less(x, l.top()) && is_saturated(l, x) && !ok(mu_value(cond, l.sheaf(x)), whole))
      return false;
  return true;
}

}  // namespace

bool is_semistable_saturated_only(const MuCondition& cond, const SubobjectLattice& l) {
  return saturated_check(cond, l, [](const MuValue& x, const MuValue& w) { return x <= w; });
}

bool is_stable_saturated_only(const MuCondition& cond, const SubobjectLattice& l) {
  return saturated_check(cond, l, [](const MuValue& x, const MuValue& w) { return x < w; });
}

}  // namespace zstab
