#pragma once

// Shared builders and random generators for the test binaries.

#include <random>
#include <string>
#include <vector>

#include "zstab/charge.hpp"
#include "zstab/cohring.hpp"
#include "zstab/filtr.hpp"
#include "zstab/stabvec.hpp"

namespace fx {

using namespace zstab;

inline RingPtr pn(int n) {
  static std::vector<RingPtr> cache(8);
  auto& r = cache.at(static_cast<std::size_t>(n));
  if (!r) r = projective_space_ring(n);
  return r;
}

inline GradedClass h(const RingPtr& ring, int power = 1, Rational c = 1) {
  return GradedClass::basis(ring, power, 0, std::move(c));
}

/// Class with ch = sum_p coeffs[p] H^p on a projective ring.
inline GradedClass poly_class(const RingPtr& ring, const std::vector<Rational>& coeffs) {
  GradedClass x(ring);
  for (std::size_t p = 0; p < coeffs.size(); ++p) x += h(ring, static_cast<int>(p), coeffs[p]);
  return x;
}

inline SheafClass sheaf(const RingPtr& ring, const std::vector<Rational>& coeffs, std::string label = {}) {
  return SheafClass::from_chern(poly_class(ring, coeffs), std::move(label));
}

inline SheafClass line_bundle(const RingPtr& ring, int a) {
  return SheafClass(projective_line_bundle_ch(ring, a), 0, "O(" + std::to_string(a) + ")");
}

inline ChargeData charge(const RingPtr& ring, StabilityVector rho, bool todd = false) {
  return ChargeData(h(ring), todd ? twist_from_total(projective_todd(ring)) : trivial_twist(ring), std::move(rho));
}

/// Slope-type vector on P^1: rho = (-1, i).
inline StabilityVector slope_rho_p1() {
  return StabilityVector({GaussianRational(Rational(-1)), GaussianRational::imaginary_unit()});
}

/// Deterministic hand-rolled generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= num, 1 <= q <= den.
  Rational rational(int num = 10, int den = 4) { return Rational(uniform(-num, num)) / uniform(1, den); }

  GaussianRational gaussian(int num = 3, int den = 3) { return {rational(num, den), rational(num, den)}; }

  CPoly cpoly(int max_degree, int num = 10, int den = 4) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(uniform(0, max_degree + 1)));
    for (auto& z : c) z = GaussianRational(rational(num, den), rational(num, den));
    return CPoly(std::move(c));
  }

  RPoly rpoly(int max_degree, int num = 10, int den = 4) {
    std::vector<Rational> c(static_cast<std::size_t>(uniform(0, max_degree + 1)));
    for (auto& x : c) x = rational(num, den);
    return RPoly(std::move(c));
  }

  /// Stability vector of length n+1 adapted to dimension d, by rejection.
  StabilityVector adapted_rho(int n, int d, int num = 3, int den = 3) {
    while (true) {
      std::vector<GaussianRational> rho;
      for (int i = 0; i <= n; ++i) rho.push_back(gaussian(num, den));
      if (is_stability_vector(rho) && is_adapted(rho, d)) return StabilityVector(std::move(rho));
    }
  }

  std::vector<GaussianRational> raw_rho(int n, int num = 3, int den = 3) {
    std::vector<GaussianRational> rho;
    for (int i = 0; i <= n; ++i) rho.push_back(gaussian(num, den));
    return rho;
  }

  /// Random class of codimension c on P^n with positive leading coefficient.
  SheafClass sheaf_of_codim(const RingPtr& ring, int c, int num = 6, int den = 3) {
    std::vector<Rational> co(static_cast<std::size_t>(ring->dim() + 1));
    co[static_cast<std::size_t>(c)] = Rational(uniform(1, num)) / uniform(1, den);
    for (int p = c + 1; p <= ring->dim(); ++p) co[static_cast<std::size_t>(p)] = rational(num, den);
    return SheafClass(poly_class(ring, co), c);
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// ---- lattices -------------------------------------------------------------

inline LatticeSpec::Node node(std::string id, const SheafClass& c) { return {std::move(id), c}; }
inline LatticeSpec::Node zero_node(std::string id = "0") { return {std::move(id), std::nullopt}; }

/// 0 < O(1), O < O + O(1) on P^2.
inline SubobjectLattice split_p2() {
  const RingPtr r = pn(2);
  const SheafClass o = line_bundle(r, 0), o1 = line_bundle(r, 1);
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("O(1)", o1), node("O", o), node("E", SheafClass(o.chern() + o1.chern(), 0))};
  s.leq = {{"0", "O(1)"}, {"0", "O"}, {"O(1)", "E"}, {"O", "E"}};
  s.join = {{"O(1)", "O", "E"}};
  s.meet = {{"O(1)", "O", "0"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// F + F on P^1 with the two summands and the diagonal.
inline SubobjectLattice double_p1(const std::vector<Rational>& f = {1, 2}) {
  const RingPtr r = pn(1);
  const SheafClass c = sheaf(r, f);
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("F1", c), node("F2", c), node("D", c), node("E", SheafClass(c.chern() * 2, 0))};
  s.leq = {{"0", "F1"}, {"0", "F2"}, {"0", "D"}, {"F1", "E"}, {"F2", "E"}, {"D", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// F + F on P^1 with only the two summands.
inline SubobjectLattice double_p1_plain() {
  const RingPtr r = pn(1);
  const SheafClass c = sheaf(r, {1, 2});
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("F1", c), node("F2", c), node("E", SheafClass(c.chern() * 2, 0))};
  s.leq = {{"0", "F1"}, {"0", "F2"}, {"F1", "E"}, {"F2", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// Chain 0 < A < B < E on P^1 with graded slopes 3 > 1 > -1.
inline SubobjectLattice chain_p1() {
  const RingPtr r = pn(1);
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("A", sheaf(r, {1, 3})), node("B", sheaf(r, {2, 4})), node("E", sheaf(r, {3, 3}))};
  s.leq = {{"0", "A"}, {"A", "B"}, {"B", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// Non-split 0 < F < E with equal slopes.
inline SubobjectLattice nonsplit_p1() {
  const RingPtr r = pn(1);
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("F", sheaf(r, {1, 0})), node("E", sheaf(r, {2, 0}))};
  s.leq = {{"0", "F"}, {"F", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// Six nodes: 0 < A' < A, 0 < B, joins A'+B < A+B = E. Slopes on P^1 are
/// A = (1,0), B = (2,0), A' = (1,-1). Two JH chains with Gr = {A, B}.
inline SubobjectLattice six_node_p1() {
  const RingPtr r = pn(1);
  const SheafClass a1 = sheaf(r, {1, -1}), a = sheaf(r, {1, 0}), b = sheaf(r, {2, 0});
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(),
             node("A'", a1),
             node("A", a),
             node("B", b),
             node("A'+B", SheafClass(a1.chern() + b.chern(), 0)),
             node("E", SheafClass(a.chern() + b.chern(), 0))};
  s.leq = {{"0", "A'"}, {"A'", "A"}, {"0", "B"}, {"A'", "A'+B"}, {"B", "A'+B"}, {"A", "E"}, {"A'+B", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// 0 < A, B < A+B < E on P^1 with A = B = (1,1), E = (3,1).
inline SubobjectLattice twin_p1() {
  const RingPtr r = pn(1);
  const SheafClass a = sheaf(r, {1, 1});
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("A", a), node("B", a), node("AB", sheaf(r, {2, 2})), node("E", sheaf(r, {3, 1}))};
  s.leq = {{"0", "A"}, {"0", "B"}, {"A", "AB"}, {"B", "AB"}, {"AB", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// Lenient lattice with two incomparable slope maximisers whose join has
/// smaller slope.
inline SubobjectLattice pathological_p1() {
  const RingPtr r = pn(1);
  const SheafClass a = sheaf(r, {1, 1});
  LatticeSpec s;
  s.ring = r;
  s.strict = false;
  s.nodes = {zero_node(), node("A", a), node("B", a), node("E", sheaf(r, {2, -3}))};
  s.leq = {{"0", "A"}, {"0", "B"}, {"A", "E"}, {"B", "E"}};
  s.top = "E";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/// 0 < I_pt < O on P^3.
inline SubobjectLattice ideal_point_p3() {
  const RingPtr r = pn(3);
  LatticeSpec s;
  s.ring = r;
  s.nodes = {zero_node(), node("I", sheaf(r, {1, 0, 0, -1})), node("O", sheaf(r, {1}))};
  s.leq = {{"0", "I"}, {"I", "O"}};
  s.top = "O";
  s.bottom = "0";
  return SubobjectLattice(s);
}

/**
 * Product of two chains on P^2: {0 < I_Za(a) < O(a)} x {0 < I_Zb(b) < O(b)},
 * where I_Z(a) has ch(O(a)) minus za points (za = 0 drops the middle node).
 */
inline SubobjectLattice product_p2(int a, int za, int b, int zb) {
  const RingPtr r = pn(2);
  auto chain = [&](int deg, int z, const std::string& tag) {
    std::vector<std::pair<std::string, GradedClass>> c{{"0", GradedClass(r)}};
    if (z > 0) c.emplace_back("I" + tag, projective_line_bundle_ch(r, deg) - h(r, 2, z));
    c.emplace_back("O" + tag, projective_line_bundle_ch(r, deg));
    return c;
  };
  const auto ca = chain(a, za, "a"), cb = chain(b, zb, "b");
  LatticeSpec s;
  s.ring = r;
  auto id = [&](std::size_t i, std::size_t j) { return ca[i].first + "|" + cb[j].first; };
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const GradedClass c = ca[i].second + cb[j].second;
      if (i == 0 && j == 0)
        s.nodes.push_back(zero_node(id(i, j)));
      else
        s.nodes.push_back(node(id(i, j), SheafClass::from_chern(c)));
      if (i + 1 < ca.size()) s.leq.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < cb.size()) s.leq.emplace_back(id(i, j), id(i, j + 1));
    }
  s.bottom = id(0, 0);
  s.top = id(ca.size() - 1, cb.size() - 1);
  return SubobjectLattice(s);
}

inline std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace fx
