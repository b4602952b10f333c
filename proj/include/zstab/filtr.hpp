#pragma once

/**
 * @file filtr.hpp
 * @brief Finite sub-object lattices, mu-conditions and HN / JH filtrations.
 *
 * A SubobjectLattice is a finite stand-in for the sub-sheaves of an ambient
 * object: nodes carry numerical classes, the order is inclusion, and interval
 * computations use difference classes. A MuCondition evaluates a class into
 * a totally ordered value space.
 */

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zstab/charge.hpp"
#include "zstab/cohring.hpp"
#include "zstab/exact.hpp"

namespace zstab {

/**
 * Block data for Deg(E) = sum_k (sum_j Gamma_{k,j} ch_{<=k}(E) eps^j) eps^{D_k}
 * with D_k = d_1 + ... + d_{k-1}, top-degree parts integrated.
 */
struct GammaSpec {
  GradedClass omega;                            ///< polarisation used for Rk
  std::vector<int> block_degrees;               ///< d_1 .. d_n, each >= 1
  std::vector<std::vector<GradedClass>> gamma;  ///< gamma[k-1][j], j < d_k

  /// Throws PreconditionError on shape errors, RingMismatch on mixed rings.
  void validate() const;
};

/// Deg(E) in Q[eps].
RPoly gamma_degree(const GammaSpec& spec, const SheafClass& e);

/// integral(Gamma_{k,0} cup V) > 0 for a test class V of codimension k in 1..n.
bool gamma_positivity(const GammaSpec& spec, const SheafClass& v);

struct SlopeLex {
  ChargeData charge;
};
struct GiesekerReduced {
  ChargeData charge;
};
struct GammaDegree {
  GammaSpec spec;
};
struct PZd {
  ChargeData charge;
  int d;
};

using MuCondition = std::variant<SlopeLex, GiesekerReduced, GammaDegree, PZd>;

std::string condition_name(const MuCondition& cond);

/// An element of one of the ordered value spaces.
struct MuValue {
  enum class Order { Lex, AtInfinity, AtZeroPlus };
  Order order = Order::Lex;
  std::vector<ExtReal> tuple;  ///< Lex
  RPoly poly;                  ///< AtInfinity, AtZeroPlus

  /// Throws std::invalid_argument when the orders differ.
  friend std::strong_ordering operator<=>(const MuValue& a, const MuValue& b);
  friend bool operator==(const MuValue& a, const MuValue& b) { return (a <=> b) == 0; }
};

std::string to_string(const MuValue& v);

/**
 * SlopeLex: slope vector. GiesekerReduced: Hilbert polynomial / Rk, compared
 * at infinity. GammaDegree: Deg / Rk, compared at 0+. PZd: degree tuple / Rk,
 * lexicographic. Rk is the generalised rank deg_c under the condition's
 * polarisation. Throws NonEffective from degree validation.
 */
MuValue mu_value(const MuCondition& cond, const SheafClass& f);

struct AdaptedCheck {
  enum class Status { Certified, Counterexample, Unknown };
  Status status = Status::Unknown;
  std::optional<std::size_t> pair;  ///< failing sample, if any
  std::string reason;
};

/**
 * Adaptedness to sheaves of dimension d. SlopeLex and PZd are decided by the
 * rho criterion. Otherwise each sample (E, F), with F a sub-object of E and
 * E/F of lower dimension (caller-asserted), is checked for mu(F) < mu(E); a
 * failure is a counterexample, and passing every sample is Unknown.
 */
AdaptedCheck check_adapted_on(const MuCondition& cond, int d,
                              std::span<const std::pair<SheafClass, SheafClass>> samples);

/// Input description of a lattice, keyed by node identifiers.
struct LatticeSpec {
  struct Node {
    std::string id;
    std::optional<SheafClass> cls;  ///< empty for the bottom node
  };
  RingPtr ring;
  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::array<std::string, 3>> join;  ///< (a, b, join(a, b))
  std::vector<std::array<std::string, 3>> meet;
  std::string top;
  std::string bottom;
  bool strict = true;  ///< enforce class additivity
};

class SubobjectLattice {
 public:
  /**
   * Validates: partial order (reflexive-transitive closure, antisymmetric),
   * bottom <= x <= top, existence of all joins and meets and agreement with
   * the supplied tables, class additivity (strict mode), and nonzero
   * difference classes on strict inclusions. Throws InvalidLattice.
   */
  explicit SubobjectLattice(const LatticeSpec& spec);

  std::size_t size() const noexcept { return ids_.size(); }
  const RingPtr& ring() const noexcept { return ring_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::size_t index_of(const std::string& id) const;
  std::size_t top() const noexcept { return top_; }
  std::size_t bottom() const noexcept { return bottom_; }
  bool strict() const noexcept { return strict_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }

  /// Zero for the bottom node.
  const GradedClass& cls(std::size_t i) const { return classes_.at(i); }
  /// Declared class; throws PreconditionError for the bottom node.
  const SheafClass& sheaf(std::size_t i) const;

  /// class(hi) - class(lo) as a sheaf class (declared class when lo is the
  /// bottom). Throws NonEffective if the difference is zero.
  SheafClass difference(std::size_t lo, std::size_t hi) const;

  /// Same lattice with node i of the result being node perm[i] of this one.
  SubobjectLattice permuted(std::span<const std::size_t> perm) const;

  /// Input form, reproducing this lattice.
  LatticeSpec spec() const;

 private:
  SubobjectLattice() = default;
  void validate_and_close(const LatticeSpec& spec);

  RingPtr ring_;
  std::vector<std::string> ids_;
  std::vector<GradedClass> classes_;
  std::vector<std::optional<SheafClass>> sheaves_;
  std::vector<bool> leq_;
  std::vector<std::size_t> join_, meet_;
  std::size_t top_ = 0, bottom_ = 0;
  bool strict_ = true;
};

/// mu(class(x) - class(lo)).
MuValue interval_mu(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t x);

/// Every x with lo < x < hi has mu(x - lo) <= mu(hi - lo) (strictly for stable).
bool is_semistable_interval(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi);
bool is_stable_interval(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi);

bool is_semistable(const MuCondition& cond, const SubobjectLattice& l);
bool is_stable(const MuCondition& cond, const SubobjectLattice& l);

/// Semistable, and every interior node with mu equal to mu(top) has a
/// complement C: meet = bottom, join = top, classes summing to class(top).
bool is_polystable(const MuCondition& cond, const SubobjectLattice& l);

/// Unique inclusion-maximal mu-maximiser among x in (lo, hi]. Throws
/// NotUnique with the identifiers of every inclusion-maximal maximiser.
std::size_t max_destabilizer(const MuCondition& cond, const SubobjectLattice& l, std::size_t lo, std::size_t hi);
std::size_t max_destabilizer(const MuCondition& cond, const SubobjectLattice& l);

struct GradedPiece {
  SheafClass cls;
  MuValue mu;
};

struct Filtration {
  enum class Mode { HN, JH };
  Mode mode = Mode::HN;
  std::vector<std::size_t> chain;  ///< bottom = E_0 < ... < E_l = top
  std::vector<GradedPiece> graded;
};

const char* to_string(Filtration::Mode m);

std::vector<std::string> chain_ids(const SubobjectLattice& l, const Filtration& f);

/**
 * Harder-Narasimhan filtration by iterated maximal destabilisers. For
 * SlopeLex the vector must be adapted to dimension n - codim(top)
 * (NotAdapted). Throws InvalidLattice if the graded mu-values fail to
 * decrease strictly.
 */
Filtration hn_filtration(const MuCondition& cond, const SubobjectLattice& l);

/**
 * Jordan-Hoelder filtration: repeatedly takes the first (in node order)
 * inclusion-minimal x above the current node with mu(x - lo) = mu(top) and
 * [lo, x] stable. Throws NotSemistable or NoStablePiece.
 */
Filtration jh_filtration(const MuCondition& cond, const SubobjectLattice& l);

/// Every JH chain of the lattice, by exhaustive search. Empty when none.
std::vector<Filtration> all_jh_chains(const MuCondition& cond, const SubobjectLattice& l);

/// Graded classes sorted into a canonical order, for multiset comparison.
std::vector<GradedClass> graded_object(const Filtration& f);

/// codim(class(top) - class(x)) = codim(top), or x = top.
bool is_saturated(const SubobjectLattice& l, std::size_t x);

struct Saturation {
  std::size_t node;
  bool improper;  ///< the saturation is top itself
};

/// Unique inclusion-minimal saturated node above f. Throws NoSaturation.
Saturation saturate(const SubobjectLattice& l, std::size_t f);

/// is_semistable restricted to saturated interior nodes.
bool is_semistable_saturated_only(const MuCondition& cond, const SubobjectLattice& l);
bool is_stable_saturated_only(const MuCondition& cond, const SubobjectLattice& l);

}  // namespace zstab
