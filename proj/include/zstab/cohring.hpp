#pragma once

/**
 * @file cohring.hpp
 * @brief Finite numerical model of the even cohomology ring of a smooth
 * projective variety: graded basis, cup-product structure constants and the
 * top-degree integration functional.
 *
 * Rings are immutable once built and shared through RingPtr; classes refer
 * to their ring by pointer, and operations on classes of different rings
 * throw RingMismatch.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zstab/exact.hpp"

namespace zstab {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

class GradedRing {
 public:
  class Builder;

  int dim() const noexcept { return dim_; }
  const std::vector<int>& basis_sizes() const noexcept { return sizes_; }
  int basis_size(int p) const { return sizes_.at(static_cast<std::size_t>(p)); }
  const std::vector<std::vector<std::string>>& basis_names() const noexcept { return names_; }

  /// Coordinates (in degree p+q) of e_{p,i} * e_{q,j}. Requires p + q <= dim().
  const std::vector<Rational>& cup_basis(int p, int i, int q, int j) const;

  /// Integration functional on the top degree, one rational per basis element.
  const std::vector<Rational>& integration() const noexcept { return integration_; }

 private:
  GradedRing() = default;
  std::size_t table_index(int p, int q) const;

  int dim_ = 0;
  std::vector<int> sizes_;
  std::vector<std::vector<std::string>> names_;
  // tables_[table_index(p, q)][i * b_q + j] -> vector of length b_{p+q}
  std::vector<std::vector<std::vector<Rational>>> tables_;
  std::vector<Rational> integration_;
};

/**
 * Assembles a GradedRing. Entries never set explicitly are filled at build()
 * time: products with the degree-0 generator default to the identity, and
 * otherwise e_{q,j} * e_{p,i} is mirrored from an explicit e_{p,i} * e_{q,j}.
 * Remaining entries are zero. Explicit entries are never overwritten, so
 * non-commutative or non-unital tables can still be expressed (and are then
 * reported by validate_ring()).
 */
class GradedRing::Builder {
 public:
  /// Throws PreconditionError unless n >= 1, sizes has n+1 positive entries
  /// and sizes[0] == 1.
  Builder(int n, std::vector<int> sizes);

  Builder& set_cup(int p, int i, int q, int j, std::vector<Rational> result);
  Builder& set_integration(std::vector<Rational> values);
  Builder& set_names(std::vector<std::vector<std::string>> names);

  RingPtr build() &&;

 private:
  GradedRing ring_;
  std::vector<std::vector<bool>> explicit_;
};

/// Q[H]/(H^{n+1}) with one basis element per degree and integral of H^n = 1.
RingPtr projective_space_ring(int n);

struct RingViolation {
  enum class Kind { Unit, Commutativity, Associativity };
  Kind kind;
  /// Offending basis elements as (degree, index) pairs.
  std::vector<std::pair<int, int>> basis;
  std::string describe() const;
};

/// Empty iff the unit, commutativity and associativity laws hold on every
/// basis tuple.
std::vector<RingViolation> validate_ring(const GradedRing& ring);

/// Element of the graded ring, one rational coordinate vector per degree.
class GradedClass {
 public:
  /// Zero class.
  explicit GradedClass(RingPtr ring);
  /// Throws PreconditionError if the shape does not match the basis.
  GradedClass(RingPtr ring, std::vector<std::vector<Rational>> components);

  static GradedClass unit(RingPtr ring);
  static GradedClass basis(RingPtr ring, int degree, int index, Rational coeff = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  int dim() const noexcept;
  const std::vector<Rational>& component(int p) const { return comps_.at(static_cast<std::size_t>(p)); }
  const std::vector<std::vector<Rational>>& components() const noexcept { return comps_; }

  /// Keeps only the degree-p part.
  GradedClass degree_part(int p) const;
  /// Sum of the parts of degree <= p.
  GradedClass truncated(int p) const;

  bool is_zero() const;
  bool is_zero_in_degree(int p) const;
  bool is_pure(int p) const;
  std::optional<int> lowest_degree() const;

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const Rational& s);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  friend bool operator==(const GradedClass& a, const GradedClass& b);

 private:
  void require_same_ring(const GradedClass& o) const;

  RingPtr ring_;
  std::vector<std::vector<Rational>> comps_;
};

std::string to_string(const GradedClass& x);

/// Bilinear extension of the structure constants; parts of total degree > n
/// are discarded.
GradedClass cup(const GradedClass& x, const GradedClass& y);

/// Integration functional applied to the top-degree part.
Rational integrate(const GradedClass& x);

/// i-fold cup power of a pure degree-1 class; the unit class for i = 0.
GradedClass omega_power(const GradedClass& omega, int i);

/// exp(x) = sum x^k / k! for a class with no degree-0 part.
GradedClass exp_class(const GradedClass& x);

/**
 * Todd class from Chern classes c_1..c_n given as pure classes of degrees
 * 1..n (missing entries are zero). Hardcoded through degree 4; throws
 * PreconditionError on rings of dimension > 4.
 */
GradedClass todd_class(const RingPtr& ring, const std::vector<GradedClass>& chern);

/// Td(P^n) from c(T) = (1 + H)^{n+1}; ring must be projective_space_ring(n).
GradedClass projective_todd(const RingPtr& ring);

/// ch(O(a)) = exp(a H) on a projective_space_ring.
GradedClass projective_line_bundle_ch(const RingPtr& ring, const Rational& a);

/// ch of the structure sheaf of a codimension-c linear subspace,
/// (1 - exp(-H))^c.
GradedClass projective_linear_subspace_ch(const RingPtr& ring, int codim);

/**
 * Numerical data of a sheaf: its graded Chern character and declared
 * codimension. Construction enforces vanishing of every component below the
 * codimension; the positivity of the generalised rank depends on a
 * polarisation and is checked when a charge is applied.
 */
class SheafClass {
 public:
  /// Throws NonEffective when codim is out of range or some ch_i, i < codim,
  /// is nonzero.
  SheafClass(GradedClass chern, int codim, std::string label = {});

  /// Codimension taken as the lowest nonzero degree. Throws NonEffective on
  /// the zero class.
  static SheafClass from_chern(GradedClass chern, std::string label = {});

  const GradedClass& chern() const noexcept { return chern_; }
  int codim() const noexcept { return codim_; }
  const std::string& label() const noexcept { return label_; }
  const RingPtr& ring() const noexcept { return chern_.ring(); }
  int dim() const noexcept { return chern_.dim(); }

 private:
  GradedClass chern_;
  int codim_;
  std::string label_;
};

}  // namespace zstab
