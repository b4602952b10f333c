#pragma once

/**
 * @file charge.hpp
 * @brief Polynomial central charges Z_eps built from a polarisation omega,
 * a twist U = (U_0 = 1, U_1, ..., U_n) and a stability vector rho.
 *
 * With twisted Chern character ch^U_p = sum_{j=0..p} ch_{p-j} U_j and
 * generalised degrees deg_i = integral(ch^U_i omega^{n-i}), the charge is
 *
 *     Z_eps(E) = sum_i rho_{n-i} deg_i(E) eps^i.
 *
 * Sub-object verdicts are available through two independent routes: the sign
 * of Im(conj(Z_eps(E)) Z_eps(F)) at eps -> 0+ (valid for every stability
 * vector) and the lexicographic comparison of slope vectors (valid when rho
 * is adapted to the dimension of E).
 */

#include <optional>
#include <vector>

#include "zstab/cohring.hpp"
#include "zstab/exact.hpp"
#include "zstab/stabvec.hpp"

namespace zstab {

class ChargeData {
 public:
  /**
   * Throws PreconditionError unless omega is pure of degree 1, twist has
   * n+1 entries with twist[0] the unit and twist[j] pure of degree j, and rho
   * has n+1 entries. All classes must share one ring (RingMismatch).
   */
  ChargeData(GradedClass omega, std::vector<GradedClass> twist, StabilityVector rho);

  const RingPtr& ring() const noexcept { return omega_.ring(); }
  int dim() const noexcept { return omega_.dim(); }
  const GradedClass& omega() const noexcept { return omega_; }
  const std::vector<GradedClass>& twist() const noexcept { return twist_; }
  const StabilityVector& rho() const noexcept { return rho_; }

  ChargeData with_rho(StabilityVector rho) const { return ChargeData(omega_, twist_, std::move(rho)); }

 private:
  GradedClass omega_;
  std::vector<GradedClass> twist_;
  StabilityVector rho_;
  std::vector<GradedClass> omega_powers_;

  friend std::vector<Rational> raw_degrees(const ChargeData&, const GradedClass&);
};

/// U = (1, 0, ..., 0).
std::vector<GradedClass> trivial_twist(const RingPtr& ring);

/// Splits a total class 1 + U_1 + ... + U_n into its homogeneous parts.
std::vector<GradedClass> twist_from_total(const GradedClass& total);

struct DegreeVector {
  std::vector<Rational> values;  ///< deg_0 .. deg_n
  int codim = 0;
  const Rational& rank() const { return values.at(static_cast<std::size_t>(codim)); }
};

using SlopeVector = std::vector<ExtReal>;

enum class Destab { Strict, Weak, No };

const char* to_string(Destab d);

/// Degree-p part of ch^U(E) is ch_p(E) + sum_{j=1..p} ch_{p-j}(E) U_j.
GradedClass twisted_chern(const ChargeData& cd, const SheafClass& e);

/// deg_i for i = 0..n without effectivity checks.
std::vector<Rational> raw_degrees(const ChargeData& cd, const GradedClass& chern);

/// Generalised degrees. Throws NonEffective if some deg_i, i < codim, is
/// nonzero or deg_codim <= 0.
DegreeVector degrees(const ChargeData& cd, const SheafClass& e);

/// Generalised rank deg_c(E), c = declared codimension.
Rational rank(const ChargeData& cd, const SheafClass& e);

/// (+inf, ..., +inf, 1, deg_{c+1}/Rk, ..., deg_n/Rk) with the 1 at index c.
SlopeVector slope_vector(const ChargeData& cd, const SheafClass& e);

/// Z_eps(E) as a polynomial in eps.
CPoly central_charge(const ChargeData& cd, const SheafClass& e);

struct SignVerdict {
  Destab verdict = Destab::Weak;
  RPoly pairing;              ///< eps -> Im(conj(Z_eps(E)) Z_eps(F))
  std::optional<int> order;   ///< lowest nonzero eps-exponent of pairing
  Rational leading;           ///< coefficient at that exponent (0 if none)
};

/// Verdict from the sign of Im(conj(Z_eps(E)) Z_eps(F)) at eps -> 0+: Strict
/// when positive, Weak when identically zero, No when negative. F is taken
/// to be a sub-object of E (caller-asserted).
SignVerdict destabilizes_sign(const ChargeData& cd, const SheafClass& e, const SheafClass& f);

/**
 * Verdict from the lexicographic order of slope vectors: Strict iff
 * mu(F) >lex mu(E), Weak iff equal, No iff smaller. Requires codim(F) >=
 * codim(E) (PreconditionError) and rho normalised and adapted to dimension
 * n - codim(E) (NotAdapted).
 */
Destab destabilizes_lex(const ChargeData& cd, const SheafClass& e, const SheafClass& f);

/**
 * Verdict from the cross-multiplied ratio form
 * -Re Z(F) / Im Z(F) versus -Re Z(E) / Im Z(E), decided by the sign at 0+ of
 * Re Z(F) Im Z(E) - Re Z(E) Im Z(F). Only defined when both Im Z(E) and
 * Im Z(F) are eventually positive; nullopt otherwise.
 */
std::optional<Destab> destabilizes_phase_ratio(const ChargeData& cd, const SheafClass& e, const SheafClass& f);

/**
 * Coefficient of eps^p in Im(conj(Z(E)) Z(F)) for classes of equal
 * codimension c, expressed through slopes:
 *
 *   sum_{j=c..floor(p/2)} Im(conj(rho_{n-j}) rho_{n-p+j}) Rk(E) Rk(F)
 *       (mu_j(E) mu_{p-j}(F) - mu_{p-j}(E) mu_j(F))
 *
 * with rho_i = deg_i = 0 outside [0, n]. Requires 2c <= p <= 2n.
 */
Rational a_p_coefficient(const ChargeData& cd, const SheafClass& e, const SheafClass& f, int p);

/**
 * chi(E (x) L^k) by Hirzebruch-Riemann-Roch, assuming the twist is Td(X):
 * the coefficient of k^i is deg_{n-i}(E) / i!.
 */
RPoly hilbert_polynomial(const ChargeData& cd, const SheafClass& e);

/// (deg_{n-d}, ..., deg_n), d + 1 entries.
std::vector<Rational> p_zd_value(const ChargeData& cd, const SheafClass& e, int d);

}  // namespace zstab
