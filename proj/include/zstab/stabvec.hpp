#pragma once

/**
 * @file stabvec.hpp
 * @brief Stability vectors rho = (rho_0, ..., rho_n) and their classification.
 *
 * All predicates are signs of Im(conj(a) * b) for Gaussian-rational entries,
 * hence exactly decidable. Predicates take raw spans so that inputs which
 * fail to be stability vectors can still be classified and reported.
 */

#include <optional>
#include <span>
#include <vector>

#include "zstab/exact.hpp"

namespace zstab {

class StabilityVector {
 public:
  /// Requires Im(rho_n) > 0 and Im(conj(rho_n) rho_{n-1}) > 0 (n >= 1).
  /// Throws PreconditionError otherwise.
  explicit StabilityVector(std::vector<GaussianRational> rho);

  /// Drops the Im(rho_n) > 0 normalisation; the result is flagged as
  /// unnormalized and rejected by every adaptedness-dependent code path.
  static StabilityVector unnormalized(std::vector<GaussianRational> rho);

  int dim() const noexcept { return static_cast<int>(rho_.size()) - 1; }
  const GaussianRational& operator[](int i) const { return rho_.at(static_cast<std::size_t>(i)); }
  std::span<const GaussianRational> entries() const noexcept { return rho_; }
  bool normalized() const noexcept { return normalized_; }

  /// Every entry multiplied by a common nonzero phase.
  StabilityVector rotated(const GaussianRational& phase) const;

  friend bool operator==(const StabilityVector& a, const StabilityVector& b) { return a.rho_ == b.rho_; }

 private:
  StabilityVector(std::vector<GaussianRational> rho, bool normalized);
  std::vector<GaussianRational> rho_;
  bool normalized_ = true;
};

bool is_stability_vector(std::span<const GaussianRational> rho);

/// Im(conj(rho_i) rho_{i-1}) > 0 for every i in 1..n.
bool is_bayer(std::span<const GaussianRational> rho);

/// Im(conj(rho_d) rho_i) > 0 for every i < d. Vacuous for d = 0.
bool is_adapted(std::span<const GaussianRational> rho, int d);

/// is_adapted for every d in 0..n.
bool is_adapted_coherent(std::span<const GaussianRational> rho);

/// Im(conj(rho_n) rho_0) > 0, the sign requirement of the half-plane
/// characterisation with the open upper half-plane.
bool halfplane_sign_strict(std::span<const GaussianRational> rho);
/// Im(conj(rho_n) rho_0) != 0, the weaker requirement paired with the
/// sub-variety form of the same characterisation.
bool halfplane_sign_nonzero(std::span<const GaussianRational> rho);

/**
 * Rotation lambda = -conj(rho_k) (up to a positive scalar) sending rho_k to
 * the negative real ray, such that every other used entry lands in the open
 * upper half-plane. Together these place all lambda * rho_i in
 * H = {Im z > 0} u R_{<0}.
 */
struct HalfPlaneWitness {
  struct Membership {
    int index;
    bool upper;          ///< Im(lambda rho_i) > 0
    bool negative_real;  ///< lambda rho_i in R_{<0}
  };
  int rotator_index;
  GaussianRational lambda;
  std::vector<Membership> certified;
};

/// Exact search over the boundary rotations {lambda_k : k in used}. Returns
/// the witness with the smallest rotator index, or nullopt.
std::optional<HalfPlaneWitness> halfplane_witness(std::span<const GaussianRational> rho,
                                                  const std::vector<int>& used_indices);

/// rho_n = i, rho_k = (i - 1) / k! for k < n.
StabilityVector leung_vector(int n);

/**
 * Stability vector of the deformed Hermitian Yang-Mills charge
 * eps^n (-exp(-i omega / eps) ch)^{(n,n)}. Expanding gives
 * rho_k = -(-i)^k / k!; the returned vector multiplies this by the unique
 * unit phase in {1, -1, i, -i} giving rho_n = i / n!, so for n = 3 it equals
 * (-i)^k / k!.
 */
StabilityVector dhym_vector(int n);

/// The unrotated rho_k = -(-i)^k / k!, as an unnormalized vector when
/// Im(rho_n) <= 0.
StabilityVector dhym_raw_vector(int n);

/// rho_j = (j - n) + i: strictly decreasing arguments in (0, pi), hence
/// adapted to coherent sheaves.
StabilityVector gieseker_vector(int n);

}  // namespace zstab
