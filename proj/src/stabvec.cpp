#include "zstab/stabvec.hpp"

#include "zstab/errors.hpp"

namespace zstab {

namespace {

bool top_pair_ok(std::span<const GaussianRational> rho) {
  const std::size_t n = rho.size() - 1;
  return sgn(im_conj(rho[n], rho[n - 1])) > 0;
}

}  // namespace

StabilityVector::StabilityVector(std::vector<GaussianRational> rho, bool normalized)
    : rho_(std::move(rho)), normalized_(normalized) {}

StabilityVector::StabilityVector(std::vector<GaussianRational> rho) : rho_(std::move(rho)) {
  if (!is_stability_vector(rho_))
    throw PreconditionError("not a stability vector: need Im(rho_n) > 0 and Im(conj(rho_n) rho_{n-1}) > 0");
}

StabilityVector StabilityVector::unnormalized(std::vector<GaussianRational> rho) {
  if (rho.size() < 2 || !top_pair_ok(rho))
    throw PreconditionError("unnormalized stability vector still needs Im(conj(rho_n) rho_{n-1}) > 0");
  const bool normal = sgn(rho.back().im) > 0;
  return StabilityVector(std::move(rho), normal);
}

StabilityVector StabilityVector::rotated(const GaussianRational& phase) const {
  if (is_zero(phase)) throw PreconditionError("rotation by zero");
  std::vector<GaussianRational> out;
  out.reserve(rho_.size());
  for (const auto& r : rho_) out.push_back(r * phase);
  return unnormalized(std::move(out));
}

bool is_stability_vector(std::span<const GaussianRational> rho) {
  if (rho.size() < 2) return false;
  return sgn(rho.back().im) > 0 && top_pair_ok(rho);
}

bool is_bayer(std::span<const GaussianRational> rho) {
  for (std::size_t i = 1; i < rho.size(); ++i)
    if (sgn(im_conj(rho[i], rho[i - 1])) <= 0) return false;
  return true;
}

bool is_adapted(std::span<const GaussianRational> rho, int d) {
  if (d < 0 || static_cast<std::size_t>(d) >= rho.size()) throw PreconditionError("is_adapted: d out of range");
  const auto& top = rho[static_cast<std::size_t>(d)];
  for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i)
    if (sgn(im_conj(top, rho[i])) <= 0) return false;
  return true;
}

bool is_adapted_coherent(std::span<const GaussianRational> rho) {
  for (std::size_t d = 0; d < rho.size(); ++d)
    if (!is_adapted(rho, static_cast<int>(d))) return false;
  return true;
}

bool halfplane_sign_strict(std::span<const GaussianRational> rho) { return sgn(im_conj(rho.back(), rho.front())) > 0; }

bool halfplane_sign_nonzero(std::span<const GaussianRational> rho) {
  return sgn(im_conj(rho.back(), rho.front())) != 0;
}

std::optional<HalfPlaneWitness> halfplane_witness(std::span<const GaussianRational> rho,
                                                  const std::vector<int>& used_indices) {
  if (used_indices.empty()) throw PreconditionError("halfplane_witness: no indices");
  for (int i : used_indices)
    if (i < 0 || static_cast<std::size_t>(i) >= rho.size()) throw PreconditionError("halfplane_witness: bad index");
  for (int k : used_indices) {
    const auto& pivot = rho[static_cast<std::size_t>(k)];
    if (is_zero(pivot)) continue;
    // lambda * rho_i = -conj(rho_k) * rho_i, so Im = -Im(conj(rho_k) rho_i).
    const GaussianRational lambda = -pivot.conj();
    HalfPlaneWitness w{k, lambda, {}};
    bool ok = true;
    for (int i : used_indices) {
      const auto& r = rho[static_cast<std::size_t>(i)];
      const int s_im = -sign(im_conj(pivot, r));
      const int s_re = -sign(re_conj(pivot, r));
      const bool upper = s_im > 0;
      const bool neg_real = s_im == 0 && s_re < 0;
      // Only the rotator may sit on the negative real ray.
      if (i == k ? !neg_real : !upper) {
        ok = false;
        break;
      }
      w.certified.push_back({i, upper, neg_real});
    }
    if (ok) return w;
  }
  return std::nullopt;
}

StabilityVector leung_vector(int n) {
  if (n < 1) throw PreconditionError("leung_vector: n must be >= 1");
  std::vector<GaussianRational> rho;
  for (int k = 0; k < n; ++k) {
    const Rational inv = 1 / factorial(static_cast<unsigned>(k));
    rho.emplace_back(-inv, inv);
  }
  rho.push_back(GaussianRational::imaginary_unit());
  return StabilityVector(std::move(rho));
}

namespace {

GaussianRational minus_i_power(int k) {
  switch (k % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(-1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(1)};
  }
}

}  // namespace

StabilityVector dhym_raw_vector(int n) {
  if (n < 1) throw PreconditionError("dhym_raw_vector: n must be >= 1");
  std::vector<GaussianRational> rho;
  for (int k = 0; k <= n; ++k) {
    GaussianRational c = -minus_i_power(k);
    c *= GaussianRational(1 / factorial(static_cast<unsigned>(k)));
    rho.push_back(c);
  }
  return StabilityVector::unnormalized(std::move(rho));
}

StabilityVector dhym_vector(int n) {
  if (n < 1) throw PreconditionError("dhym_vector: n must be >= 1");
  // phase * (-i)^n = i  =>  phase = i * i^n = i^{n+1}
  GaussianRational phase(1);
  for (int k = 0; k <= n; ++k) phase *= GaussianRational::imaginary_unit();
  std::vector<GaussianRational> rho;
  for (int k = 0; k <= n; ++k) {
    GaussianRational c = phase * minus_i_power(k);
    c *= GaussianRational(1 / factorial(static_cast<unsigned>(k)));
    rho.push_back(c);
  }
  return StabilityVector(std::move(rho));
}

StabilityVector gieseker_vector(int n) {
  if (n < 1) throw PreconditionError("gieseker_vector: n must be >= 1");
  std::vector<GaussianRational> rho;
  for (int j = 0; j <= n; ++j) rho.emplace_back(Rational(j - n), Rational(1));
  return StabilityVector(std::move(rho));
}

}  // namespace zstab
