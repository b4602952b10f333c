#include "zstab/charge.hpp"

#include "zstab/errors.hpp"

namespace zstab {

ChargeData::ChargeData(GradedClass omega, std::vector<GradedClass> twist, StabilityVector rho)
    : omega_(std::move(omega)), twist_(std::move(twist)), rho_(std::move(rho)) {
  const int n = omega_.dim();
  if (!omega_.is_pure(1)) throw PreconditionError("omega must be a pure degree-1 class");
  if (twist_.size() != static_cast<std::size_t>(n + 1)) throw PreconditionError("twist needs n+1 classes U_0..U_n");
  for (int j = 0; j <= n; ++j) {
    const auto& u = twist_[static_cast<std::size_t>(j)];
    if (u.ring().get() != omega_.ring().get()) throw RingMismatch();
    if (!u.is_pure(j) && !u.is_zero()) throw PreconditionError("U_" + std::to_string(j) + " must be pure of degree j");
  }
  if (twist_[0] != GradedClass::unit(omega_.ring())) throw PreconditionError("U_0 must be the unit class");
  if (rho_.dim() != n) throw PreconditionError("rho must have n+1 entries");
  for (int i = 0; i <= n; ++i) omega_powers_.push_back(omega_power(omega_, i));
}

std::vector<GradedClass> trivial_twist(const RingPtr& ring) {
  std::vector<GradedClass> u;
  u.push_back(GradedClass::unit(ring));
  for (int j = 1; j <= ring->dim(); ++j) u.emplace_back(ring);
  return u;
}

std::vector<GradedClass> twist_from_total(const GradedClass& total) {
  std::vector<GradedClass> u;
  for (int j = 0; j <= total.dim(); ++j) u.push_back(total.degree_part(j));
  return u;
}

const char* to_string(Destab d) {
  switch (d) {
    case Destab::Strict: return "strict";
    case Destab::Weak: return "weak";
    case Destab::No: return "no";
  }
  return "?";
}

namespace {

GradedClass twisted(const ChargeData& cd, const GradedClass& ch) {
  if (ch.ring().get() != cd.ring().get()) throw RingMismatch();
  // ch^U = ch * U, truncated by the ring to degrees <= n.
  GradedClass total = cd.twist()[0];
  for (std::size_t j = 1; j < cd.twist().size(); ++j) total += cd.twist()[j];
  return cup(ch, total);
}

}  // namespace

GradedClass twisted_chern(const ChargeData& cd, const SheafClass& e) { return twisted(cd, e.chern()); }

std::vector<Rational> raw_degrees(const ChargeData& cd, const GradedClass& chern) {
  const GradedClass chu = twisted(cd, chern);
  const int n = cd.dim();
  std::vector<Rational> deg;
  deg.reserve(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    deg.push_back(integrate(cup(chu.degree_part(i), cd.omega_powers_[static_cast<std::size_t>(n - i)])));
  return deg;
}

DegreeVector degrees(const ChargeData& cd, const SheafClass& e) {
  DegreeVector dv{raw_degrees(cd, e.chern()), e.codim()};
  for (int i = 0; i < e.codim(); ++i)
    if (!is_zero(dv.values[static_cast<std::size_t>(i)]))
      throw NonEffective("class '" + e.label() + "': deg_" + std::to_string(i) + " nonzero below codimension");
  if (sgn(dv.rank()) <= 0)
    throw NonEffective("class '" + e.label() + "': generalised rank deg_" + std::to_string(e.codim()) + " = " +
                       to_string(dv.rank()) + " is not positive");
  return dv;
}

Rational rank(const ChargeData& cd, const SheafClass& e) { return degrees(cd, e).rank(); }

SlopeVector slope_vector(const ChargeData& cd, const SheafClass& e) {
  const DegreeVector dv = degrees(cd, e);
  SlopeVector mu;
  for (std::size_t i = 0; i < dv.values.size(); ++i) {
    if (static_cast<int>(i) < dv.codim)
      mu.push_back(ExtReal::infinity());
    else
      mu.emplace_back(Rational(dv.values[i] / dv.rank()));
  }
  return mu;
}

CPoly central_charge(const ChargeData& cd, const SheafClass& e) {
  const DegreeVector dv = degrees(cd, e);
  const int n = cd.dim();
  std::vector<GaussianRational> z;
  for (int i = 0; i <= n; ++i) z.push_back(cd.rho()[n - i] * GaussianRational(dv.values[static_cast<std::size_t>(i)]));
  return CPoly(std::move(z));
}

SignVerdict destabilizes_sign(const ChargeData& cd, const SheafClass& e, const SheafClass& f) {
  SignVerdict v;
  v.pairing = im_conj_product(central_charge(cd, e), central_charge(cd, f));
  const auto k = v.pairing.order();
  if (!k) {
    v.verdict = Destab::Weak;
    return v;
  }
  v.order = static_cast<int>(*k);
  v.leading = v.pairing.coeffs()[*k];
  v.verdict = sgn(v.leading) > 0 ? Destab::Strict : Destab::No;
  return v;
}

Destab destabilizes_lex(const ChargeData& cd, const SheafClass& e, const SheafClass& f) {
  if (f.codim() < e.codim()) throw PreconditionError("destabilizes_lex: sub-object has smaller codimension");
  const int d = cd.dim() - e.codim();
  if (!cd.rho().normalized()) throw NotAdapted("stability vector is not normalised (Im rho_n <= 0)");
  if (!is_adapted(cd.rho().entries(), d))
    throw NotAdapted("stability vector is not adapted to sheaves of dimension " + std::to_string(d));
  const auto c = lex_compare(std::span<const ExtReal>(slope_vector(cd, f)), std::span<const ExtReal>(slope_vector(cd, e)));
  if (c > 0) return Destab::Strict;
  if (c == 0) return Destab::Weak;
  return Destab::No;
}

std::optional<Destab> destabilizes_phase_ratio(const ChargeData& cd, const SheafClass& e, const SheafClass& f) {
  const CPoly ze = central_charge(cd, e);
  const CPoly zf = central_charge(cd, f);
  const RPoly re_e = real_part(ze), im_e = imag_part(ze);
  const RPoly re_f = real_part(zf), im_f = imag_part(zf);
  if (sign_at_zero_plus(im_e) <= 0 || sign_at_zero_plus(im_f) <= 0) return std::nullopt;
  // -Re F / Im F  vs  -Re E / Im E, cross-multiplied by Im E Im F > 0.
  const int s = sign_at_zero_plus(re_f * im_e - re_e * im_f);
  if (s < 0) return Destab::Strict;
  if (s == 0) return Destab::Weak;
  return Destab::No;
}

Rational a_p_coefficient(const ChargeData& cd, const SheafClass& e, const SheafClass& f, int p) {
  if (e.codim() != f.codim()) throw PreconditionError("a_p_coefficient: codimensions differ");
  const int n = cd.dim();
  const int c = e.codim();
  if (p < 2 * c || p > 2 * n) throw PreconditionError("a_p_coefficient: order out of range");
  const DegreeVector de = degrees(cd, e);
  const DegreeVector df = degrees(cd, f);
  const Rational rk_e = de.rank(), rk_f = df.rank();
  auto mu = [&](const DegreeVector& dv, const Rational& rk, int i) -> Rational {
    if (i < 0 || i > n) return 0;
    return dv.values[static_cast<std::size_t>(i)] / rk;
  };
  auto rho = [&](int i) -> GaussianRational {
    if (i < 0 || i > n) return {};
    return cd.rho()[i];
  };
  Rational a;
  for (int j = c; j <= p / 2; ++j) {
    const Rational bracket = mu(de, rk_e, j) * mu(df, rk_f, p - j) - mu(de, rk_e, p - j) * mu(df, rk_f, j);
    if (is_zero(bracket)) continue;
    a += im_conj(rho(n - j), rho(n - p + j)) * rk_e * rk_f * bracket;
  }
  return a;
}

RPoly hilbert_polynomial(const ChargeData& cd, const SheafClass& e) {
  const DegreeVector dv = degrees(cd, e);
  const int n = cd.dim();
  std::vector<Rational> coeffs;
  for (int i = 0; i <= n; ++i)
    coeffs.push_back(dv.values[static_cast<std::size_t>(n - i)] / factorial(static_cast<unsigned>(i)));
  return RPoly(std::move(coeffs));
}

std::vector<Rational> p_zd_value(const ChargeData& cd, const SheafClass& e, int d) {
  const int n = cd.dim();
  if (d < 0 || d > n) throw PreconditionError("p_zd_value: d out of range");
  const DegreeVector dv = degrees(cd, e);
  return {dv.values.begin() + (n - d), dv.values.end()};
}

}  // namespace zstab
