#include <sstream>
#include <stdexcept>

#include "zstab/errors.hpp"
#include "zstab/filtr.hpp"

namespace zstab {

void GammaSpec::validate() const {
  if (!omega.is_pure(1)) throw PreconditionError("gamma spec: omega must be pure of degree 1");
  const int n = omega.dim();
  if (block_degrees.size() != static_cast<std::size_t>(n) || gamma.size() != block_degrees.size())
    throw PreconditionError("gamma spec: need n blocks");
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (block_degrees[k] < 1) throw PreconditionError("gamma spec: block degrees must be positive");
    if (gamma[k].size() != static_cast<std::size_t>(block_degrees[k]))
      throw PreconditionError("gamma spec: block " + std::to_string(k + 1) + " needs d_k classes");
    for (const auto& g : gamma[k])
      if (g.ring().get() != omega.ring().get()) throw RingMismatch();
  }
}

RPoly gamma_degree(const GammaSpec& spec, const SheafClass& e) {
  spec.validate();
  if (e.ring().get() != spec.omega.ring().get()) throw RingMismatch();
  std::vector<Rational> coeffs;
  std::size_t shift = 0;
  for (std::size_t k = 0; k < spec.gamma.size(); ++k) {
    const GradedClass low = e.chern().truncated(static_cast<int>(k + 1));
    for (std::size_t j = 0; j < spec.gamma[k].size(); ++j) {
      if (coeffs.size() <= shift + j) coeffs.resize(shift + j + 1);
      coeffs[shift + j] += integrate(cup(spec.gamma[k][j], low));
    }
    shift += static_cast<std::size_t>(spec.block_degrees[k]);
  }
  return RPoly(std::move(coeffs));
}

bool gamma_positivity(const GammaSpec& spec, const SheafClass& v) {
  spec.validate();
  const int k = v.codim();
  if (k < 1 || k > v.dim()) throw PreconditionError("gamma_positivity: codimension must be in 1..n");
  return sgn(integrate(cup(spec.gamma[static_cast<std::size_t>(k - 1)][0], v.chern()))) > 0;
}

std::string condition_name(const MuCondition& cond) {
  struct {
    std::string operator()(const SlopeLex&) const { return "slope"; }
    std::string operator()(const GiesekerReduced&) const { return "gieseker"; }
    std::string operator()(const GammaDegree&) const { return "gamma"; }
    std::string operator()(const PZd& p) const { return "pzd:" + std::to_string(p.d); }
  } visitor;
  return std::visit(visitor, cond);
}

std::strong_ordering operator<=>(const MuValue& a, const MuValue& b) {
  if (a.order != b.order) throw std::invalid_argument("mu values from different ordered spaces");
  switch (a.order) {
    case MuValue::Order::Lex: return lex_compare(std::span<const ExtReal>(a.tuple), std::span<const ExtReal>(b.tuple));
    case MuValue::Order::AtInfinity: return compare_at_infinity(a.poly, b.poly);
    case MuValue::Order::AtZeroPlus: return compare_at_zero_plus(a.poly, b.poly);
  }
  return std::strong_ordering::equal;
}

std::string to_string(const MuValue& v) {
  switch (v.order) {
    case MuValue::Order::Lex: {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < v.tuple.size(); ++i) os << (i ? ", " : "") << to_string(v.tuple[i]);
      os << ')';
      return os.str();
    }
    case MuValue::Order::AtInfinity: return to_string(v.poly, 'k');
    case MuValue::Order::AtZeroPlus: return to_string(v.poly, 'e');
  }
  return {};
}

namespace {

Rational gamma_rank(const GammaSpec& spec, const SheafClass& f) {
  const int c = f.codim();
  const Rational rk = integrate(cup(f.chern().degree_part(c), omega_power(spec.omega, f.dim() - c)));
  if (sgn(rk) <= 0) throw NonEffective("class '" + f.label() + "': generalised rank is not positive");
  return rk;
}

}  // namespace

MuValue mu_value(const MuCondition& cond, const SheafClass& f) {
  struct {
    const SheafClass& f;
    MuValue operator()(const SlopeLex& c) const { return {MuValue::Order::Lex, slope_vector(c.charge, f), {}}; }
    MuValue operator()(const GiesekerReduced& c) const {
      const Rational inv = 1 / rank(c.charge, f);
      return {MuValue::Order::AtInfinity, {}, hilbert_polynomial(c.charge, f) * inv};
    }
    MuValue operator()(const GammaDegree& c) const {
      const Rational inv = 1 / gamma_rank(c.spec, f);
      return {MuValue::Order::AtZeroPlus, {}, gamma_degree(c.spec, f) * inv};
    }
    MuValue operator()(const PZd& c) const {
      const Rational rk = rank(c.charge, f);
      MuValue v{MuValue::Order::Lex, {}, {}};
      for (const auto& x : p_zd_value(c.charge, f, c.d)) v.tuple.emplace_back(Rational(x / rk));
      return v;
    }
  } visitor{f};
  return std::visit(visitor, cond);
}

AdaptedCheck check_adapted_on(const MuCondition& cond, int d,
                              std::span<const std::pair<SheafClass, SheafClass>> samples) {
  AdaptedCheck out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [e, f] = samples[i];
    if (!(mu_value(cond, f) < mu_value(cond, e))) {
      out.status = AdaptedCheck::Status::Counterexample;
      out.pair = i;
      out.reason = "mu(F) >= mu(E) on sample " + std::to_string(i);
      return out;
    }
  }
  const StabilityVector* rho = nullptr;
  if (const auto* s = std::get_if<SlopeLex>(&cond)) rho = &s->charge.rho();
  if (const auto* p = std::get_if<PZd>(&cond)) rho = &p->charge.rho();
  if (rho) {
    if (rho->normalized() && is_adapted(rho->entries(), d)) {
      out.status = AdaptedCheck::Status::Certified;
      out.reason = "rho adapted to dimension " + std::to_string(d);
    } else {
      out.status = AdaptedCheck::Status::Counterexample;
      out.reason = "rho not adapted to dimension " + std::to_string(d);
    }
    return out;
  }
  out.reason = "all " + std::to_string(samples.size()) + " samples pass";
  return out;
}

}  // namespace zstab
