#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zstab/errors.hpp"

using namespace zstab;
using fx::h;
using fx::pn;

namespace {

// Z_eps written out from a degree list, independent of central_charge.
CPoly z_oracle(const StabilityVector& rho, const std::vector<Rational>& deg) {
  const int n = rho.dim();
  std::vector<GaussianRational> c;
  for (int i = 0; i <= n; ++i) c.push_back(rho[n - i] * GaussianRational(deg[static_cast<std::size_t>(i)]));
  return CPoly(c);
}

RPoly pairing_oracle(const CPoly& p, const CPoly& q) {
  std::vector<Rational> out(p.coeffs().size() + q.coeffs().size() + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] += p.coeffs()[i].re * q.coeffs()[j].im - p.coeffs()[i].im * q.coeffs()[j].re;
  return RPoly(out);
}

// C(k + n + a, n) as a polynomial in k.
RPoly binomial(int n, int a) {
  RPoly p{Rational(1)};
  for (int m = 1; m <= n; ++m) p = p * RPoly{Rational(a + m), Rational(1)};
  return p * (1 / factorial(static_cast<unsigned>(n)));
}

std::vector<GradedClass> random_twist(fx::Rng& rng, const RingPtr& r) {
  std::vector<GradedClass> t{GradedClass::unit(r)};
  for (int j = 1; j <= r->dim(); ++j) t.push_back(h(r, j, rng.rational(3, 3)));
  return t;
}

}  // namespace

TEST(ChargeData, Validation) {
  const RingPtr r = pn(2);
  const auto rho = gieseker_vector(2);
  EXPECT_THROW(ChargeData(h(r, 2), trivial_twist(r), rho), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), {GradedClass::unit(r)}, rho), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), {GradedClass::unit(r), h(r, 2), GradedClass(r)}, rho), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), {h(r), GradedClass(r), GradedClass(r)}, rho), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), trivial_twist(r), gieseker_vector(3)), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), trivial_twist(pn(3)), rho), PreconditionError);
  EXPECT_THROW(ChargeData(h(r), {GradedClass::unit(r), h(pn(3), 1), GradedClass(r)}, rho), RingMismatch);
}

TEST(TwistedChern, Examples) {
  const RingPtr r = pn(3);
  const SheafClass o = fx::sheaf(r, {1});
  const ChargeData plain = fx::charge(r, gieseker_vector(3));
  EXPECT_EQ(twisted_chern(plain, o), o.chern());
  const ChargeData twisted(h(r), {GradedClass::unit(r), h(r, 1, 2), GradedClass(r), GradedClass(r)}, gieseker_vector(3));
  EXPECT_EQ(twisted_chern(twisted, o), fx::poly_class(r, {1, 2}));
  // codim-2 class: components below 2 stay zero after any twist
  fx::Rng rng(2);
  const ChargeData any(h(r), random_twist(rng, r), gieseker_vector(3));
  const GradedClass t = twisted_chern(any, fx::sheaf(r, {0, 0, 3, 1}));
  EXPECT_TRUE(t.is_zero_in_degree(0));
  EXPECT_TRUE(t.is_zero_in_degree(1));
  EXPECT_EQ(t.component(2), std::vector<Rational>{3});
}

TEST(Degrees, Examples) {
  const RingPtr r = pn(3);
  const ChargeData cd = fx::charge(r, gieseker_vector(3));
  EXPECT_EQ(degrees(cd, fx::sheaf(r, {1})).values, (std::vector<Rational>{1, 0, 0, 0}));
  const SheafClass pts = fx::sheaf(r, {0, 0, 0, 5});
  EXPECT_EQ(pts.codim(), 3);
  EXPECT_EQ(degrees(cd, pts).values, (std::vector<Rational>{0, 0, 0, 5}));
  fx::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, 3));
    const Rational s(rng.uniform(1, 6));
    auto scaled = degrees(cd, SheafClass(e.chern() * s, e.codim())).values;
    auto base = degrees(cd, e).values;
    for (auto& x : base) x *= s;
    EXPECT_EQ(scaled, base);
  }
}

TEST(Degrees, NonEffectiveRejected) {
  const RingPtr r = pn(2);
  const ChargeData cd = fx::charge(r, gieseker_vector(2));
  EXPECT_THROW(degrees(cd, SheafClass(fx::poly_class(r, {-1, 0, 0}), 0)), NonEffective);
  // a polarisation with negative top power gives non-positive rank on O
  const ChargeData neg(h(r, 1, -1), trivial_twist(r), gieseker_vector(2));
  EXPECT_NO_THROW(degrees(neg, fx::sheaf(r, {1})));
  const RingPtr r3 = pn(3);
  const ChargeData neg3(h(r3, 1, -1), trivial_twist(r3), gieseker_vector(3));
  EXPECT_THROW(degrees(neg3, fx::sheaf(r3, {1})), NonEffective);
}

TEST(Rank, Examples) {
  const RingPtr r = pn(3);
  const SheafClass o = fx::sheaf(r, {1});
  EXPECT_EQ(rank(fx::charge(r, gieseker_vector(3)), o), Rational(1));
  EXPECT_EQ(rank(ChargeData(h(r, 1, 2), trivial_twist(r), gieseker_vector(3)), o), Rational(8));
  EXPECT_EQ(rank(fx::charge(r, gieseker_vector(3)), fx::sheaf(r, {0, 0, 0, 4})), Rational(4));
}

TEST(SlopeVector, Examples) {
  const RingPtr r = pn(3);
  const ChargeData cd = fx::charge(r, gieseker_vector(3));
  const auto inf = ExtReal::infinity();
  EXPECT_EQ(slope_vector(cd, fx::sheaf(r, {1})), (SlopeVector{1, 0, 0, 0}));
  EXPECT_EQ(slope_vector(cd, fx::sheaf(r, {0, 0, 0, 3})), (SlopeVector{inf, inf, inf, 1}));
  fx::Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr rr = pn(n);
    const ChargeData c(h(rr), random_twist(rng, rr), gieseker_vector(n));
    const SheafClass e = rng.sheaf_of_codim(rr, rng.uniform(0, n));
    const SlopeVector mu = slope_vector(c, e);
    EXPECT_EQ(mu[static_cast<std::size_t>(e.codim())], ExtReal(1));
    for (int i = 0; i < e.codim(); ++i) EXPECT_TRUE(mu[static_cast<std::size_t>(i)].is_infinite());
    const Rational s = Rational(rng.uniform(1, 7)) / rng.uniform(1, 7);
    EXPECT_EQ(slope_vector(c, SheafClass(e.chern() * s, e.codim())), mu);
  }
}

TEST(CentralCharge, Examples) {
  const RingPtr r = pn(3);
  fx::Rng rng(5);
  const StabilityVector rho = rng.adapted_rho(3, 3);
  const ChargeData cd = fx::charge(r, rho);
  EXPECT_EQ(central_charge(cd, fx::sheaf(r, {1})), CPoly{rho[3]});
  for (int t = 0; t < 100; ++t) {
    const ChargeData c(h(r), random_twist(rng, r), rho);
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, 3));
    const CPoly z = central_charge(c, e);
    EXPECT_EQ(z, z_oracle(rho, degrees(c, e).values));
    ASSERT_EQ(z.order(), std::optional<std::size_t>(static_cast<std::size_t>(e.codim())));
    EXPECT_EQ(z.coeff(static_cast<std::size_t>(e.codim())), rho[3 - e.codim()] * GaussianRational(rank(c, e)));
    if (e.codim() == 0) {
      EXPECT_GT(sgn(z.coeff(0).im), 0);
    }
  }
}

TEST(CentralCharge, Additive) {
  fx::Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const ChargeData cd(h(r), random_twist(rng, r), rng.adapted_rho(n, n));
    const SheafClass f = rng.sheaf_of_codim(r, rng.uniform(0, n));
    const SheafClass q = rng.sheaf_of_codim(r, rng.uniform(0, n));
    const SheafClass e = SheafClass::from_chern(f.chern() + q.chern());
    EXPECT_EQ(central_charge(cd, e), central_charge(cd, f) + central_charge(cd, q));
  }
}

TEST(DestabilizesSign, SelfIsWeak) {
  fx::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const ChargeData cd(h(r), random_twist(rng, r), rng.adapted_rho(n, rng.uniform(0, n)));
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, n));
    const SignVerdict v = destabilizes_sign(cd, e, e);
    EXPECT_EQ(v.verdict, Destab::Weak);
    EXPECT_TRUE(v.pairing.is_zero());
    EXPECT_FALSE(v.order.has_value());
  }
}

TEST(DestabilizesSign, DhymPointIdeal) {
  const RingPtr r = pn(3);
  const ChargeData cd = fx::charge(r, dhym_vector(3));
  const SheafClass e = fx::sheaf(r, {1}, "O");
  const SheafClass f = SheafClass(e.chern() - h(r, 3), 0, "I_pt");
  const SignVerdict v = destabilizes_sign(cd, e, f);
  EXPECT_EQ(v.verdict, Destab::Strict);
  EXPECT_EQ(v.order, std::optional<int>(3));
  const RPoly oracle = pairing_oracle(z_oracle(cd.rho(), {1, 0, 0, 0}), z_oracle(cd.rho(), {1, 0, 0, -1}));
  EXPECT_EQ(v.pairing, oracle);
  EXPECT_EQ(v.leading, oracle.coeff(3));
  EXPECT_EQ(v.leading, Rational(1) / 6);
}

TEST(DestabilizesSign, DhymLinearSubspaceAllDimensions) {
  for (int n = 3; n <= 6; ++n) {
    const RingPtr r = pn(n);
    const ChargeData cd = fx::charge(r, dhym_vector(n));
    const SheafClass e = fx::sheaf(r, {1});
    const SheafClass f(e.chern() - projective_linear_subspace_ch(r, 3), 0);
    const SignVerdict v = destabilizes_sign(cd, e, f);
    EXPECT_EQ(v.verdict, Destab::Strict) << n;
    EXPECT_EQ(v.order, std::optional<int>(3)) << n;
    EXPECT_EQ(v.leading, 1 / (factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 3)))) << n;
    EXPECT_EQ(v.pairing, pairing_oracle(central_charge(cd, e), central_charge(cd, f))) << n;
  }
}

TEST(DestabilizesSign, GlobalPhaseIrrelevant) {
  for (int n = 3; n <= 5; ++n) {
    const RingPtr r = pn(n);
    const SheafClass e = fx::sheaf(r, {1});
    const SheafClass f(e.chern() - projective_linear_subspace_ch(r, 3), 0);
    const SignVerdict a = destabilizes_sign(fx::charge(r, dhym_vector(n)), e, f);
    const SignVerdict b = destabilizes_sign(fx::charge(r, dhym_raw_vector(n)), e, f);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.order, b.order);
  }
}

TEST(DestabilizesSign, GiesekerSplitP2) {
  const RingPtr r = pn(2);
  const ChargeData cd = fx::charge(r, gieseker_vector(2), true);
  const SheafClass o = fx::line_bundle(r, 0), o1 = fx::line_bundle(r, 1);
  const SheafClass e(o.chern() + o1.chern(), 0);
  // reduced Hilbert polynomials: ((k+1)(k+2)/2 + (k+2)(k+3)/2) / 2 = (k+2)^2/2 against (k+2)(k+3)/2
  EXPECT_EQ(compare_at_infinity(hilbert_polynomial(cd, e) * (Rational(1) / 2), hilbert_polynomial(cd, o1)),
            std::strong_ordering::less);
  EXPECT_EQ(destabilizes_sign(cd, e, o1).verdict, Destab::Strict);
  EXPECT_EQ(destabilizes_lex(cd, e, o1), Destab::Strict);
  EXPECT_EQ(destabilizes_sign(cd, e, o).verdict, Destab::No);
}

TEST(DestabilizesLex, Examples) {
  fx::Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const int c = rng.uniform(0, n - 1);
    const ChargeData cd(h(r), random_twist(rng, r), rng.adapted_rho(n, n - c));
    const SheafClass e = rng.sheaf_of_codim(r, c);
    EXPECT_EQ(destabilizes_lex(cd, e, e), Destab::Weak);
    const SheafClass f = rng.sheaf_of_codim(r, c + 1);
    EXPECT_EQ(destabilizes_lex(cd, e, f), Destab::Strict);
    EXPECT_EQ(destabilizes_sign(cd, e, f).verdict, Destab::Strict);
    EXPECT_THROW(destabilizes_lex(cd, f, e), PreconditionError);
  }
}

TEST(DestabilizesLex, RequiresAdaptedNormalisedVector) {
  const RingPtr r = pn(3);
  const SheafClass e = fx::sheaf(r, {1});
  EXPECT_THROW(destabilizes_lex(fx::charge(r, dhym_vector(3)), e, e), NotAdapted);
  const auto raw = dhym_raw_vector(3);
  ASSERT_FALSE(raw.normalized());
  EXPECT_THROW(destabilizes_lex(fx::charge(r, raw), e, e), NotAdapted);
}

TEST(DestabilizesLex, AgreesWithSignRoute) {
  fx::Rng rng(9);
  int strict = 0, no = 0, weak = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const int c = rng.uniform(0, n);
    const ChargeData cd(h(r), random_twist(rng, r), rng.adapted_rho(n, n - c));
    const SheafClass e = rng.sheaf_of_codim(r, c, 3, 2);
    const SheafClass f = rng.coin() ? rng.sheaf_of_codim(r, c, 3, 2) : SheafClass(e.chern() * Rational(rng.uniform(1, 3)), c);
    const Destab lex = destabilizes_lex(cd, e, f);
    const SignVerdict s = destabilizes_sign(cd, e, f);
    ASSERT_EQ(lex, s.verdict);
    (lex == Destab::Strict ? strict : lex == Destab::No ? no : weak)++;
    for (int p = 2 * c; p <= 2 * n; ++p) ASSERT_EQ(a_p_coefficient(cd, e, f, p), s.pairing.coeff(static_cast<std::size_t>(p)));
  }
  EXPECT_GT(strict, 50);
  EXPECT_GT(no, 50);
  EXPECT_GT(weak, 10);
}

TEST(APCoefficient, Examples) {
  fx::Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const int c = rng.uniform(0, n);
    const ChargeData cd(h(r), random_twist(rng, r), rng.adapted_rho(n, n - c));
    const SheafClass e = rng.sheaf_of_codim(r, c), f = rng.sheaf_of_codim(r, c);
    EXPECT_EQ(a_p_coefficient(cd, e, f, 2 * c), Rational(0));
    for (int p = 2 * c; p <= 2 * n; ++p) EXPECT_EQ(a_p_coefficient(cd, e, e, p), Rational(0));
  }
  const RingPtr r = pn(2);
  const ChargeData cd = fx::charge(r, gieseker_vector(2));
  const SheafClass a = fx::sheaf(r, {1}), b = fx::sheaf(r, {0, 1});
  EXPECT_THROW(a_p_coefficient(cd, a, b, 2), PreconditionError);
  EXPECT_THROW(a_p_coefficient(cd, a, a, 5), PreconditionError);
  EXPECT_THROW(a_p_coefficient(cd, b, b, 1), PreconditionError);
}

TEST(PhaseRatio, AgreesWithSignWhenDefined) {
  fx::Rng rng(11);
  int defined = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    std::vector<GaussianRational> raw;
    do raw = rng.raw_rho(n);
    while (!is_stability_vector(raw));
    const ChargeData cd(h(r), random_twist(rng, r), StabilityVector(raw));
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, n)), f = rng.sheaf_of_codim(r, rng.uniform(0, n));
    const auto ratio = destabilizes_phase_ratio(cd, e, f);
    const CPoly ze = central_charge(cd, e), zf = central_charge(cd, f);
    const bool both_upper = sign_at_zero_plus(imag_part(ze)) > 0 && sign_at_zero_plus(imag_part(zf)) > 0;
    ASSERT_EQ(ratio.has_value(), both_upper);
    if (!ratio) continue;
    ++defined;
    EXPECT_EQ(*ratio, destabilizes_sign(cd, e, f).verdict);
  }
  EXPECT_GT(defined, 200);
}

TEST(HilbertPolynomial, ProjectiveSpaces) {
  EXPECT_EQ(hilbert_polynomial(fx::charge(pn(1), gieseker_vector(1), true), fx::sheaf(pn(1), {1})), (RPoly{1, 1}));
  EXPECT_EQ(hilbert_polynomial(fx::charge(pn(2), gieseker_vector(2), true), fx::sheaf(pn(2), {1})),
            (RPoly{1, Rational(3) / 2, Rational(1) / 2}));
  for (int n = 1; n <= 4; ++n) {
    const ChargeData cd = fx::charge(pn(n), gieseker_vector(n), true);
    EXPECT_EQ(hilbert_polynomial(cd, fx::sheaf(pn(n), {1}))(Rational(0)), Rational(1)) << n;
    for (int a = -3; a <= 3; ++a)
      EXPECT_EQ(hilbert_polynomial(cd, fx::line_bundle(pn(n), a)), binomial(n, a)) << n << ' ' << a;
  }
}

TEST(HilbertPolynomial, PointsAndHyperplanes) {
  // chi(O_pt (x) O(k)) = 1; chi(O_H(k)) on P^2 = k + 1
  const RingPtr r = pn(2);
  const ChargeData cd = fx::charge(r, gieseker_vector(2), true);
  EXPECT_EQ(hilbert_polynomial(cd, SheafClass(h(r, 2), 2)), RPoly{1});
  EXPECT_EQ(hilbert_polynomial(cd, SheafClass(projective_linear_subspace_ch(r, 1), 1)), (RPoly{1, 1}));
}

TEST(PZd, Examples) {
  const RingPtr r = pn(3);
  const ChargeData cd = fx::charge(r, gieseker_vector(3));
  const SheafClass o = fx::sheaf(r, {1});
  EXPECT_EQ(p_zd_value(cd, o, 3), (std::vector<Rational>{1, 0, 0, 0}));
  EXPECT_EQ(p_zd_value(cd, o, 0), (std::vector<Rational>{0}));
  EXPECT_THROW(p_zd_value(cd, o, 4), PreconditionError);
  fx::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, 3));
    const int d = 3 - e.codim();
    const auto tuple = p_zd_value(cd, e, d);
    const auto mu = slope_vector(cd, e);
    ASSERT_EQ(tuple.size(), static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i)
      EXPECT_EQ(ExtReal(tuple[static_cast<std::size_t>(i)] / rank(cd, e)), mu[static_cast<std::size_t>(e.codim() + i)]);
  }
}

TEST(Vanishing, EveryAcceptedClassHasThePattern) {
  fx::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(1, 4);
    const RingPtr r = pn(n);
    const ChargeData cd(h(r), random_twist(rng, r), gieseker_vector(n));
    const SheafClass e = rng.sheaf_of_codim(r, rng.uniform(0, n));
    const DegreeVector d = degrees(cd, e);
    for (int i = 0; i < e.codim(); ++i) EXPECT_TRUE(is_zero(d.values[static_cast<std::size_t>(i)]));
    EXPECT_GT(sgn(d.rank()), 0);
  }
}

TEST(DestabToString, Names) {
  EXPECT_STREQ(to_string(Destab::Strict), "strict");
  EXPECT_STREQ(to_string(Destab::Weak), "weak");
  EXPECT_STREQ(to_string(Destab::No), "no");
}
