#include <chrono>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zstab/errors.hpp"

using namespace zstab;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

GaussianRational g(Rational re, Rational im) { return {std::move(re), std::move(im)}; }

// Pairwise definition of adaptedness to coherent sheaves.
bool coherent_oracle(std::span<const GaussianRational> rho) {
  for (std::size_t j = 0; j < rho.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (sgn(rho[j].re * rho[i].im - rho[j].im * rho[i].re) <= 0) return false;
  return true;
}

std::vector<GaussianRational> grid_values(int bound) {
  std::set<Rational> vals;
  for (int p = -bound; p <= bound; ++p)
    for (int q = 1; q <= bound; ++q) vals.insert(Rational(p) / q);
  std::vector<GaussianRational> out;
  for (const auto& re : vals)
    for (const auto& im : vals) out.emplace_back(re, im);
  return out;
}

std::vector<int> all_indices(std::size_t len) {
  std::vector<int> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(static_cast<int>(i));
  return v;
}

}  // namespace

TEST(StabilityVector, ConstructorEnforcesNormalisation) {
  EXPECT_NO_THROW(StabilityVector({GaussianRational(-1), I}));
  EXPECT_THROW(StabilityVector({GaussianRational(-1), -I}), PreconditionError);
  EXPECT_THROW(StabilityVector({GaussianRational(1), I}), PreconditionError);
  EXPECT_THROW(StabilityVector({I}), PreconditionError);
  const auto u = StabilityVector::unnormalized({GaussianRational(1), -I});
  EXPECT_FALSE(u.normalized());
}

TEST(IsBayer, Examples) {
  const std::vector<GaussianRational> a{GaussianRational(-1), I}, b{GaussianRational(1), I};
  EXPECT_TRUE(is_bayer(a));
  EXPECT_FALSE(is_bayer(b));
  for (int n = 2; n <= 6; ++n) EXPECT_FALSE(is_bayer(leung_vector(n).entries())) << n;
}

TEST(IsAdapted, Examples) {
  fx::Rng rng(3);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_adapted(rng.raw_rho(3), 0));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_adapted(leung_vector(n).entries(), n)) << n;
  EXPECT_FALSE(is_adapted(dhym_vector(3).entries(), 3));
  // direct arithmetic: Im(conj(rho_3) rho_0) for rho_3 = i/6 (phase-normalised), rho_0 = -1
  const auto d = dhym_vector(3);
  EXPECT_LT(sgn(im_conj(d[3], d[0])), 0);
}

TEST(IsAdaptedCoherent, Examples) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(is_adapted_coherent(gieseker_vector(n).entries())) << n;
    EXPECT_TRUE(coherent_oracle(gieseker_vector(n).entries())) << n;
  }
  for (int n = 2; n <= 6; ++n) EXPECT_FALSE(is_adapted_coherent(leung_vector(n).entries())) << n;
}

TEST(Presets, LeungEntries) {
  const auto v = leung_vector(3);
  EXPECT_EQ(v[3], I);
  EXPECT_EQ(v[2], g(Rational(-1) / 2, Rational(1) / 2));
  EXPECT_EQ(v[0], g(-1, 1));
}

TEST(Presets, DhymPhaseNormalised) {
  for (int n = 1; n <= 6; ++n) {
    const auto v = dhym_vector(n);
    EXPECT_EQ(v[n], g(0, 1 / factorial(static_cast<unsigned>(n)))) << n;
    const auto raw = dhym_raw_vector(n);
    // one common unit phase relates the two
    const GaussianRational phase = v[n] * raw[n].conj();
    for (int k = 0; k <= n; ++k) EXPECT_EQ(raw[k] * phase, v[k] * raw[n].norm()) << n << ' ' << k;
  }
  // n = 3: rho_k = (-i)^k / k!
  const auto v3 = dhym_vector(3);
  EXPECT_EQ(v3[0], GaussianRational(1));
  EXPECT_EQ(v3[1], -I);
  EXPECT_EQ(v3[2], GaussianRational(Rational(-1) / 2));
}

TEST(HalfPlaneWitness, Examples) {
  const std::vector<GaussianRational> a{GaussianRational(-1), I};
  const auto w = halfplane_witness(a, {0, 1});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->rotator_index, 0);
  EXPECT_EQ(w->lambda, GaussianRational(1));
  ASSERT_EQ(w->certified.size(), 2u);
  EXPECT_TRUE(w->certified[0].negative_real);
  EXPECT_TRUE(w->certified[1].upper);

  // Bayer, but rho_0 and rho_2 more than a half-turn apart.
  const std::vector<GaussianRational> b{g(1, -1), GaussianRational(-1), I};
  ASSERT_TRUE(is_bayer(b));
  ASSERT_LT(sgn(im_conj(b[2], b[0])), 0);
  EXPECT_FALSE(halfplane_witness(b, {0, 1, 2}).has_value());
  EXPECT_THROW(halfplane_witness(b, {}), PreconditionError);
}

TEST(HalfPlaneWitness, ExistsForCoherentVectors) {
  fx::Rng rng(41);
  int found = 0;
  for (int t = 0; t < 3000 && found < 200; ++t) {
    const auto rho = rng.raw_rho(rng.uniform(1, 4));
    if (!is_stability_vector(rho) || !is_adapted_coherent(rho)) continue;
    ++found;
    EXPECT_TRUE(halfplane_witness(rho, all_indices(rho.size())).has_value());
    EXPECT_TRUE(halfplane_sign_strict(rho));
    EXPECT_TRUE(halfplane_sign_nonzero(rho));
  }
  EXPECT_GT(found, 50);
}

TEST(HalfPlaneWitness, MembershipsHold) {
  fx::Rng rng(42);
  for (int t = 0; t < 2000; ++t) {
    const auto rho = rng.raw_rho(rng.uniform(1, 4));
    const auto idx = all_indices(rho.size());
    const auto w = halfplane_witness(rho, idx);
    if (!w) continue;
    for (int i : idx) {
      const GaussianRational z = w->lambda * rho[static_cast<std::size_t>(i)];
      EXPECT_TRUE(sgn(z.im) > 0 || (is_zero(z.im) && sgn(z.re) < 0));
    }
  }
}

TEST(HalfPlaneWitness, PhaseCovariance) {
  fx::Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const auto rho = rng.raw_rho(rng.uniform(1, 3));
    GaussianRational phase = rng.gaussian();
    if (is_zero(phase)) phase = I;
    std::vector<GaussianRational> turned;
    for (const auto& z : rho) turned.push_back(z * phase);
    const auto idx = all_indices(rho.size());
    const auto w = halfplane_witness(rho, idx);
    const auto wt = halfplane_witness(turned, idx);
    ASSERT_EQ(w.has_value(), wt.has_value());
    if (w) {
      // the inverse rotation of the new witness works on the original vector
      const GaussianRational back = wt->lambda * phase;
      for (int i : idx) {
        const GaussianRational z = back * rho[static_cast<std::size_t>(i)];
        EXPECT_TRUE(sgn(z.im) > 0 || (is_zero(z.im) && sgn(z.re) < 0));
      }
    }
  }
}

TEST(HalfPlaneWitness, SanityDirectionOnBayerVectors) {
  fx::Rng rng(44);
  int checked = 0;
  for (int t = 0; t < 5000; ++t) {
    const auto rho = rng.raw_rho(rng.uniform(1, 4));
    if (!is_stability_vector(rho) || !is_bayer(rho)) continue;
    if (!halfplane_witness(rho, all_indices(rho.size()))) continue;
    ++checked;
    for (std::size_t j = 0; j < rho.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) EXPECT_GE(sgn(im_conj(rho[j], rho[i])), 0);
  }
  EXPECT_GT(checked, 20);
}

TEST(Classification, Monotonicity) {
  fx::Rng rng(45);
  for (int t = 0; t < 5000; ++t) {
    const auto rho = rng.raw_rho(rng.uniform(1, 4));
    EXPECT_EQ(is_adapted_coherent(rho), coherent_oracle(rho));
    if (!is_adapted_coherent(rho)) continue;
    EXPECT_TRUE(is_bayer(rho));
    for (int d = 0; d < static_cast<int>(rho.size()); ++d) EXPECT_TRUE(is_adapted(rho, d));
  }
}

TEST(BayerLemma, ExhaustiveGridLowDimension) {
  // numerators and denominators in [-3, 3], n = 1 and n = 2
  const auto grid = grid_values(3);
  long tested = 0;
  for (int n = 1; n <= 2; ++n) {
    const std::size_t len = static_cast<std::size_t>(n + 1);
    std::vector<std::size_t> idx(len, 0);
    std::vector<GaussianRational> rho(len, grid[0]);
    while (true) {
      if (is_stability_vector(rho)) {
        ++tested;
        ASSERT_EQ(is_adapted_coherent(rho), is_bayer(rho) && is_adapted(rho, n));
      }
      std::size_t k = 0;
      while (k < len && ++idx[k] == grid.size()) idx[k++] = 0;
      if (k == len) break;
      for (std::size_t m = 0; m <= k; ++m) rho[m] = grid[idx[m]];
    }
  }
  EXPECT_GT(tested, 10000);
}

TEST(BayerLemma, SampledGridDimensionThree) {
  const auto grid = grid_values(3);
  fx::Rng rng(46);
  long tested = 0;
  for (int t = 0; t < 300000; ++t) {
    std::vector<GaussianRational> rho;
    for (int i = 0; i <= 3; ++i) rho.push_back(grid[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(grid.size()) - 1))]);
    if (!is_stability_vector(rho)) continue;
    ++tested;
    ASSERT_EQ(is_adapted_coherent(rho), is_bayer(rho) && is_adapted(rho, 3));
  }
  EXPECT_GT(tested, 10000);
}

TEST(Rotated, PreservesPredicates) {
  fx::Rng rng(47);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform(1, 4);
    const StabilityVector v = rng.adapted_rho(n, n);
    // a positive real multiple keeps normalisation
    const StabilityVector w = v.rotated(GaussianRational(Rational(rng.uniform(1, 5))));
    EXPECT_EQ(is_bayer(v.entries()), is_bayer(w.entries()));
    EXPECT_EQ(is_adapted_coherent(v.entries()), is_adapted_coherent(w.entries()));
  }
}
