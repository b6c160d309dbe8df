#include <gtest/gtest.h>

#include "poincare/gridlab.hpp"

using namespace poincare;

namespace {

RepSpec make(const std::string& token, int two_s = 0) { return build(*RepLabel::parse(token), SpinWeight(two_s)); }

double distance(const GridState& a, const GridState& b, double mu) {
  GridState diff = a;
  for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= b.values[i];
  return norm(diff, mu);
}

}  // namespace

TEST(Grid, Construction) {
  const Grid g(4.0, 33);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.25);
  EXPECT_DOUBLE_EQ(g.coord(0, 16), 0.0);
  EXPECT_DOUBLE_EQ(g.coord(1, 0), -4.0);
  EXPECT_TRUE(g.symmetric());
  EXPECT_FALSE(Grid(1.0, 9, {1.0, 0.0, 0.0}).symmetric());
  EXPECT_THROW(Grid(4.0, 7), std::invalid_argument);
  EXPECT_THROW(Grid(0.0, 16), std::invalid_argument);
}

TEST(Gaussian, CenteredStateIsNormalized) {
  const Grid g(4.0, 32);
  const auto psi = sample_gaussian(g, {0, 0, 0}, 0.5, {{1.0}});
  EXPECT_NEAR(norm(psi, 1.0), 1.0, 1e-12);
  for (const auto& v : psi.values) EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
}

TEST(Gaussian, QuadratureConvergesUnderRefinement) {
  // Unnormalized dnu-integral of the same Gaussian on two grids.
  auto mass = [](int n) {
    const Grid g(4.0, n);
    double sum = 0;
    for (std::size_t pt = 0; pt < g.size(); ++pt) {
      const auto p = g.point(pt);
      const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
      sum += std::exp(-r2 / 0.25) / energy_at(1.0, p);
    }
    return sum * std::pow(g.spacing(), 3);
  };
  EXPECT_NEAR(mass(64) / mass(128), 1.0, 1e-9);
}

TEST(Gaussian, Errors) {
  const Grid g(4.0, 32);
  EXPECT_THROW(sample_gaussian(g, {0, 0, 0}, 4.0, {{1.0}}), std::invalid_argument);
  EXPECT_THROW(sample_gaussian(g, {0, 0, 0}, 0.5, {{0.0, 0.0}}), std::invalid_argument);
  EXPECT_THROW(sample_gaussian(g, {0, 0, 0}, 0.5, {}), std::invalid_argument);
  EXPECT_THROW(sample_gaussian(g, {0, 0, 0}, -1.0, {{1.0}}), std::invalid_argument);
}

TEST(Apply, ParityOfSymOneIsInvolution) {
  const RepSpec s = make("sym1");
  const Grid g(4.0, 24);
  const auto psi = study_state(s, g, 1.0);
  const auto twice = apply(s.pi, apply(s.pi, psi, 1.0), 1.0);
  EXPECT_EQ(twice.values, psi.values);
}

TEST(Apply, MomentumOnPeakedState) {
  const Grid g(0.5, 33, {1.0, 0.0, 0.0});
  const auto psi = sample_gaussian(g, {1.0, 0.0, 0.0}, 0.05, {{1.0}});
  const auto moved = apply(ops::momentum(1), psi, 1.0);
  EXPECT_NEAR(inner(psi, moved, 1.0).real(), 1.0, 1e-2);
}

TEST(Apply, AntiunitaryThetaPreservesNorm) {
  for (int two_s = 0; two_s <= 2; ++two_s) {
    const RepSpec up = make("up", two_s);
    const auto psi = study_state(up, Grid(4.0, 24), 1.0);
    EXPECT_NEAR(norm(apply(up.theta, psi, 1.0), 1.0), norm(psi, 1.0), 1e-12);
  }
}

TEST(Apply, Errors) {
  const Grid off(1.0, 16, {0.5, 0.0, 0.0});
  const auto psi = sample_gaussian(off, {0.5, 0, 0}, 0.1, {{1.0}});
  EXPECT_THROW(apply(ops::reflection(), psi, 1.0), std::invalid_argument);
  EXPECT_THROW(apply(ops::momentum(1, 1, 2), psi, 1.0), std::invalid_argument);
}

TEST(GridProperty, InnerProductConjugateSymmetricAndPositive) {
  const Grid g(4.0, 20);
  const auto a = sample_gaussian(g, {0.2, 0, 0}, 0.5, {{1.0, std::complex<double>(0, 2)}});
  const auto b = sample_gaussian(g, {0, -0.3, 0.1}, 0.45, {{std::complex<double>(0.5, -1), 0.3}});
  EXPECT_NEAR(std::abs(inner(a, b, 1.3) - std::conj(inner(b, a, 1.3))), 0.0, 1e-14);
  EXPECT_GT(inner(a, a, 1.3).real(), 0.0);
  EXPECT_NEAR(inner(a, a, 1.3).imag(), 0.0, 1e-15);
}

TEST(GridProperty, ReflectionAndConjugationAreExactInvolutions) {
  const RepSpec up = make("up", 1);
  const auto psi = study_state(up, Grid(4.0, 20), 1.0);
  const BlockOp u = ops::reflection(1, 2);
  const BlockOp k = ops::conjugation(1, 2);
  EXPECT_EQ(apply(u, apply(u, psi, 1.0), 1.0).values, psi.values);
  EXPECT_EQ(apply(k, apply(k, psi, 1.0), 1.0).values, psi.values);
}

TEST(GridProperty, DerivativeFreeRelationsExact) {
  const Grid g(4.0, 24);
  const RepSpec sym1 = make("sym1", 1);
  const auto psi = study_state(sym1, g, 1.0);
  for (const char* id : {"PP.12", "PP0.2", "pi.P1", "pi.P0", "theta.P2"}) EXPECT_LT(residual(sym1, id, psi, 1.0), 1e-12) << id;
  EXPECT_THROW(residual(sym1, "XX.12", psi, 1.0), std::invalid_argument);
}

TEST(GridProperty, GeneratorsNumericallySymmetric) {
  // Im <psi, G psi> is zero for multiplication operators and O(h^2) otherwise.
  for (const char* t : {"up", "sym3"}) {
    const RepSpec rep = make(t, 1);
    const auto grids = grid_sequence(4.0, {24, 48, 96});
    std::vector<std::vector<double>> im(grids.size());
    for (std::size_t n = 0; n < grids.size(); ++n) {
      const auto psi = study_state(rep, grids[n], 1.0);
      for (const auto& [name, g] : rep.generators()) im[n].push_back(std::abs(inner(psi, apply(*g, psi, 1.0), 1.0).imag()));
    }
    for (std::size_t k = 0; k < im[0].size(); ++k) {
      if (im[0][k] < 1e-12) continue;
      const double slope = std::log(im[1][k] / im[2][k]) / std::log(grids[1].spacing() / grids[2].spacing());
      EXPECT_GT(slope, 1.7) << t << " generator " << rep.generators()[k].first;
    }
  }
}

TEST(Convergence, BoostTranslationRelationIsSecondOrder) {
  const auto r = convergence_study(make("up"), "KP.11", grid_sequence(4.0, {32, 64, 128}));
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.slope, 2.0, 0.3);
  EXPECT_TRUE(r.pass());
}

TEST(Convergence, RotationRelationIsSecondOrder) {
  const auto r = convergence_study(make("up"), "JJ.12", grid_sequence(4.0, {32, 64, 128}));
  EXPECT_NEAR(r.slope, 2.0, 0.3);
}

TEST(Convergence, TranslationsFlaggedExact) {
  const auto r = convergence_study(make("up"), "PP.12", grid_sequence(4.0, {16, 32, 64}));
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.pass());
}

TEST(Convergence, Errors) {
  const RepSpec up = make("up");
  EXPECT_THROW(convergence_study(up, "KP.11", grid_sequence(4.0, {16, 32})), std::invalid_argument);
  EXPECT_THROW(convergence_study(up, "KP.11", grid_sequence(4.0, {16, 24, 32})), std::invalid_argument);
  EXPECT_THROW(convergence_study(up, "nope", grid_sequence(4.0, {16, 32, 64})), std::invalid_argument);
}

TEST(Convergence, LeastSquaresSlope) {
  EXPECT_NEAR(least_squares_slope({0, 1, 2}, {1, 3, 5}), 2.0, 1e-14);
}
