#include <gtest/gtest.h>

#include <random>

#include "poincare/catalog.hpp"
#include "poincare/symop.hpp"

using namespace poincare;

namespace {

const Number i = Number::imag_unit();

BlockOp p(int j, std::size_t d = 1) { return ops::momentum(j, 1, d); }
BlockOp d(int j, std::size_t dim = 1) { return ops::partial(j, 1, dim); }
BlockOp fn(const Coefficient& c, std::size_t dim = 1) { return ops::scalar(c, 1, dim); }

/// Linear generator pool on one spin-1/2 sheet plus a few raw building blocks.
std::vector<BlockOp> pool() {
  const SheetGenerators g = positive_sheet(SpinWeight(1));
  std::vector<BlockOp> out{g.p0};
  for (std::size_t a = 0; a < 3; ++a) {
    out.push_back(g.p[a]);
    out.push_back(g.j[a]);
    out.push_back(g.k[a]);
  }
  out.push_back(ops::partial(2, 1, 2));
  out.push_back(ops::reflection(1, 2));
  out.push_back(ops::spin(spin_matrices(SpinWeight(1))[1]));
  out.push_back(ops::scalar(Coefficient::inverse_shifted_energy(), 1, 2));
  return out;
}

}  // namespace

TEST(SymOp, LeibnizRule) { EXPECT_EQ(d(1) * p(1), p(1) * d(1) + ops::identity()); }

TEST(SymOp, ChainRuleThroughEnergy) {
  EXPECT_EQ(d(1) * ops::energy() - ops::energy() * d(1), fn(Coefficient::momentum(1) * Coefficient::inverse_energy(1)));
}

TEST(SymOp, ReflectionRules) {
  const BlockOp u = ops::reflection();
  EXPECT_EQ(u * p(1), -(p(1) * u));
  EXPECT_EQ(u * d(1), -(d(1) * u));
  EXPECT_EQ(u * u, ops::identity());
  EXPECT_EQ(u * ops::energy(), ops::energy() * u);
  const SpinMatrix s2 = spin_matrices(SpinWeight(2))[1];
  EXPECT_EQ(ops::reflection(1, 3) * ops::spin(s2), ops::spin(s2) * ops::reflection(1, 3));
}

TEST(SymOp, ConjugationRules) {
  const BlockOp k = ops::conjugation();
  EXPECT_TRUE(k.antilinear());
  EXPECT_EQ(k * (i * ops::identity()), -i * k);
  EXPECT_EQ(k * d(1), d(1) * k);
  EXPECT_EQ(k * ops::reflection(), ops::reflection() * k);
  EXPECT_EQ(k * k, ops::identity());
  EXPECT_FALSE((k * k).antilinear());
  const SpinMatrix s2 = spin_matrices(SpinWeight(1))[1];
  EXPECT_EQ(ops::conjugation(1, 2) * ops::spin(s2), ops::spin(s2.conj()) * ops::conjugation(1, 2));
  EXPECT_EQ(k * fn(i * Coefficient::momentum(3)), fn(-i * Coefficient::momentum(3)) * k);
}

TEST(SymOp, CommutatorExamples) {
  const SheetGenerators g = positive_sheet(SpinWeight(1));
  EXPECT_EQ(commutator(g.k[0], g.p[0]), i * g.p0);
  EXPECT_TRUE(commutator(g.p[0], g.p[1]).is_zero());
  EXPECT_EQ(commutator(g.k[0], g.k[1]), -i * g.j[2]);
  EXPECT_TRUE(commutator(g.j[0], g.p0).is_zero());
}

TEST(SymOp, AdjointExamples) {
  EXPECT_EQ(adjoint(p(1)), p(1));
  EXPECT_EQ(adjoint(i * d(1)), i * d(1) - fn(i * Coefficient::momentum(1) * Coefficient::inverse_energy(2)));
  const SheetGenerators g = positive_sheet(SpinWeight(1));
  for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(adjoint(g.k[a]), g.k[a]);
}

TEST(SymOp, ZeroTests) {
  const BlockOp shell = ops::energy() * ops::energy() - p(1) * p(1) - p(2) * p(2) - p(3) * p(3) -
                        fn(Coefficient::mu() * Coefficient::mu());
  EXPECT_TRUE(is_zero(shell));
  EXPECT_FALSE(is_zero(ops::identity()));
  EXPECT_TRUE(ops::scalar(0, 2, 3).is_zero());
}

TEST(SymOp, MassShellConsistency) {
  const BlockOp lhs = (fn(Coefficient::mu()) + ops::energy()) * (ops::energy() - fn(Coefficient::mu()));
  EXPECT_EQ(lhs, p(1) * p(1) + p(2) * p(2) + p(3) * p(3));
}

TEST(SymOp, IdentityMultipleAndConstantForm) {
  const auto c = identity_multiple(ops::scalar(Coefficient::p0(), 2, 2));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, Coefficient::p0());
  EXPECT_FALSE(identity_multiple(p(1) * d(1)));
  EXPECT_TRUE(identity_multiple(ops::scalar(0, 1, 2))->is_zero());
  const BlockOp theta = ops::kron(detail::small_matrix({{0, 1}, {1, 0}}), ops::conjugation(1, 2));
  const auto form = constant_form(theta);
  ASSERT_TRUE(form);
  EXPECT_TRUE(form->antilinear);
  EXPECT_EQ(from_constant_form(*form, 2), theta);
  EXPECT_FALSE(constant_form(d(1)));
}

TEST(SymOp, Errors) {
  EXPECT_THROW(commutator(ops::conjugation(), p(1)), std::invalid_argument);
  EXPECT_THROW(commutator(p(1), p(1, 2)), std::invalid_argument);
  EXPECT_THROW(adjoint(ops::conjugation()), std::invalid_argument);
  EXPECT_THROW(ops::conjugation() + p(1), std::invalid_argument);
  EXPECT_THROW(p(1) + p(1, 2), std::invalid_argument);
}

TEST(SymOpProperty, AssociativityOnRandomProducts) {
  const auto g = pool();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const BlockOp& a = g[pick(rng)];
    const BlockOp& b = g[pick(rng)];
    const BlockOp& c = g[pick(rng)];
    EXPECT_EQ(normalize((a * b) * c), normalize(a * (b * c)));
  }
  // Antilinear factors too.
  const BlockOp k = ops::conjugation(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockOp& a = g[pick(rng)];
    const BlockOp& b = g[pick(rng)];
    EXPECT_EQ((a * k) * b, a * (k * b));
  }
}

TEST(SymOpProperty, CommutatorBilinearAntisymmetric) {
  const auto g = pool();
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockOp& a = g[pick(rng)];
    const BlockOp& b = g[pick(rng)];
    const BlockOp& c = g[pick(rng)];
    EXPECT_EQ(commutator(a, b), -commutator(b, a));
    EXPECT_EQ(commutator(a + Number(3) * c, b), commutator(a, b) + Number(3) * commutator(c, b));
  }
}

TEST(SymOpProperty, JacobiOnGenerators) {
  const SheetGenerators s = positive_sheet(SpinWeight(1));
  std::vector<BlockOp> g{s.p0};
  for (std::size_t a = 0; a < 3; ++a) {
    g.push_back(s.p[a]);
    g.push_back(s.j[a]);
    g.push_back(s.k[a]);
  }
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = x + 1; y < g.size(); ++y)
      for (std::size_t z = y + 1; z < g.size(); ++z) {
        const BlockOp sum = commutator(g[x], commutator(g[y], g[z])) + commutator(g[y], commutator(g[z], g[x])) +
                            commutator(g[z], commutator(g[x], g[y]));
        EXPECT_TRUE(sum.is_zero()) << x << ' ' << y << ' ' << z;
      }
}

TEST(SymOpProperty, AdjointInvolutionAndAntiHomomorphism) {
  const auto g = pool();
  std::mt19937 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (const auto& a : g) EXPECT_EQ(adjoint(adjoint(a)), a);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockOp& a = g[pick(rng)];
    const BlockOp& b = g[pick(rng)];
    const BlockOp c = i * a + b;
    EXPECT_EQ(adjoint(adjoint(c)), c);
    EXPECT_EQ(adjoint(a * b), adjoint(b) * adjoint(a));
  }
}
