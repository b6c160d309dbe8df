#include <gtest/gtest.h>

#include "poincare/spin.hpp"

using namespace poincare;

namespace {

SpinMatrix commutator(const SpinMatrix& a, const SpinMatrix& b) { return a * b - b * a; }

}  // namespace

TEST(Spin, ZeroSpinIsScalarZero) {
  const auto s = spin_matrices(SpinWeight(0));
  for (const auto& m : s.s) {
    ASSERT_EQ(m.rows(), 1u);
    EXPECT_TRUE(m.is_zero());
  }
  EXPECT_EQ(tau_matrix(SpinWeight(0)).tau, SpinMatrix::identity(1));
}

TEST(Spin, HalfPauliMatrices) {
  const auto s = spin_matrices(SpinWeight(1));
  const Number h = Number::rational(1, 2);
  const Number i = Number::imag_unit();
  SpinMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1(0, 1) = h;
  s1(1, 0) = h;
  s2(0, 1) = -h * i;
  s2(1, 0) = h * i;
  s3(0, 0) = h;
  s3(1, 1) = -h;
  EXPECT_EQ(s[0], s1);
  EXPECT_EQ(s[1], s2);
  EXPECT_EQ(s[2], s3);
}

TEST(Spin, SpinOneMatrices) {
  const auto s = spin_matrices(SpinWeight(2));
  const Number r = Number::sqrt(2).inverse();
  EXPECT_EQ(s[0](0, 1), r);
  EXPECT_EQ(s[0](1, 2), r);
  EXPECT_EQ(s[0](0, 2), Number(0));
  EXPECT_EQ(s[2](0, 0), Number(1));
  EXPECT_EQ(s[2](1, 1), Number(0));
  EXPECT_EQ(s[2](2, 2), Number(-1));
}

TEST(Spin, TauExamples) {
  SpinMatrix half(2, 2);
  half(0, 1) = Number(1);
  half(1, 0) = Number(-1);
  EXPECT_EQ(tau_matrix(SpinWeight(1)).tau, half);
  SpinMatrix one(3, 3);
  one(0, 2) = Number(1);
  one(1, 1) = Number(-1);
  one(2, 0) = Number(1);
  EXPECT_EQ(tau_matrix(SpinWeight(2)).tau, one);
}

TEST(Spin, NegativeSpinRejected) { EXPECT_THROW(SpinWeight(-1), std::invalid_argument); }

class SpinInvariants : public ::testing::TestWithParam<int> {};

TEST_P(SpinInvariants, AlgebraAndCasimir) {
  const SpinWeight w(GetParam());
  const auto s = spin_matrices(w);
  const Number i = Number::imag_unit();
  const std::size_t d = w.dim();
  for (std::size_t j = 0; j < 3; ++j) {
    ASSERT_EQ(s[j].rows(), d);
    EXPECT_EQ(s[j].adjoint(), s[j]);
    EXPECT_EQ(commutator(s[j], s[(j + 1) % 3]), i * s[(j + 2) % 3]);
  }
  EXPECT_EQ(s[0] * s[0] + s[1] * s[1] + s[2] * s[2], Number(w.casimir()) * SpinMatrix::identity(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      EXPECT_EQ(s[2](a, b), a == b ? Number::rational(w.two_s() - 2 * static_cast<long long>(a), 2) : Number(0));
}

TEST_P(SpinInvariants, TauConjugation) {
  const SpinWeight w(GetParam());
  const auto s = spin_matrices(w);
  const SpinMatrix tau = tau_matrix(w).tau;
  const SpinMatrix id = SpinMatrix::identity(w.dim());
  EXPECT_EQ(tau * tau.adjoint(), id);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(tau * s[j].conj(), -(s[j] * tau));
  if (w.is_integer()) {
    EXPECT_EQ(tau.transpose(), tau);
    EXPECT_EQ(tau * tau.conj(), id);
  } else {
    EXPECT_EQ(tau.transpose(), -tau);
    EXPECT_EQ(tau * tau.conj(), -id);
  }
}

INSTANTIATE_TEST_SUITE_P(TwoSZeroToEight, SpinInvariants, ::testing::Range(0, 9));

class SpinSchur : public ::testing::TestWithParam<int> {};

TEST_P(SpinSchur, CommutantIsScalars) { EXPECT_EQ(spin_commutant_dimension(spin_matrices(SpinWeight(GetParam()))), 1u); }

INSTANTIATE_TEST_SUITE_P(TwoSZeroToFour, SpinSchur, ::testing::Range(0, 5));
