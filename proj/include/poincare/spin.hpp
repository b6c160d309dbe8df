#pragma once

// Spin matrices S1, S2, S3 and the conjugation matrix tau on C^(2s+1),
// written in the S3 eigenbasis m = s, s-1, ..., -s.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "poincare/linsolve.hpp"
#include "poincare/matrix.hpp"
#include "poincare/number.hpp"

namespace poincare {

using SpinMatrix = DenseMatrix<Number>;

/// Spin s stored as the integer 2s.
class SpinWeight {
 public:
  constexpr explicit SpinWeight(int two_s) : two_s_(two_s) {
    if (two_s < 0) throw std::invalid_argument("SpinWeight: 2s must be non-negative");
  }
  constexpr int two_s() const { return two_s_; }
  constexpr std::size_t dim() const { return static_cast<std::size_t>(two_s_) + 1; }
  constexpr bool is_integer() const { return two_s_ % 2 == 0; }
  /// s(s+1) as an exact rational.
  Rational casimir() const { return Rational(two_s_) * Rational(two_s_ + 2) / 4; }

  friend constexpr bool operator==(SpinWeight a, SpinWeight b) { return a.two_s_ == b.two_s_; }

 private:
  int two_s_;
};

struct SpinTriple {
  std::array<SpinMatrix, 3> s;
  const SpinMatrix& operator[](std::size_t j) const { return s[j]; }
};

struct TauMatrix {
  SpinMatrix tau;
};

inline SpinTriple spin_matrices(SpinWeight w) {
  const std::size_t d = w.dim();
  const int two_s = w.two_s();
  // S+ |m> = sqrt((s-m)(s+m+1)) |m+1>; index a <-> m = s - a.
  SpinMatrix raise(d, d);
  for (std::size_t a = 1; a < d; ++a) {
    auto ai = static_cast<std::uint64_t>(a);
    raise(a - 1, a) = Number::sqrt(ai * (static_cast<std::uint64_t>(two_s) - ai + 1));
  }
  SpinMatrix lower = raise.transpose();
  const Number half = Number::rational(1, 2);
  const Number minus_half_i = -half * Number::imag_unit();

  SpinTriple out;
  out.s[0] = half * (raise + lower);
  out.s[1] = minus_half_i * (raise - lower);
  out.s[2] = SpinMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a) out.s[2](a, a) = Number(Rational(two_s - 2 * static_cast<int>(a)) / 2);
  return out;
}

/// tau_{m,m'} = (-1)^(s-m) delta_{m',-m}.
inline TauMatrix tau_matrix(SpinWeight w) {
  const std::size_t d = w.dim();
  TauMatrix out{SpinMatrix(d, d)};
  for (std::size_t a = 0; a < d; ++a) out.tau(a, d - 1 - a) = Number(a % 2 == 0 ? 1 : -1);
  return out;
}

/// Complex dimension of {B : [B, S_j] = 0 for j = 1,2,3}. Schur's lemma
/// makes this 1 for an irreducible spin triple.
inline std::size_t spin_commutant_dimension(const SpinTriple& spin) {
  const std::size_t d = spin[0].rows();
  // Real unknowns: B(r,c) = x_{rc} + i y_{rc}; column 2(rd+c) is x, +1 is y.
  NumberMatrix rows(3 * d * d, 2 * d * d);
  const Number i = Number::imag_unit();
  std::size_t eq = 0;
  for (const auto& s : spin.s) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++eq) {
        // ([B,S])_{rc} = sum_k B_{rk} S_{kc} - S_{rk} B_{kc}
        for (std::size_t k = 0; k < d; ++k) {
          const Number& right = s(k, c);
          if (!right.is_zero()) {
            rows(eq, 2 * (r * d + k)) += right;
            rows(eq, 2 * (r * d + k) + 1) += i * right;
          }
          const Number& left = s(r, k);
          if (!left.is_zero()) {
            rows(eq, 2 * (k * d + c)) -= left;
            rows(eq, 2 * (k * d + c) + 1) -= i * left;
          }
        }
      }
  }
  return null_space(realify_rows(rows)).size() / 2;
}

}  // namespace poincare
