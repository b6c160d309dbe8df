#pragma once

// Self-adjoint commutant of a catalogued representation.
//
// Commuting with P_j and J_k forces every block entry of A to be a function
// of p commuting with the Euclidean generators, hence a scalar a_mn * Id.
// What is left is a finite linear system on the B x B hermitian matrix a:
// block signs of P0 and K, and the constant matrices of theta and pi.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare/catalog.hpp"
#include "poincare/linsolve.hpp"

namespace poincare {

/// Constant discrete operator M * Upsilon^u * K^k on the full block-spin space.
struct DiscreteConstraint {
  std::string name;
  NumberMatrix matrix;
  bool antilinear = false;
  bool upsilon = false;
};

struct CommutantProblem {
  std::size_t blocks = 1;
  SpinWeight spin{0};
  std::vector<int> p0_signs;
  std::vector<int> k_signs;
  std::vector<DiscreteConstraint> discrete;
  /// Complex dimension of the spin-level commutant of (S1,S2,S3); 1 validates
  /// the reduction to scalar blocks.
  std::size_t spin_commutant_dim = 1;
};

struct CommutantBasis {
  std::vector<NumberMatrix> basis;
  std::size_t dimension = 0;  // real dimension of self-adjoint solutions
};

struct IrreducibilityVerdict {
  bool irreducible = false;
  std::size_t dimension = 0;
  std::string to_string() const {
    return irreducible ? "irreducible, dim " + std::to_string(dimension) : "reducible, dim " + std::to_string(dimension);
  }
};

namespace detail {

/// +1 / -1 if block (b,b) of op equals +/- ref, 0 otherwise.
inline int block_sign(const BlockOp& op, std::size_t b, const BlockOp& ref) {
  const BlockOp blk = op.block(b, b);
  if (blk == ref) return 1;
  if (blk == -ref) return -1;
  return 0;
}

inline bool is_block_diagonal_copy(const BlockOp& op, const BlockOp& ref) {
  const std::size_t n = op.blocks();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const BlockOp blk = op.block(r, c);
      if (r == c ? blk != ref : !blk.is_zero()) return false;
    }
  return true;
}

}  // namespace detail

inline CommutantProblem reduce_to_constant_blocks(const RepSpec& rep) {
  const SpinWeight w = rep.spin;
  const std::size_t d = w.dim();
  const SheetGenerators sheet = positive_sheet(w);

  for (std::size_t j = 0; j < 3; ++j) {
    if (!detail::is_block_diagonal_copy(rep.p[j], sheet.p[j]) || !detail::is_block_diagonal_copy(rep.j[j], sheet.j[j]))
      throw std::invalid_argument("reduce_to_constant_blocks: P and J must act identically on every block");
  }

  CommutantProblem prob;
  prob.blocks = rep.blocks;
  prob.spin = w;
  prob.spin_commutant_dim = spin_commutant_dimension(spin_matrices(w));
  for (std::size_t b = 0; b < rep.blocks; ++b) {
    const int s0 = detail::block_sign(rep.p0, b, sheet.p0);
    int sk = detail::block_sign(rep.k[0], b, sheet.k[0]);
    for (std::size_t j = 1; j < 3 && sk != 0; ++j)
      if (detail::block_sign(rep.k[j], b, sheet.k[j]) != sk) sk = 0;
    if (s0 == 0 || sk == 0) throw std::invalid_argument("reduce_to_constant_blocks: P0 or K block is not +/- the sheet form");
    prob.p0_signs.push_back(s0);
    prob.k_signs.push_back(sk);
  }
  for (const auto& [name, op] : {std::pair<std::string, const BlockOp*>{"theta", &rep.theta}, {"pi", &rep.pi}}) {
    auto form = constant_form(*op);
    if (!form) throw std::invalid_argument("reduce_to_constant_blocks: " + name + " is not a constant matrix operator");
    prob.discrete.push_back({name, form->matrix, form->antilinear, form->upsilon});
  }
  (void)d;
  return prob;
}

namespace detail {

/// Complex constraint rows on the unknowns a_mn = x_mn + i y_mn, columns
/// 2(mB+n) (x) and 2(mB+n)+1 (y).
inline NumberMatrix commutant_rows(const CommutantProblem& prob) {
  const std::size_t n = prob.blocks;
  const std::size_t d = prob.spin.dim();
  const std::size_t unknowns = 2 * n * n;
  const Number i = Number::imag_unit();
  std::vector<std::vector<Number>> rows;
  auto col = [n](std::size_t m, std::size_t k) { return 2 * (m * n + k); };

  // Hermitian: a_mn - conj(a_nm) = 0
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = m; k < n; ++k) {
      std::vector<Number> row(unknowns);
      row[col(m, k)] += Number(1);
      row[col(m, k) + 1] += i;
      row[col(k, m)] -= Number(1);
      row[col(k, m) + 1] += i;
      rows.push_back(std::move(row));
    }
  // Block signs of P0 and K
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) {
      if (prob.p0_signs[m] == prob.p0_signs[k] && prob.k_signs[m] == prob.k_signs[k]) continue;
      std::vector<Number> row(unknowns);
      row[col(m, k)] = Number(1);
      row[col(m, k) + 1] = i;
      rows.push_back(std::move(row));
    }
  // (a x Id) M - M (a' x Id) = 0 with a' = a (linear) or conj(a) (antilinear)
  for (const auto& dc : prob.discrete) {
    const NumberMatrix& mat = dc.matrix;
    for (std::size_t r = 0; r < n * d; ++r)
      for (std::size_t c = 0; c < n * d; ++c) {
        std::vector<Number> row(unknowns);
        const std::size_t m = r / d;
        const std::size_t alpha = r % d;
        const std::size_t nn = c / d;
        const std::size_t beta = c % d;
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
          const Number& left = mat(k * d + alpha, c);
          if (!left.is_zero()) {
            row[col(m, k)] += left;
            row[col(m, k) + 1] += i * left;
            any = true;
          }
          const Number& right = mat(r, k * d + beta);
          if (!right.is_zero()) {
            row[col(k, nn)] -= right;
            row[col(k, nn) + 1] -= (dc.antilinear ? -i : i) * right;
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  NumberMatrix out(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) out(r, c) = rows[r][c];
  return out;
}

}  // namespace detail

inline CommutantBasis commutant_basis(const CommutantProblem& prob) {
  const std::size_t n = prob.blocks;
  const auto kernel = null_space(realify_rows(detail::commutant_rows(prob)));
  CommutantBasis out;
  const Number i = Number::imag_unit();
  for (const auto& v : kernel) {
    NumberMatrix a(n, n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) a(m, k) = v[2 * (m * n + k)] + i * v[2 * (m * n + k) + 1];
    out.basis.push_back(std::move(a));
  }
  out.dimension = out.basis.size();
  return out;
}

/// Every constraint of the problem evaluated at the block matrix a; true iff all vanish.
inline bool satisfies_constraints(const CommutantProblem& prob, const NumberMatrix& a) {
  const std::size_t n = prob.blocks;
  const std::size_t d = prob.spin.dim();
  if (a.adjoint() != a) return false;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      if ((prob.p0_signs[m] != prob.p0_signs[k] || prob.k_signs[m] != prob.k_signs[k]) && !a(m, k).is_zero())
        return false;
  NumberMatrix big(n * d, n * d);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < d; ++x) big(m * d + x, k * d + x) = a(m, k);
  for (const auto& dc : prob.discrete) {
    const NumberMatrix right = dc.antilinear ? big.conj() : big;
    if (big * dc.matrix != dc.matrix * right) return false;
  }
  return true;
}

/// The problem seen through the change of basis psi -> (W x Id) psi for a
/// block unitary W preserving the sign structure.
inline CommutantProblem transform(const CommutantProblem& prob, const NumberMatrix& w) {
  const std::size_t n = prob.blocks;
  const std::size_t d = prob.spin.dim();
  NumberMatrix big(n * d, n * d);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < d; ++x) big(m * d + x, k * d + x) = w(m, k);
  const NumberMatrix big_inv = inverse(big);
  CommutantProblem out = prob;
  for (auto& dc : out.discrete) {
    // W L K W^-1 = W L conj(W)^-1 K
    dc.matrix = big * dc.matrix * (dc.antilinear ? inverse(big.conj()) : big_inv);
  }
  return out;
}

/// Cayley transform (I - iH)(I + iH)^-1 of a hermitian H: an exact unitary.
inline NumberMatrix cayley_unitary(const NumberMatrix& h) {
  const std::size_t n = h.rows();
  const NumberMatrix id = NumberMatrix::identity(n);
  const Number i = Number::imag_unit();
  return (id - i * h) * inverse(id + i * h);
}

inline IrreducibilityVerdict irreducibility_verdict(const RepSpec& rep) {
  const auto basis = commutant_basis(reduce_to_constant_blocks(rep));
  return {basis.dimension == 1, basis.dimension};
}

}  // namespace poincare
