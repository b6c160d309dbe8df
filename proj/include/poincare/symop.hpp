#pragma once

// Matrix-valued differential operators on L2(R^3, C^(B(2s+1)), d^3p/p0).
//
// Every operator is stored in normal form
//
//     sum  c(p) * E_{row,col} * d^alpha * Upsilon^u * K^k
//
// where c is a mass-shell Coefficient, E_{row,col} a matrix unit of the
// block-times-spin index space, d^alpha a monomial in d/dp_j, Upsilon the
// reflection p -> -p and K complex conjugation. k is shared by all terms:
// an operator is either linear or antilinear. Products are rewritten with
//
//     d_j f = f d_j + (d_j f),      Upsilon f(p) = f(-p) Upsilon,
//     Upsilon d_j = -d_j Upsilon,   K f = conj(f) K,
//     K d_j = d_j K,  K Upsilon = Upsilon K,  Upsilon^2 = K^2 = Id.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "poincare/coefficient.hpp"
#include "poincare/matrix.hpp"
#include "poincare/number.hpp"

namespace poincare {

using MultiIndex = std::array<int, 3>;

/// Position of a term in the normal-form ordering.
struct OpKey {
  std::uint16_t row = 0;
  std::uint16_t col = 0;
  std::array<std::uint8_t, 3> deriv{0, 0, 0};
  bool upsilon = false;

  int order() const { return deriv[0] + deriv[1] + deriv[2]; }
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

/// One normal-form term (the spin factor is carried by the matrix unit).
struct Term {
  Coefficient coeff;
  std::size_t row = 0;
  std::size_t col = 0;
  MultiIndex deriv{0, 0, 0};
  bool upsilon = false;
  bool kappa = false;
};

class BlockOp {
 public:
  using Terms = std::map<OpKey, Coefficient>;

  BlockOp() = default;
  BlockOp(std::size_t blocks, std::size_t spin_dim, bool antilinear = false)
      : blocks_(blocks), spin_dim_(spin_dim), antilinear_(antilinear) {}

  std::size_t blocks() const { return blocks_; }
  std::size_t spin_dim() const { return spin_dim_; }
  std::size_t dim() const { return blocks_ * spin_dim_; }
  bool antilinear() const { return antilinear_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const OpKey& key, const Coefficient& c) {
    if (key.row >= dim() || key.col >= dim()) throw std::out_of_range("BlockOp: index outside operator dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::vector<Term> term_list() const {
    std::vector<Term> out;
    for (const auto& [k, c] : terms_)
      out.push_back({c, k.row, k.col, {k.deriv[0], k.deriv[1], k.deriv[2]}, k.upsilon, antilinear_});
    return out;
  }

  /// The (r, c) block as a one-block operator on C^(2s+1)-valued functions.
  BlockOp block(std::size_t r, std::size_t c) const {
    BlockOp out(1, spin_dim_, antilinear_);
    for (const auto& [k, coeff] : terms_) {
      if (k.row / spin_dim_ != r || k.col / spin_dim_ != c) continue;
      OpKey local = k;
      local.row = static_cast<std::uint16_t>(k.row % spin_dim_);
      local.col = static_cast<std::uint16_t>(k.col % spin_dim_);
      out.terms_.emplace(local, coeff);
    }
    return out;
  }

  BlockOp operator-() const {
    BlockOp out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
  }
  BlockOp& operator+=(const BlockOp& o) {
    check_compatible(o);
    if (terms_.empty()) antilinear_ = o.antilinear_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BlockOp& operator-=(const BlockOp& o) { return *this += -o; }
  friend BlockOp operator+(BlockOp a, const BlockOp& b) { return a += b; }
  friend BlockOp operator-(BlockOp a, const BlockOp& b) { return a -= b; }

  /// Left multiplication by a function of p.
  friend BlockOp operator*(const Coefficient& s, const BlockOp& op) {
    BlockOp out(op.blocks_, op.spin_dim_, op.antilinear_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : op.terms_) out.add_term(k, s * c);
    return out;
  }
  friend BlockOp operator*(const Number& s, const BlockOp& op) { return Coefficient(s) * op; }

  friend bool operator==(const BlockOp& a, const BlockOp& b) {
    return a.blocks_ == b.blocks_ && a.spin_dim_ == b.spin_dim_ && a.terms_ == b.terms_ &&
           (a.antilinear_ == b.antilinear_ || a.terms_.empty());
  }
  friend bool operator!=(const BlockOp& a, const BlockOp& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string piece = c.to_string();
      if (dim() > 1) piece += "*E" + std::to_string(k.row) + std::to_string(k.col);
      for (int j = 0; j < 3; ++j) {
        if (k.deriv[static_cast<std::size_t>(j)] == 0) continue;
        piece += "*d" + std::to_string(j + 1);
        if (k.deriv[static_cast<std::size_t>(j)] > 1) piece += "^" + std::to_string(k.deriv[static_cast<std::size_t>(j)]);
      }
      if (k.upsilon) piece += "*U";
      if (!first && piece.front() != '-') out += " + ";
      if (!first && piece.front() == '-') out += " ";
      out += piece;
      first = false;
    }
    if (antilinear_) out = "(" + out + ")*K";
    return out;
  }

 private:
  std::size_t blocks_ = 1;
  std::size_t spin_dim_ = 1;
  bool antilinear_ = false;
  Terms terms_;

  void check_compatible(const BlockOp& o) const {
    if (blocks_ != o.blocks_ || spin_dim_ != o.spin_dim_) throw std::invalid_argument("BlockOp: dimension mismatch");
    if (antilinear_ != o.antilinear_ && !terms_.empty() && !o.terms_.empty())
      throw std::invalid_argument("BlockOp: sum of linear and antilinear operators");
  }
};

// ---------------------------------------------------------------------------
// Elementary operators. All act as the identity on block and spin indices
// unless stated otherwise.

namespace ops {

inline BlockOp scalar(const Coefficient& c, std::size_t blocks = 1, std::size_t spin_dim = 1) {
  BlockOp out(blocks, spin_dim);
  for (std::size_t r = 0; r < blocks * spin_dim; ++r) {
    OpKey k;
    k.row = k.col = static_cast<std::uint16_t>(r);
    out.add_term(k, c);
  }
  return out;
}

inline BlockOp identity(std::size_t blocks = 1, std::size_t spin_dim = 1) { return scalar(1, blocks, spin_dim); }

inline BlockOp momentum(int j, std::size_t blocks = 1, std::size_t spin_dim = 1) {
  return scalar(Coefficient::momentum(j), blocks, spin_dim);
}

inline BlockOp energy(std::size_t blocks = 1, std::size_t spin_dim = 1) {
  return scalar(Coefficient::p0(), blocks, spin_dim);
}

/// d/dp_j, j in 1..3.
inline BlockOp partial(int j, std::size_t blocks = 1, std::size_t spin_dim = 1) {
  BlockOp out(blocks, spin_dim);
  for (std::size_t r = 0; r < blocks * spin_dim; ++r) {
    OpKey k;
    k.row = k.col = static_cast<std::uint16_t>(r);
    k.deriv[static_cast<std::size_t>(j - 1)] = 1;
    out.add_term(k, 1);
  }
  return out;
}

/// (Upsilon psi)(p) = psi(-p)
inline BlockOp reflection(std::size_t blocks = 1, std::size_t spin_dim = 1) {
  BlockOp out(blocks, spin_dim);
  for (std::size_t r = 0; r < blocks * spin_dim; ++r) {
    OpKey k;
    k.row = k.col = static_cast<std::uint16_t>(r);
    k.upsilon = true;
    out.add_term(k, 1);
  }
  return out;
}

/// (K psi)(p) = conj(psi(p))
inline BlockOp conjugation(std::size_t blocks = 1, std::size_t spin_dim = 1) {
  BlockOp out(blocks, spin_dim, true);
  for (std::size_t r = 0; r < blocks * spin_dim; ++r) {
    OpKey k;
    k.row = k.col = static_cast<std::uint16_t>(r);
    out.add_term(k, 1);
  }
  return out;
}

/// Constant matrix acting on the spin index of every block.
inline BlockOp spin(const DenseMatrix<Number>& m, std::size_t blocks = 1) {
  const std::size_t d = m.rows();
  BlockOp out(blocks, d);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (m(r, c).is_zero()) continue;
        OpKey k;
        k.row = static_cast<std::uint16_t>(b * d + r);
        k.col = static_cast<std::uint16_t>(b * d + c);
        out.add_term(k, m(r, c));
      }
  return out;
}

/// T (x) inner: block (r, c) is T(r, c) * inner, inner a one-block operator.
inline BlockOp kron(const DenseMatrix<Number>& t, const BlockOp& inner) {
  if (inner.blocks() != 1) throw std::invalid_argument("kron: inner operator must have one block");
  const std::size_t d = inner.spin_dim();
  BlockOp out(t.rows(), d, inner.antilinear());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (t(r, c).is_zero()) continue;
      for (const auto& [k, coeff] : inner.terms()) {
        OpKey g = k;
        g.row = static_cast<std::uint16_t>(r * d + k.row);
        g.col = static_cast<std::uint16_t>(c * d + k.col);
        out.add_term(g, t(r, c) * coeff);
      }
    }
  return out;
}

/// Block-diagonal operator from one-block diagonal entries.
inline BlockOp block_diag(const std::vector<BlockOp>& entries) {
  const std::size_t n = entries.size();
  const std::size_t d = entries.front().spin_dim();
  BlockOp out(n, d, entries.front().antilinear());
  for (std::size_t b = 0; b < n; ++b) {
    if (entries[b].blocks() != 1 || entries[b].spin_dim() != d) throw std::invalid_argument("block_diag: shape mismatch");
    for (const auto& [k, coeff] : entries[b].terms()) {
      OpKey g = k;
      g.row = static_cast<std::uint16_t>(b * d + k.row);
      g.col = static_cast<std::uint16_t>(b * d + k.col);
      out.add_term(g, coeff);
    }
  }
  return out;
}

}  // namespace ops

// ---------------------------------------------------------------------------
// Algebra.

/// Re-canonicalize every coefficient and drop vanishing terms.
inline BlockOp normalize(const BlockOp& op) {
  BlockOp out(op.blocks(), op.spin_dim(), op.antilinear());
  for (const auto& [k, c] : op.terms()) {
    Coefficient reduced(c.rational_part(), c.energy_part(), c.energy_denominator(), c.shifted_denominator());
    out.add_term(k, reduced);
  }
  return out;
}

inline BlockOp multiply(const BlockOp& a, const BlockOp& b) {
  if (a.blocks() != b.blocks() || a.spin_dim() != b.spin_dim()) throw std::invalid_argument("multiply: dimension mismatch");
  BlockOp out(a.blocks(), a.spin_dim(), a.antilinear() != b.antilinear());

  std::vector<std::vector<std::pair<OpKey, const Coefficient*>>> by_row(b.dim());
  for (const auto& [k, c] : b.terms()) by_row[k.row].emplace_back(k, &c);

  // Derivatives of the transported right-hand coefficient, keyed by
  // (term address, reflected, derivative multi-index).
  std::map<std::tuple<const Coefficient*, bool, std::array<std::uint8_t, 3>>, Coefficient> cache;
  auto transported = [&](const Coefficient* c, bool reflect, const std::array<std::uint8_t, 3>& delta) -> const Coefficient& {
    auto key = std::make_tuple(c, reflect, delta);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Coefficient g = *c;
    if (a.antilinear()) g = g.conj();
    if (reflect) g = g.reflect();
    for (int j = 0; j < 3; ++j)
      for (int n = 0; n < delta[static_cast<std::size_t>(j)]; ++n) g = g.derivative(j + 1);
    return cache.emplace(key, std::move(g)).first->second;
  };

  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : by_row[ka.col]) {
      const bool flip = ka.upsilon && (kb.order() % 2 == 1);
      // Leibniz: d^alpha g = sum_gamma binom(alpha, gamma) (d^(alpha-gamma) g) d^gamma
      for (int g1 = 0; g1 <= ka.deriv[0]; ++g1)
        for (int g2 = 0; g2 <= ka.deriv[1]; ++g2)
          for (int g3 = 0; g3 <= ka.deriv[2]; ++g3) {
            std::array<std::uint8_t, 3> delta{static_cast<std::uint8_t>(ka.deriv[0] - g1),
                                              static_cast<std::uint8_t>(ka.deriv[1] - g2),
                                              static_cast<std::uint8_t>(ka.deriv[2] - g3)};
            const Coefficient& g = transported(cb, ka.upsilon, delta);
            if (g.is_zero()) continue;
            long long binom = 1;
            const std::array<int, 3> gam{g1, g2, g3};
            for (std::size_t j = 0; j < 3; ++j) {
              long long n = ka.deriv[j];
              long long r = gam[j];
              long long v = 1;
              for (long long t = 1; t <= r; ++t) v = v * (n - r + t) / t;
              binom *= v;
            }
            OpKey k;
            k.row = ka.row;
            k.col = kb.col;
            for (std::size_t j = 0; j < 3; ++j) k.deriv[j] = static_cast<std::uint8_t>(gam[j] + kb.deriv[j]);
            k.upsilon = ka.upsilon != kb.upsilon;
            Number factor(static_cast<int>(flip ? -binom : binom));
            out.add_term(k, factor * (ca * g));
          }
    }
  }
  return out;
}

inline BlockOp operator*(const BlockOp& a, const BlockOp& b) { return multiply(a, b); }

inline bool is_zero(const BlockOp& op) { return op.is_zero(); }

/// c when op = c * Id for a function c of p, nullopt otherwise.
inline std::optional<Coefficient> identity_multiple(const BlockOp& op) {
  if (op.is_zero()) return Coefficient();
  if (op.antilinear() || op.terms().size() != op.dim()) return std::nullopt;
  const Coefficient& first = op.terms().begin()->second;
  for (const auto& [k, c] : op.terms()) {
    if (k.row != k.col || k.order() != 0 || k.upsilon || c != first) return std::nullopt;
  }
  return first;
}

/// An operator M * Upsilon^u * K^k with M a constant matrix.
struct ConstantForm {
  DenseMatrix<Number> matrix;
  bool upsilon = false;
  bool antilinear = false;
};

inline std::optional<ConstantForm> constant_form(const BlockOp& op) {
  ConstantForm out{DenseMatrix<Number>(op.dim(), op.dim()), false, op.antilinear()};
  bool first = true;
  for (const auto& [k, c] : op.terms()) {
    if (k.order() != 0 || !c.is_constant()) return std::nullopt;
    if (first) out.upsilon = k.upsilon;
    if (k.upsilon != out.upsilon) return std::nullopt;
    first = false;
    out.matrix(k.row, k.col) = c.constant_value();
  }
  return out;
}

/// Operator M * Upsilon^u * K^k for a constant matrix M on `blocks` blocks.
inline BlockOp from_constant_form(const ConstantForm& f, std::size_t blocks) {
  const std::size_t d = f.matrix.rows() / blocks;
  BlockOp out(blocks, d, f.antilinear);
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    for (std::size_t c = 0; c < f.matrix.cols(); ++c) {
      if (f.matrix(r, c).is_zero()) continue;
      OpKey k;
      k.row = static_cast<std::uint16_t>(r);
      k.col = static_cast<std::uint16_t>(c);
      k.upsilon = f.upsilon;
      out.add_term(k, f.matrix(r, c));
    }
  return out;
}

inline BlockOp commutator(const BlockOp& a, const BlockOp& b) {
  if (a.antilinear() || b.antilinear())
    throw std::invalid_argument("commutator: antilinear operand; express the relation with multiply");
  if (a.dim() != b.dim() || a.blocks() != b.blocks()) throw std::invalid_argument("commutator: dimension mismatch");
  return multiply(a, b) - multiply(b, a);
}

/// Formal adjoint for <phi, psi> = integral phi^dagger psi d^3p / p0, using
/// (d_j)^dagger = -d_j + p_j / p0^2 and Upsilon^dagger = Upsilon.
inline BlockOp adjoint(const BlockOp& op) {
  if (op.antilinear()) throw std::invalid_argument("adjoint: antilinear operand");
  const std::size_t blocks = op.blocks();
  const std::size_t d = op.spin_dim();

  std::array<BlockOp, 3> partial_adj;
  for (int j = 1; j <= 3; ++j) {
    partial_adj[static_cast<std::size_t>(j - 1)] =
        -ops::partial(j, blocks, d) +
        ops::scalar(Coefficient::momentum(j) * Coefficient::inverse_energy(2), blocks, d);
  }
  std::map<std::array<std::uint8_t, 3>, BlockOp> deriv_adj;
  auto derivative_adjoint = [&](const std::array<std::uint8_t, 3>& alpha) -> const BlockOp& {
    auto it = deriv_adj.find(alpha);
    if (it != deriv_adj.end()) return it->second;
    BlockOp acc = ops::identity(blocks, d);
    for (std::size_t j = 0; j < 3; ++j)
      for (int n = 0; n < alpha[j]; ++n) acc = multiply(acc, partial_adj[j]);
    return deriv_adj.emplace(alpha, std::move(acc)).first->second;
  };
  const BlockOp reflect = ops::reflection(blocks, d);

  BlockOp out(blocks, d);
  for (const auto& [k, c] : op.terms()) {
    BlockOp unit(blocks, d);
    OpKey t;
    t.row = k.col;
    t.col = k.row;
    unit.add_term(t, c.conj());
    BlockOp term = multiply(derivative_adjoint(k.deriv), unit);
    if (k.upsilon) term = multiply(reflect, term);
    out += term;
  }
  return out;
}

}  // namespace poincare
