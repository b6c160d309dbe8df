#pragma once

// Newton-Wigner position operators and the particle axioms: commuting
// components, theta Q = Q theta, pi Q = -Q pi, Euclidean covariance and
// self-adjointness.

#include <array>
#include <stdexcept>

#include "poincare/catalog.hpp"

namespace poincare {

struct PositionTriple {
  std::array<BlockOp, 3> q;
  const BlockOp& operator[](std::size_t j) const { return q[j]; }
};

/// F_j = i d_j - (i/2) p_j / p0^2 on one block; the counterterm may be
/// dropped (negative controls).
inline BlockOp newton_wigner_component(int j, std::size_t spin_dim, bool with_counterterm = true) {
  const Number i = Number::imag_unit();
  BlockOp out = i * ops::partial(j, 1, spin_dim);
  if (with_counterterm) {
    const Coefficient shift = Number::rational(1, 2) * (Coefficient::momentum(j) * Coefficient::inverse_energy(2));
    out -= i * ops::scalar(shift, 1, spin_dim);
  }
  return out;
}

/// Q_j = diag(F_j, ..., F_j) over `blocks` blocks (1 or 2).
inline PositionTriple newton_wigner(SpinWeight w, std::size_t blocks) {
  if (blocks != 1 && blocks != 2) throw std::invalid_argument("newton_wigner: block count must be 1 or 2");
  PositionTriple out;
  for (int j = 1; j <= 3; ++j)
    out.q[static_cast<std::size_t>(j - 1)] =
        ops::kron(DenseMatrix<Number>::identity(blocks), newton_wigner_component(j, w.dim()));
  return out;
}

/// Representations for which the position axioms are expected to hold with
/// Q = diag(F, F); for the others the outcome is only recorded.
inline bool position_axioms_expected(const RepLabel& label) {
  switch (label.kind) {
    case RepKind::up:
    case RepKind::down:
    case RepKind::sym3:
    case RepKind::sym5:
    case RepKind::new_up: return true;
    default: return false;
  }
}

inline std::vector<Relation> position_relations(const RepSpec& rep, const PositionTriple& q) {
  using detail::commutator_relation;
  using detail::idx;
  const Number i = Number::imag_unit();
  std::vector<Relation> out;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      out.push_back(commutator_relation("QQ." + idx(a) + idx(b), "[Q" + idx(a) + ",Q" + idx(b) + "] = 0",
                                        q.q[static_cast<std::size_t>(a)], q.q[static_cast<std::size_t>(b)], Number(0),
                                        nullptr));
  for (int a = 0; a < 3; ++a) {
    const BlockOp& qa = q.q[static_cast<std::size_t>(a)];
    out.push_back({"thetaQ." + idx(a), "Theta Q" + idx(a) + " = Q" + idx(a) + " Theta",
                   {{Number(1), {rep.theta, qa}}, {Number(-1), {qa, rep.theta}}}});
    out.push_back({"piQ." + idx(a), "Pi Q" + idx(a) + " = -Q" + idx(a) + " Pi",
                   {{Number(1), {rep.pi, qa}}, {Number(1), {qa, rep.pi}}}});
  }
  const BlockOp id = ops::identity(rep.blocks, rep.spin.dim());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      out.push_back(commutator_relation("QP." + idx(a) + idx(b),
                                        "[Q" + idx(a) + ",P" + idx(b) + "] = " + (a == b ? "i" : "0"),
                                        q.q[static_cast<std::size_t>(a)], rep.p[static_cast<std::size_t>(b)],
                                        a == b ? i : Number(0), a == b ? &id : nullptr));
  // [J_k, Q_j] = i eps_kjl Q_l
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      const int l = 3 - k - j;
      const int e = k == j ? 0 : detail::levi_civita(k, j, l);
      std::string name = "[J" + idx(k) + ",Q" + idx(j) + "] = ";
      name += e == 0 ? "0" : std::string(e > 0 ? "" : "-") + "i*Q" + idx(l);
      out.push_back(commutator_relation("JQ." + idx(k) + idx(j), name, rep.j[static_cast<std::size_t>(k)],
                                        q.q[static_cast<std::size_t>(j)], Number(e) * i,
                                        e == 0 ? nullptr : &q.q[static_cast<std::size_t>(l)]));
    }
  return out;
}

inline RelationReport verify_position_axioms(const RepSpec& rep, const PositionTriple& q) {
  RelationReport out = verify_relations(position_relations(rep, q), "position.");
  for (int a = 0; a < 3; ++a) {
    const BlockOp& qa = q.q[static_cast<std::size_t>(a)];
    const std::string n = detail::idx(a);
    out.checks.push_back(detail::zero_check("position.adjoint." + n + ": Q" + n + "^dagger = Q" + n, adjoint(qa) - qa));
  }
  return out;
}

}  // namespace poincare
