#pragma once

// Catalogued positive-mass representations: generators, time reversal
// (theta) and space inversion (pi) as explicit operators, plus the relation
// sets every representation has to satisfy.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare/report.hpp"
#include "poincare/spin.hpp"
#include "poincare/symop.hpp"

namespace poincare {

enum class RepKind { up, down, sym1, sym2, sym3, sym4, sym5, sym6, new_up, new_down, quad };

/// Block matrix T-hat in theta = tau K Upsilon T-hat for the reducible-sheet reps.
enum class THat { identity, symplectic };

enum class SpectrumClass { up, down, symmetric };
enum class OperatorKind { unitary, antiunitary };

/// Whether the restriction to the proper orthochronous subgroup is irreducible.
enum class SheetClass { irreducible, reducible };

inline const char* to_string(SpectrumClass s) {
  switch (s) {
    case SpectrumClass::up: return "up";
    case SpectrumClass::down: return "down";
    case SpectrumClass::symmetric: return "symmetric";
  }
  return "?";
}
inline const char* to_string(OperatorKind k) { return k == OperatorKind::unitary ? "unitary" : "antiunitary"; }
inline const char* to_string(SheetClass c) { return c == SheetClass::irreducible ? "U+- irreducible" : "U+- reducible"; }

struct RepLabel {
  RepKind kind = RepKind::up;
  THat t_hat = THat::identity;  // new_up / new_down only
  int pi_square_sign = 1;       // quad only

  std::string token() const {
    switch (kind) {
      case RepKind::up: return "up";
      case RepKind::down: return "down";
      case RepKind::sym1: return "sym1";
      case RepKind::sym2: return "sym2";
      case RepKind::sym3: return "sym3";
      case RepKind::sym4: return "sym4";
      case RepKind::sym5: return "sym5";
      case RepKind::sym6: return "sym6";
      case RepKind::new_up: return t_hat == THat::identity ? "newup:identity" : "newup:symplectic";
      case RepKind::new_down: return t_hat == THat::identity ? "newdown:identity" : "newdown:symplectic";
      case RepKind::quad: return pi_square_sign > 0 ? "quad:+1" : "quad:-1";
    }
    return "?";
  }

  static std::optional<RepLabel> parse(const std::string& s) {
    static const std::array<std::pair<const char*, RepKind>, 8> simple{{{"up", RepKind::up},
                                                                        {"down", RepKind::down},
                                                                        {"sym1", RepKind::sym1},
                                                                        {"sym2", RepKind::sym2},
                                                                        {"sym3", RepKind::sym3},
                                                                        {"sym4", RepKind::sym4},
                                                                        {"sym5", RepKind::sym5},
                                                                        {"sym6", RepKind::sym6}}};
    for (const auto& [name, kind] : simple)
      if (s == name) return RepLabel{kind};
    if (s == "newup:identity") return RepLabel{RepKind::new_up, THat::identity};
    if (s == "newup:symplectic") return RepLabel{RepKind::new_up, THat::symplectic};
    if (s == "newdown:identity") return RepLabel{RepKind::new_down, THat::identity};
    if (s == "newdown:symplectic") return RepLabel{RepKind::new_down, THat::symplectic};
    if (s == "quad:+1" || s == "quad:1") return RepLabel{RepKind::quad, THat::identity, 1};
    if (s == "quad:-1") return RepLabel{RepKind::quad, THat::identity, -1};
    return std::nullopt;
  }

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

struct RepSpec {
  RepLabel label;
  SpinWeight spin{0};
  std::size_t blocks = 1;
  BlockOp p0;
  std::array<BlockOp, 3> p;
  std::array<BlockOp, 3> j;
  std::array<BlockOp, 3> k;
  BlockOp theta;
  BlockOp pi;
  SpectrumClass spectrum = SpectrumClass::up;
  SheetClass sheet = SheetClass::irreducible;
  int theta_square = 1;
  int pi_square = 1;
  Number omega{1};

  OperatorKind theta_kind() const { return theta.antilinear() ? OperatorKind::antiunitary : OperatorKind::unitary; }
  OperatorKind pi_kind() const { return pi.antilinear() ? OperatorKind::antiunitary : OperatorKind::unitary; }

  /// The ten generators in the order P0, P1..P3, J1..J3, K1..K3.
  std::vector<std::pair<std::string, const BlockOp*>> generators() const {
    std::vector<std::pair<std::string, const BlockOp*>> out{{"P0", &p0}};
    for (int i = 0; i < 3; ++i) out.emplace_back("P" + std::to_string(i + 1), &p[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 3; ++i) out.emplace_back("J" + std::to_string(i + 1), &j[static_cast<std::size_t>(i)]);
    for (int i = 0; i < 3; ++i) out.emplace_back("K" + std::to_string(i + 1), &k[static_cast<std::size_t>(i)]);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Single-sheet building blocks on C^(2s+1)-valued functions.

struct SheetGenerators {
  BlockOp p0;
  std::array<BlockOp, 3> p;
  std::array<BlockOp, 3> j;
  std::array<BlockOp, 3> k;
};

/// Orbital part i(p_l d_k - p_k d_l) of J_j, (j,k,l) cyclic; j in 1..3.
inline BlockOp orbital_generator(int j, std::size_t spin_dim) {
  const int k = j % 3 + 1;
  const int l = k % 3 + 1;
  BlockOp orb = ops::momentum(l, 1, spin_dim) * ops::partial(k, 1, spin_dim) -
                ops::momentum(k, 1, spin_dim) * ops::partial(l, 1, spin_dim);
  return Number::imag_unit() * orb;
}

/// k_j = i p0 d_j - (S x p)_j / (mu + p0); the spin part may be dropped
/// (used by negative controls).
inline BlockOp boost_generator(int j, SpinWeight w, bool with_spin_term = true) {
  const std::size_t d = w.dim();
  BlockOp out = Number::imag_unit() * (ops::energy(1, d) * ops::partial(j, 1, d));
  if (!with_spin_term || w.two_s() == 0) return out;
  const SpinTriple s = spin_matrices(w);
  const int k = j % 3 + 1;
  const int l = k % 3 + 1;
  const Coefficient inv = Coefficient::inverse_shifted_energy();
  BlockOp cross = ops::spin(s[static_cast<std::size_t>(k - 1)]) * ops::scalar(Coefficient::momentum(l) * inv, 1, d) -
                  ops::spin(s[static_cast<std::size_t>(l - 1)]) * ops::scalar(Coefficient::momentum(k) * inv, 1, d);
  return out - cross;
}

/// Generators of the irreducible representation on the positive sheet.
inline SheetGenerators positive_sheet(SpinWeight w) {
  const std::size_t d = w.dim();
  const SpinTriple s = spin_matrices(w);
  SheetGenerators g;
  g.p0 = ops::energy(1, d);
  for (int i = 1; i <= 3; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    g.p[idx] = ops::momentum(i, 1, d);
    g.j[idx] = orbital_generator(i, d) + ops::spin(s[idx]);
    g.k[idx] = boost_generator(i, w);
  }
  return g;
}

/// Negative-sheet generators: P0 -> -P0, K -> -K.
inline SheetGenerators negative_sheet(SpinWeight w) {
  SheetGenerators g = positive_sheet(w);
  g.p0 = -g.p0;
  for (auto& x : g.k) x = -x;
  return g;
}

namespace detail {

inline DenseMatrix<Number> small_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  DenseMatrix<Number> m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = Number(v);
    ++r;
  }
  return m;
}

inline DenseMatrix<Number> diag_signs(const std::vector<int>& signs) {
  DenseMatrix<Number> m(signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) m(i, i) = Number(signs[i]);
  return m;
}

/// Copies the sheet generators onto the blocks with the given P0 / K signs.
inline void lift(RepSpec& rep, const SheetGenerators& g, const std::vector<int>& signs) {
  const auto same = DenseMatrix<Number>::identity(signs.size());
  const auto flip = diag_signs(signs);
  rep.blocks = signs.size();
  rep.p0 = ops::kron(flip, g.p0);
  for (std::size_t i = 0; i < 3; ++i) {
    rep.p[i] = ops::kron(same, g.p[i]);
    rep.j[i] = ops::kron(same, g.j[i]);
    rep.k[i] = ops::kron(flip, g.k[i]);
  }
}

/// tau K Upsilon on one block.
inline BlockOp tau_k_upsilon(SpinWeight w) {
  const std::size_t d = w.dim();
  return ops::spin(tau_matrix(w).tau) * ops::reflection(1, d) * ops::conjugation(1, d);
}

inline int tau_tau_bar(SpinWeight w) { return w.is_integer() ? 1 : -1; }

}  // namespace detail

/// The block form of theta that the symmetric-spectrum table prints for the
/// two antiunitary-theta members, tau K Upsilon * offdiag(1,1). It fails the
/// theta/P0 relation and is only evaluated as a recorded check.
inline BlockOp alternative_offdiag_theta(SpinWeight w) {
  return ops::kron(detail::small_matrix({{0, 1}, {1, 0}}), detail::tau_k_upsilon(w));
}

inline RepSpec build(const RepLabel& label, SpinWeight w) {
  using detail::small_matrix;
  const std::size_t d = w.dim();
  const int tt = detail::tau_tau_bar(w);
  const auto swap2 = small_matrix({{0, 1}, {1, 0}});
  const auto sympl = small_matrix({{0, 1}, {-1, 0}});
  const auto tau = tau_matrix(w).tau;
  const BlockOp conj1 = ops::conjugation(1, d);
  const BlockOp refl1 = ops::reflection(1, d);

  RepSpec rep;
  rep.label = label;
  rep.spin = w;

  switch (label.kind) {
    case RepKind::up:
    case RepKind::down: {
      const bool up = label.kind == RepKind::up;
      detail::lift(rep, up ? positive_sheet(w) : negative_sheet(w), {1});
      rep.theta = detail::tau_k_upsilon(w);
      rep.pi = refl1;
      rep.spectrum = up ? SpectrumClass::up : SpectrumClass::down;
      rep.theta_square = tt;
      rep.pi_square = 1;
      rep.omega = Number(1);
      break;
    }
    case RepKind::sym1:
    case RepKind::sym2:
    case RepKind::sym3:
    case RepKind::sym4:
    case RepKind::sym5:
    case RepKind::sym6: {
      detail::lift(rep, positive_sheet(w), {1, -1});
      rep.spectrum = SpectrumClass::symmetric;
      const BlockOp tau_k = ops::spin(tau) * conj1;
      if (label.kind == RepKind::sym1 || label.kind == RepKind::sym2) {
        rep.theta = ops::kron(swap2, ops::identity(1, d));
        const auto signs = label.kind == RepKind::sym1 ? detail::diag_signs({1, 1}) : detail::diag_signs({1, -1});
        rep.pi = ops::kron(signs, refl1);
        rep.theta_square = 1;
        rep.pi_square = 1;
        rep.omega = Number(label.kind == RepKind::sym1 ? 1 : -1);
      } else if (label.kind == RepKind::sym3 || label.kind == RepKind::sym4) {
        rep.theta = ops::kron(swap2, ops::identity(1, d));
        const bool three = label.kind == RepKind::sym3;
        rep.pi = ops::kron(three ? swap2 : sympl, tau_k);
        rep.theta_square = 1;
        rep.pi_square = three ? tt : -tt;
        rep.omega = Number(three ? 1 : -1);
      } else {
        rep.theta = ops::kron(DenseMatrix<Number>::identity(2), detail::tau_k_upsilon(w));
        const bool five = label.kind == RepKind::sym5;
        rep.pi = ops::kron(five ? swap2 : sympl, tau_k);
        rep.theta_square = tt;
        rep.pi_square = five ? tt : -tt;
        rep.omega = Number(1);
      }
      break;
    }
    case RepKind::new_up:
    case RepKind::new_down: {
      const bool up = label.kind == RepKind::new_up;
      detail::lift(rep, up ? positive_sheet(w) : negative_sheet(w), {1, 1});
      rep.spectrum = up ? SpectrumClass::up : SpectrumClass::down;
      rep.sheet = SheetClass::reducible;
      rep.pi = ops::kron(swap2, refl1);
      const bool symplectic = label.t_hat == THat::symplectic;
      rep.theta = ops::kron(symplectic ? sympl : DenseMatrix<Number>::identity(2), detail::tau_k_upsilon(w));
      rep.pi_square = 1;
      rep.theta_square = symplectic ? -tt : tt;
      rep.omega = Number(symplectic ? -1 : 1);
      break;
    }
    case RepKind::quad: {
      if (w.two_s() != 0) throw std::invalid_argument("build: the four-block representation exists only for spin 0");
      if (label.pi_square_sign != 1 && label.pi_square_sign != -1)
        throw std::invalid_argument("build: pi square sign must be +1 or -1");
      detail::lift(rep, positive_sheet(w), {1, -1, 1, -1});
      rep.spectrum = SpectrumClass::symmetric;
      rep.sheet = SheetClass::reducible;
      rep.theta = ops::kron(small_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}), ops::identity(1, 1));
      const auto m = label.pi_square_sign < 0
                         ? small_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}})
                         : small_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
      rep.pi = ops::kron(m, conj1);
      rep.theta_square = 1;
      rep.pi_square = label.pi_square_sign;
      rep.omega = Number(1);
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Relations, written as  sum_w coeff_w * (factor_1 ... factor_n) = 0.

struct Word {
  Number coeff;
  std::vector<BlockOp> factors;
};

struct Relation {
  std::string id;    // stable key, e.g. "KP.11" or "theta.K2"
  std::string name;  // human-readable identity
  std::vector<Word> words;
};

inline BlockOp evaluate(const Relation& rel) {
  BlockOp total;
  bool first = true;
  for (const auto& w : rel.words) {
    BlockOp prod = w.factors.front();
    for (std::size_t i = 1; i < w.factors.size(); ++i) prod = multiply(prod, w.factors[i]);
    prod = w.coeff * prod;
    if (first) {
      total = std::move(prod);
      first = false;
    } else {
      total += prod;
    }
  }
  return total;
}

namespace detail {

inline int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

/// [a, b] - coeff * c = 0
inline Relation commutator_relation(std::string id, std::string name, const BlockOp& a, const BlockOp& b,
                                    const Number& coeff, const BlockOp* c) {
  Relation r{std::move(id), std::move(name), {{Number(1), {a, b}}, {Number(-1), {b, a}}}};
  if (c != nullptr && !coeff.is_zero()) r.words.push_back({-coeff, {*c}});
  return r;
}

inline std::string idx(int a) { return std::to_string(a + 1); }

}  // namespace detail

/// All 45 instances of the Poincare Lie algebra relations.
inline std::vector<Relation> lie_relations(const RepSpec& rep) {
  using detail::commutator_relation;
  using detail::idx;
  const Number i = Number::imag_unit();
  std::vector<Relation> out;
  auto third = [](int a, int b) { return 3 - a - b; };
  auto at = [](const std::array<BlockOp, 3>& x, int a) -> const BlockOp& { return x[static_cast<std::size_t>(a)]; };

  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      out.push_back(commutator_relation("PP." + idx(a) + idx(b), "[P" + idx(a) + ",P" + idx(b) + "] = 0", at(rep.p, a),
                                        at(rep.p, b), Number(0), nullptr));
  // [J_a, X_b] = i eps_abc X_c for X in {P, K}
  auto vector_rel = [&](const std::string& tag, const std::array<BlockOp, 3>& x) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int c = third(a, b);
        const int e = a == b ? 0 : detail::levi_civita(a, b, c);
        std::string name = "[J" + idx(a) + "," + tag + idx(b) + "] = ";
        name += e == 0 ? "0" : std::string(e > 0 ? "" : "-") + "i*" + tag + idx(c);
        out.push_back(commutator_relation("J" + tag + "." + idx(a) + idx(b), name, at(rep.j, a), at(x, b),
                                          Number(e) * i, e == 0 ? nullptr : &at(x, c)));
      }
  };
  vector_rel("P", rep.p);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const int c = third(a, b);
      const int e = detail::levi_civita(a, b, c);
      out.push_back(commutator_relation("JJ." + idx(a) + idx(b),
                                        "[J" + idx(a) + ",J" + idx(b) + "] = " + (e > 0 ? "" : "-") + "i*J" + idx(c),
                                        at(rep.j, a), at(rep.j, b), Number(e) * i, &at(rep.j, c)));
    }
  vector_rel("K", rep.k);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const int c = third(a, b);
      const int e = -detail::levi_civita(a, b, c);
      out.push_back(commutator_relation("KK." + idx(a) + idx(b),
                                        "[K" + idx(a) + ",K" + idx(b) + "] = " + (e > 0 ? "" : "-") + "i*J" + idx(c),
                                        at(rep.k, a), at(rep.k, b), Number(e) * i, &at(rep.j, c)));
    }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      out.push_back(commutator_relation("KP." + idx(a) + idx(b),
                                        "[K" + idx(a) + ",P" + idx(b) + "] = " + (a == b ? "i*P0" : "0"), at(rep.k, a),
                                        at(rep.p, b), a == b ? i : Number(0), a == b ? &rep.p0 : nullptr));
  for (int a = 0; a < 3; ++a)
    out.push_back(commutator_relation("PP0." + idx(a), "[P" + idx(a) + ",P0] = 0", at(rep.p, a), rep.p0, Number(0), nullptr));
  for (int a = 0; a < 3; ++a)
    out.push_back(commutator_relation("JP0." + idx(a), "[J" + idx(a) + ",P0] = 0", at(rep.j, a), rep.p0, Number(0), nullptr));
  for (int a = 0; a < 3; ++a)
    out.push_back(commutator_relation("KP0." + idx(a), "[K" + idx(a) + ",P0] = i*P" + idx(a), at(rep.k, a), rep.p0, i,
                                      &at(rep.p, a)));
  return out;
}

/// Sign s in D G = s G D for D = theta or pi of the given kind; generator
/// families ordered P0, P, J, K.
inline std::array<int, 4> discrete_signs(bool is_theta, OperatorKind kind) {
  const bool anti = kind == OperatorKind::antiunitary;
  if (!is_theta) return anti ? std::array<int, 4>{-1, 1, -1, 1} : std::array<int, 4>{1, -1, 1, -1};
  return anti ? std::array<int, 4>{1, -1, -1, 1} : std::array<int, 4>{-1, 1, 1, -1};
}

/// D G - s G D = 0 for the ten generators G, D = theta or pi.
inline std::vector<Relation> discrete_generator_relations(const RepSpec& rep, bool is_theta, const BlockOp& d,
                                                          const std::string& tag) {
  const auto signs = discrete_signs(is_theta, d.antilinear() ? OperatorKind::antiunitary : OperatorKind::unitary);
  const std::string sym = is_theta ? "Theta" : "Pi";
  std::vector<Relation> out;
  std::size_t n = 0;
  for (const auto& [gname, g] : rep.generators()) {
    const int s = signs[n == 0 ? 0 : (n - 1) / 3 + 1];
    ++n;
    Relation r{tag + "." + gname, sym + " " + gname + " = " + (s > 0 ? "" : "-") + gname + " " + sym,
               {{Number(1), {d, *g}}, {Number(-s), {*g, d}}}};
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Relation> discrete_relations(const RepSpec& rep) {
  auto out = discrete_generator_relations(rep, true, rep.theta, "theta");
  auto more = discrete_generator_relations(rep, false, rep.pi, "pi");
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

/// Every relation that gridlab can evaluate numerically, keyed by id.
inline std::optional<Relation> find_relation(const RepSpec& rep, const std::string& id) {
  for (auto& r : lie_relations(rep))
    if (r.id == id) return r;
  for (auto& r : discrete_relations(rep))
    if (r.id == id) return r;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification.

namespace detail {

inline CheckResult zero_check(const std::string& name, const BlockOp& residual) {
  CheckResult c{name, "symbolic", residual.is_zero() ? CheckStatus::pass : CheckStatus::fail, "0"};
  if (!residual.is_zero()) c.detail = residual.to_string();
  return c;
}

inline bool is_unitary_matrix(const DenseMatrix<Number>& m) {
  return m.adjoint() * m == DenseMatrix<Number>::identity(m.rows());
}

}  // namespace detail

inline RelationReport verify_relations(const std::vector<Relation>& rels, const std::string& prefix) {
  RelationReport rep;
  for (const auto& r : rels) rep.checks.push_back(detail::zero_check(prefix + r.id + ": " + r.name, evaluate(r)));
  return rep;
}

inline RelationReport verify_lie_relations(const RepSpec& rep) { return verify_relations(lie_relations(rep), "lie."); }

/// c with op = c * Id when c is a constant.
inline std::optional<Number> constant_identity_multiple(const BlockOp& op) {
  auto c = identity_multiple(op);
  if (!c || !c->is_constant()) return std::nullopt;
  return c->constant_value();
}

inline RelationReport verify_discrete_relations(const RepSpec& rep) {
  for (const auto& [name, g] : rep.generators())
    if (g->antilinear()) throw std::invalid_argument("verify_discrete_relations: generator " + name + " is antilinear");

  RelationReport out = verify_relations(discrete_relations(rep), "discrete.");

  auto square_check = [&](const std::string& tag, const std::string& sym, const BlockOp& d, int declared) {
    const BlockOp sq = multiply(d, d);
    const auto found = constant_identity_multiple(sq);
    CheckResult c{"discrete." + tag + ".square: " + sym + "^2 = " + std::to_string(declared) + "*Id", "symbolic",
                  CheckStatus::fail, ""};
    if (found) {
      out.found[tag + "_square"] = *found;
      c.detail = found->to_string() + "*Id";
      if (*found == Number(declared)) c.status = CheckStatus::pass;
    } else {
      c.detail = "not a multiple of Id: " + sq.to_string();
    }
    out.checks.push_back(c);
  };
  square_check("theta", "Theta", rep.theta, rep.theta_square);
  square_check("pi", "Pi", rep.pi, rep.pi_square);

  auto unitarity_check = [&](const std::string& tag, const std::string& sym, const BlockOp& d) {
    const auto form = constant_form(d);
    const bool ok = form && detail::is_unitary_matrix(form->matrix);
    out.checks.push_back({"discrete." + tag + ".unitary: " + sym + " is " +
                              (d.antilinear() ? "anti-unitary" : "unitary"),
                          "symbolic", ok ? CheckStatus::pass : CheckStatus::fail,
                          ok ? "constant unitary matrix" : "matrix part not unitary"});
  };
  unitarity_check("theta", "Theta", rep.theta);
  unitarity_check("pi", "Pi", rep.pi);

  // Pi Theta = omega Theta Pi with omega read off the normal forms.
  {
    const BlockOp pt = multiply(rep.pi, rep.theta);
    const BlockOp tp = multiply(rep.theta, rep.pi);
    CheckResult c{"discrete.omega: Pi Theta = omega Theta Pi, omega = " + rep.omega.to_string(), "symbolic",
                  CheckStatus::fail, ""};
    std::optional<Number> omega;
    if (!tp.is_zero()) {
      const auto& [key, coeff] = *tp.terms().begin();
      auto it = pt.terms().find(key);
      if (it != pt.terms().end() && coeff.is_constant() && it->second.is_constant())
        omega = it->second.constant_value() / coeff.constant_value();
    }
    if (omega && (pt - *omega * tp).is_zero()) {
      out.found["omega"] = *omega;
      c.detail = "omega = " + omega->to_string();
      if (*omega == rep.omega) c.status = CheckStatus::pass;
    } else {
      c.detail = "Pi Theta is not a multiple of Theta Pi";
    }
    out.checks.push_back(c);
  }

  if (rep.label.kind == RepKind::sym5 || rep.label.kind == RepKind::sym6) {
    RepSpec alt = rep;
    alt.theta = alternative_offdiag_theta(rep.spin);
    const auto rels = discrete_generator_relations(alt, true, alt.theta, "theta");
    std::string failing;
    for (const auto& r : rels)
      if (!evaluate(r).is_zero()) failing += (failing.empty() ? "" : ", ") + r.name;
    out.checks.push_back({"discrete.theta.offdiag_form: Theta = tau K Upsilon offdiag(1,1)", "symbolic",
                          CheckStatus::recorded, failing.empty() ? "all theta relations hold" : "fails: " + failing});
  }
  return out;
}

inline RelationReport verify_self_adjoint(const RepSpec& rep) {
  RelationReport out;
  for (const auto& [name, g] : rep.generators())
    out.checks.push_back(detail::zero_check("adjoint." + name + ": " + name + "^dagger = " + name, adjoint(*g) - *g));
  return out;
}

/// W0 = P.J, W_j = P0 J_j + (P x K)_j
inline std::array<BlockOp, 4> lubanski(const RepSpec& rep) {
  std::array<BlockOp, 4> w;
  w[0] = rep.p[0] * rep.j[0] + rep.p[1] * rep.j[1] + rep.p[2] * rep.j[2];
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3;
    const std::size_t c = (a + 2) % 3;
    w[a + 1] = rep.p0 * rep.j[a] + (rep.p[b] * rep.k[c] - rep.p[c] * rep.k[b]);
  }
  return w;
}

struct CasimirValues {
  BlockOp mass;  // P0^2 - |P|^2
  BlockOp spin;  // W0^2 - |W|^2
  std::optional<Coefficient> mass_value;
  std::optional<Coefficient> spin_value;
};

inline CasimirValues casimirs(const RepSpec& rep) {
  CasimirValues out;
  out.mass = rep.p0 * rep.p0 - (rep.p[0] * rep.p[0] + rep.p[1] * rep.p[1] + rep.p[2] * rep.p[2]);
  const auto w = lubanski(rep);
  out.spin = w[0] * w[0] - (w[1] * w[1] + w[2] * w[2] + w[3] * w[3]);
  out.mass_value = identity_multiple(out.mass);
  out.spin_value = identity_multiple(out.spin);
  return out;
}

inline Coefficient expected_spin_casimir(SpinWeight w) {
  const Coefficient mu2 = Coefficient::mu() * Coefficient::mu();
  return Number(-w.casimir()) * mu2;
}

inline RelationReport verify_casimirs(const RepSpec& rep) {
  RelationReport out;
  const auto cas = casimirs(rep);
  const Coefficient mu2 = Coefficient::mu() * Coefficient::mu();
  const BlockOp mass_res = cas.mass - ops::scalar(mu2, rep.blocks, rep.spin.dim());
  const Coefficient spin_expected = expected_spin_casimir(rep.spin);
  const BlockOp spin_res = cas.spin - ops::scalar(spin_expected, rep.blocks, rep.spin.dim());
  auto mass = detail::zero_check("casimir.mass: P0^2 - |P|^2 = mu^2*Id", mass_res);
  auto spin = detail::zero_check("casimir.spin: W^2 = " + spin_expected.to_string() + "*Id", spin_res);
  if (cas.mass_value) mass.detail = cas.mass_value->to_string() + "*Id";
  if (cas.spin_value) spin.detail = cas.spin_value->to_string() + "*Id";
  out.checks.push_back(mass);
  out.checks.push_back(spin);
  // Lubanski four-vector commutes with the translations.
  const auto w = lubanski(rep);
  out.checks.push_back(detail::zero_check("casimir.lubanski: [W0,P0] = 0", commutator(w[0], rep.p0)));
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum decision table and catalog enumeration.

inline std::set<SpectrumClass> allowed_spectra(OperatorKind theta, OperatorKind pi) {
  if (theta == OperatorKind::antiunitary && pi == OperatorKind::unitary) return {SpectrumClass::up, SpectrumClass::down};
  return {SpectrumClass::symmetric};
}

struct CatalogEntry {
  RepLabel label;
  OperatorKind theta = OperatorKind::unitary;
  OperatorKind pi = OperatorKind::unitary;
  SpectrumClass spectrum = SpectrumClass::up;
  SheetClass sheet = SheetClass::irreducible;
};

inline std::vector<RepLabel> catalog_labels(SpinWeight w) {
  std::vector<RepLabel> out;
  for (RepKind k : {RepKind::up, RepKind::down, RepKind::sym1, RepKind::sym2, RepKind::sym3, RepKind::sym4,
                    RepKind::sym5, RepKind::sym6})
    out.push_back({k});
  for (RepKind k : {RepKind::new_up, RepKind::new_down})
    for (THat t : {THat::identity, THat::symplectic}) out.push_back({k, t});
  if (w.two_s() == 0) {
    out.push_back({RepKind::quad, THat::identity, 1});
    out.push_back({RepKind::quad, THat::identity, -1});
  }
  return out;
}

inline std::vector<CatalogEntry> enumerate_catalog(SpinWeight w) {
  std::vector<CatalogEntry> out;
  for (const auto& label : catalog_labels(w)) {
    const RepSpec rep = build(label, w);
    out.push_back({label, rep.theta_kind(), rep.pi_kind(), rep.spectrum, rep.sheet});
  }
  return out;
}

}  // namespace poincare
