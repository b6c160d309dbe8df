#pragma once

// Momentum-grid realization of the operator algebra: apply BlockOps to
// sampled wavefunctions with second-order central differences and measure
// how relation residuals shrink under refinement.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "poincare/catalog.hpp"

namespace poincare {

using cplx = std::complex<double>;

class Grid {
 public:
  Grid(double extent, int points_per_axis, std::array<double, 3> center = {0.0, 0.0, 0.0})
      : extent_(extent), n_(points_per_axis), center_(center) {
    if (points_per_axis < 8) throw std::invalid_argument("Grid: at least 8 points per axis required");
    if (!(extent > 0.0)) throw std::invalid_argument("Grid: extent must be positive");
  }

  double extent() const { return extent_; }
  int points_per_axis() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }
  double spacing() const { return 2.0 * extent_ / (n_ - 1); }
  /// Coordinate of index i along `axis`; index (N-1)/2 sits at the center.
  double coord(int axis, int i) const { return center_[static_cast<std::size_t>(axis)] + (i - 0.5 * (n_ - 1)) * spacing(); }
  /// Reflection p -> -p maps grid points onto grid points.
  bool symmetric() const { return center_[0] == 0.0 && center_[1] == 0.0 && center_[2] == 0.0; }
  const std::array<double, 3>& center() const { return center_; }

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)) * n_ + static_cast<std::size_t>(k);
  }
  std::array<double, 3> point(std::size_t idx) const {
    const int k = static_cast<int>(idx % n_);
    const int j = static_cast<int>((idx / n_) % n_);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n_) * n_));
    return {coord(0, i), coord(1, j), coord(2, k)};
  }

 private:
  double extent_;
  int n_;
  std::array<double, 3> center_;
};

/// Values ordered point-major: values[point * dim + component], component =
/// block * (2s+1) + spin index.
struct GridState {
  Grid grid;
  SpinWeight spin{0};
  std::size_t blocks = 1;
  std::vector<cplx> values;

  std::size_t dim() const { return blocks * spin.dim(); }
};

inline double energy_at(double mu, const std::array<double, 3>& p) {
  return std::sqrt(mu * mu + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

/// <phi, psi> = sum conj(phi) psi h^3 / p0
inline cplx inner(const GridState& phi, const GridState& psi, double mu) {
  if (phi.values.size() != psi.values.size()) throw std::invalid_argument("inner: shape mismatch");
  const std::size_t d = psi.dim();
  const double h = psi.grid.spacing();
  cplx sum = 0.0;
  for (std::size_t pt = 0; pt < psi.grid.size(); ++pt) {
    cplx local = 0.0;
    for (std::size_t a = 0; a < d; ++a) local += std::conj(phi.values[pt * d + a]) * psi.values[pt * d + a];
    sum += local / energy_at(mu, psi.grid.point(pt));
  }
  return sum * h * h * h;
}

inline double norm(const GridState& psi, double mu) { return std::sqrt(std::max(0.0, inner(psi, psi, mu).real())); }

/// exp(-|p - center|^2 / (2 width^2)) * spinor_b on block b, scaled to unit dnu-norm.
inline GridState sample_gaussian(const Grid& grid, const std::array<double, 3>& center, double width,
                                 const std::vector<std::vector<cplx>>& spinors, double mu = 1.0) {
  if (!(width > 0.0)) throw std::invalid_argument("sample_gaussian: width must be positive");
  if (spinors.empty()) throw std::invalid_argument("sample_gaussian: no spinor given");
  const std::size_t d = spinors.front().size();
  bool nonzero = false;
  for (const auto& s : spinors) {
    if (s.size() != d) throw std::invalid_argument("sample_gaussian: spinors of different length");
    for (const auto& v : s) nonzero = nonzero || std::abs(v) > 0.0;
  }
  if (!nonzero) throw std::invalid_argument("sample_gaussian: null spinor");
  // Closest boundary face to the center.
  double gap = 1e300;
  for (int a = 0; a < 3; ++a) {
    const double lo = grid.coord(a, 0);
    const double hi = grid.coord(a, grid.points_per_axis() - 1);
    gap = std::min({gap, center[static_cast<std::size_t>(a)] - lo, hi - center[static_cast<std::size_t>(a)]});
  }
  if (gap <= 0.0 || std::exp(-gap * gap / (2.0 * width * width)) >= 1e-12)
    throw std::invalid_argument("sample_gaussian: Gaussian tail at the boundary exceeds 1e-12 of the peak");

  GridState psi{grid, SpinWeight(static_cast<int>(d) - 1), spinors.size(), {}};
  const std::size_t dim = psi.dim();
  psi.values.assign(grid.size() * dim, 0.0);
  for (std::size_t pt = 0; pt < grid.size(); ++pt) {
    const auto p = grid.point(pt);
    double r2 = 0.0;
    for (int a = 0; a < 3; ++a) r2 += (p[static_cast<std::size_t>(a)] - center[static_cast<std::size_t>(a)]) *
                                      (p[static_cast<std::size_t>(a)] - center[static_cast<std::size_t>(a)]);
    const double g = std::exp(-r2 / (2.0 * width * width));
    for (std::size_t b = 0; b < spinors.size(); ++b)
      for (std::size_t a = 0; a < d; ++a) psi.values[pt * dim + b * d + a] = g * spinors[b][a];
  }
  const double nrm = norm(psi, mu);
  for (auto& v : psi.values) v /= nrm;
  return psi;
}

namespace detail {

/// Coefficient (A + B p0) / (p0^a (mu + p0)^b) with floating-point monomials.
class CompiledCoefficient {
 public:
  explicit CompiledCoefficient(const Coefficient& c)
      : a_(compile(c.rational_part())), b_(compile(c.energy_part())), pa_(c.energy_denominator()),
        pb_(c.shifted_denominator()) {}

  cplx eval(double mu, const std::array<double, 3>& p, double p0) const {
    cplx num = eval_poly(a_, mu, p);
    if (!b_.empty()) num += eval_poly(b_, mu, p) * p0;
    double den = 1.0;
    for (int i = 0; i < pa_; ++i) den *= p0;
    for (int i = 0; i < pb_; ++i) den *= mu + p0;
    return num / den;
  }

 private:
  struct Mono {
    cplx c;
    std::array<int, 4> e;
  };
  std::vector<Mono> a_, b_;
  int pa_, pb_;

  static std::vector<Mono> compile(const Poly& poly) {
    std::vector<Mono> out;
    for (const auto& [e, c] : poly.terms()) out.push_back({c.to_complex(), {e[0], e[1], e[2], e[3]}});
    return out;
  }
  static cplx eval_poly(const std::vector<Mono>& poly, double mu, const std::array<double, 3>& p) {
    cplx out = 0.0;
    for (const auto& m : poly) {
      double v = 1.0;
      for (int i = 0; i < m.e[0]; ++i) v *= mu;
      for (int a = 0; a < 3; ++a)
        for (int i = 0; i < m.e[static_cast<std::size_t>(a + 1)]; ++i) v *= p[static_cast<std::size_t>(a)];
      out += m.c * v;
    }
    return out;
  }
};

/// Central-difference derivative of `order` along `axis`; zero where the
/// stencil leaves the grid.
inline std::vector<cplx> difference(const std::vector<cplx>& f, const Grid& grid, int axis, int order) {
  if (order == 0) return f;
  const int n = grid.points_per_axis();
  const double h = grid.spacing();
  const std::size_t stride = axis == 0 ? static_cast<std::size_t>(n) * n : axis == 1 ? static_cast<std::size_t>(n) : 1;
  std::vector<cplx> out(f.size(), 0.0);
  const bool second = order >= 2;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const int pos = static_cast<int>((idx / stride) % static_cast<std::size_t>(n));
    if (pos == 0 || pos == n - 1) continue;
    if (second)
      out[idx] = (f[idx + stride] - 2.0 * f[idx] + f[idx - stride]) / (h * h);
    else
      out[idx] = (f[idx + stride] - f[idx - stride]) / (2.0 * h);
  }
  return second ? difference(out, grid, axis, order - 2) : out;
}

}  // namespace detail

/// Applies op to psi: coefficients at numeric mu, d_j by central differences,
/// Upsilon by index reflection, K by conjugation, spin matrices exactly.
inline GridState apply(const BlockOp& op, const GridState& psi, double mu) {
  const std::size_t dim = psi.dim();
  if (op.dim() != dim) throw std::invalid_argument("apply: operator and state dimensions differ");
  const Grid& grid = psi.grid;
  const std::size_t npts = grid.size();

  using Key = std::tuple<std::array<std::uint8_t, 3>, bool, std::uint16_t>;
  std::map<Key, std::vector<std::pair<std::uint16_t, detail::CompiledCoefficient>>> groups;
  for (const auto& [k, c] : op.terms()) {
    if (k.upsilon && !grid.symmetric()) throw std::invalid_argument("apply: reflection requires a grid symmetric about 0");
    groups[{k.deriv, k.upsilon, k.col}].emplace_back(k.row, detail::CompiledCoefficient(c));
  }

  std::vector<double> p0(npts);
  for (std::size_t pt = 0; pt < npts; ++pt) p0[pt] = energy_at(mu, grid.point(pt));

  GridState out{grid, psi.spin, psi.blocks, std::vector<cplx>(npts * dim, 0.0)};
  for (const auto& [key, rows] : groups) {
    const auto& [deriv, upsilon, col] = key;
    std::vector<cplx> f(npts);
    for (std::size_t pt = 0; pt < npts; ++pt) {
      const std::size_t src = upsilon ? npts - 1 - pt : pt;
      const cplx v = psi.values[src * dim + col];
      f[pt] = op.antilinear() ? std::conj(v) : v;
    }
    for (int axis = 0; axis < 3; ++axis) f = detail::difference(f, grid, axis, deriv[static_cast<std::size_t>(axis)]);
    for (std::size_t pt = 0; pt < npts; ++pt) {
      if (f[pt] == 0.0) continue;
      const auto p = grid.point(pt);
      for (const auto& [row, coeff] : rows) out.values[pt * dim + row] += coeff.eval(mu, p, p0[pt]) * f[pt];
    }
  }
  return out;
}

/// (sum_w coeff_w * factors_w) psi, factors applied right to left.
inline GridState apply_relation(const Relation& rel, const GridState& psi, double mu) {
  GridState total{psi.grid, psi.spin, psi.blocks, std::vector<cplx>(psi.values.size(), 0.0)};
  for (const auto& w : rel.words) {
    GridState cur = psi;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) cur = apply(*it, cur, mu);
    const cplx c = w.coeff.to_complex();
    for (std::size_t i = 0; i < total.values.size(); ++i) total.values[i] += c * cur.values[i];
  }
  return total;
}

/// ||(LHS - RHS) psi|| / ||psi|| in the dnu norm.
inline double residual(const RepSpec& rep, const std::string& relation_id, const GridState& psi, double mu) {
  const auto rel = find_relation(rep, relation_id);
  if (!rel) throw std::invalid_argument("residual: unknown relation id " + relation_id);
  return norm(apply_relation(*rel, psi, mu), mu) / norm(psi, mu);
}

struct NumericReport {
  std::string relation_id;
  std::vector<int> points;
  std::vector<double> spacings;
  std::vector<double> residuals;
  double slope = 0.0;
  bool exact = false;

  /// Exact relations, or second-order convergence within [1.7, 2.3].
  bool pass() const { return exact || (slope >= 1.7 && slope <= 2.3); }
};

/// Generic test spinor on each block (distinct, non-degenerate components).
inline std::vector<std::vector<cplx>> default_spinors(SpinWeight w, std::size_t blocks) {
  std::vector<std::vector<cplx>> out(blocks, std::vector<cplx>(w.dim()));
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t a = 0; a < w.dim(); ++a)
      out[b][a] = cplx(1.0 + 0.3 * static_cast<double>(a) - 0.2 * static_cast<double>(b),
                       0.5 * static_cast<double>(a + b) - 0.1);
  return out;
}

/// Off-center Gaussian of width extent/8 used by the convergence studies.
inline GridState study_state(const RepSpec& rep, const Grid& grid, double mu) {
  const double w = grid.extent() / 8.0;
  return sample_gaussian(grid, {0.3 * w, -0.2 * w, 0.1 * w}, w, default_spinors(rep.spin, rep.blocks), mu);
}

inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Residuals of one relation on a refinement sequence (spacing halving, ratio
/// within [1.9, 2.1]) and the log-log slope against the spacing.
inline NumericReport convergence_study(const RepSpec& rep, const std::string& relation_id, const std::vector<Grid>& grids,
                                       double mu = 1.0) {
  if (grids.size() < 3) throw std::invalid_argument("convergence_study: at least 3 grids required");
  for (std::size_t i = 1; i < grids.size(); ++i) {
    const double ratio = grids[i - 1].spacing() / grids[i].spacing();
    if (ratio < 1.9 || ratio > 2.1)
      throw std::invalid_argument("convergence_study: grid sequence is not nested (spacing must halve)");
  }
  const auto rel = find_relation(rep, relation_id);
  if (!rel) throw std::invalid_argument("convergence_study: unknown relation id " + relation_id);

  NumericReport out;
  out.relation_id = relation_id;
  std::vector<double> lx, ly;
  out.exact = true;
  for (const auto& g : grids) {
    const GridState psi = study_state(rep, g, mu);
    const double r = norm(apply_relation(*rel, psi, mu), mu) / norm(psi, mu);
    out.points.push_back(g.points_per_axis());
    out.spacings.push_back(g.spacing());
    out.residuals.push_back(r);
    out.exact = out.exact && r < 1e-12;
    lx.push_back(std::log(g.spacing()));
    ly.push_back(std::log(std::max(r, 1e-300)));
  }
  out.slope = least_squares_slope(lx, ly);
  return out;
}

/// Standard refinement sequence with the given points per axis.
inline std::vector<Grid> grid_sequence(double extent, const std::vector<int>& points) {
  std::vector<Grid> out;
  for (int n : points) out.emplace_back(extent, n);
  return out;
}

}  // namespace poincare
