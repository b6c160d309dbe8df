#pragma once

// Scalar functions on the mass shell p0^2 = mu^2 + |p|^2 (p0 > 0):
//
//     (A + B*p0) / (p0^a * (mu + p0)^b)
//
// with A, B polynomials in mu, p1, p2, p3. Every value is kept with the
// smallest exponents a, b; since p0 and mu + p0 are non-associate primes of
// the mass-shell ring this representation is unique, so equality is
// structural.

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "poincare/number.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Number c) : a_(std::move(c)) {}
  Coefficient(int c) : a_(c) {}
  Coefficient(Poly a) : a_(std::move(a)) {}
  Coefficient(Poly a, Poly b, int p0_power, int shifted_power)
      : a_(std::move(a)), b_(std::move(b)), p0_power_(p0_power), shifted_power_(shifted_power) {
    reduce();
  }

  static Coefficient p0() { return {Poly(), Poly(1), 0, 0}; }
  static Coefficient momentum(int j) { return Coefficient(Poly::momentum(j)); }
  static Coefficient mu() { return Coefficient(Poly::mu()); }
  /// 1 / (mu + p0)
  static Coefficient inverse_shifted_energy() { return {Poly(1), Poly(), 0, 1}; }
  /// 1 / p0^k
  static Coefficient inverse_energy(int k) { return {Poly(1), Poly(), k, 0}; }

  /// Numerator parts and denominator exponents.
  const Poly& rational_part() const { return a_; }
  const Poly& energy_part() const { return b_; }
  int energy_denominator() const { return p0_power_; }
  int shifted_denominator() const { return shifted_power_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && p0_power_ == 0 && shifted_power_ == 0 && a_.is_constant(); }
  Number constant_value() const { return a_.constant_term(); }

  Coefficient operator-() const { return {-a_, -b_, p0_power_, shifted_power_, Reduced{}}; }

  friend Coefficient operator+(const Coefficient& x, const Coefficient& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    int a = std::max(x.p0_power_, y.p0_power_);
    int b = std::max(x.shifted_power_, y.shifted_power_);
    auto [xa, xb] = x.lifted(a, b);
    auto [ya, yb] = y.lifted(a, b);
    return {xa + ya, xb + yb, a, b};
  }
  friend Coefficient operator-(const Coefficient& x, const Coefficient& y) { return x + (-y); }
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }

  friend Coefficient operator*(const Coefficient& x, const Coefficient& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.is_constant()) return x.constant_value() * y;
    if (y.is_constant()) return y.constant_value() * x;
    Poly a = x.a_ * y.a_ + x.b_ * y.b_ * shell();
    Poly b = x.a_ * y.b_ + x.b_ * y.a_;
    return {std::move(a), std::move(b), x.p0_power_ + y.p0_power_, x.shifted_power_ + y.shifted_power_};
  }
  friend Coefficient operator*(const Number& s, const Coefficient& c) {
    if (s.is_zero()) return {};
    return {s * c.a_, s * c.b_, c.p0_power_, c.shifted_power_, Reduced{}};
  }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  friend bool operator==(const Coefficient& x, const Coefficient& y) {
    return x.p0_power_ == y.p0_power_ && x.shifted_power_ == y.shifted_power_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Coefficient& x, const Coefficient& y) { return !(x == y); }

  Coefficient conj() const { return {a_.conj(), b_.conj(), p0_power_, shifted_power_, Reduced{}}; }

  /// f(p) -> f(-p); p0 is even in p.
  Coefficient reflect() const { return {a_.reflect(), b_.reflect(), p0_power_, shifted_power_, Reduced{}}; }

  /// d/dp_j (j in 1..3) with d p0 / d p_j = p_j / p0.
  Coefficient derivative(int j) const {
    if (is_zero()) return {};
    const Poly pj = Poly::momentum(j);
    const int a = p0_power_;
    const int b = shifted_power_;
    Coefficient out(a_.derivative(j), b_.derivative(j), a, b);
    out += Coefficient(b_ * pj, Poly(), a + 1, b);
    if (a > 0) out += Coefficient(Number(-a) * (pj * a_), Number(-a) * (pj * b_), a + 2, b);
    if (b > 0) out += Coefficient(Number(-b) * (pj * a_), Number(-b) * (pj * b_), a + 1, b + 1);
    return out;
  }

  std::complex<double> eval(double mu, const std::array<double, 3>& p) const {
    double p0 = std::sqrt(mu * mu + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    std::complex<double> num = a_.eval(mu, p) + b_.eval(mu, p) * p0;
    return num / (std::pow(p0, p0_power_) * std::pow(mu + p0, shifted_power_));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string num;
    if (!a_.is_zero()) num = a_.to_string();
    if (!b_.is_zero()) {
      std::string bp = b_.to_string();
      std::string piece = b_.terms().size() > 1 ? "(" + bp + ")*p0" : (bp == "1" ? "p0" : bp == "-1" ? "-p0" : bp + "*p0");
      if (!num.empty() && piece.front() != '-') num += "+";
      num += piece;
    }
    if (p0_power_ == 0 && shifted_power_ == 0) return num;
    std::string den;
    if (p0_power_ > 0) den = p0_power_ == 1 ? "p0" : "p0^" + std::to_string(p0_power_);
    if (shifted_power_ > 0) {
      if (!den.empty()) den += "*";
      den += shifted_power_ == 1 ? "(mu+p0)" : "(mu+p0)^" + std::to_string(shifted_power_);
    }
    return "(" + num + ")/(" + den + ")";
  }

 private:
  struct Reduced {};
  Coefficient(Poly a, Poly b, int p0_power, int shifted_power, Reduced)
      : a_(std::move(a)), b_(std::move(b)), p0_power_(p0_power), shifted_power_(shifted_power) {
    if (is_zero()) p0_power_ = shifted_power_ = 0;
  }

  Poly a_;
  Poly b_;
  int p0_power_ = 0;
  int shifted_power_ = 0;

  /// mu^2 + |p|^2, the value of p0^2.
  static const Poly& shell() {
    static const Poly value = Poly::var(Var::mu, 2) + Poly::momentum_squared();
    return value;
  }
  static const Poly& radius() {
    static const Poly value = Poly::momentum_squared();
    return value;
  }

  /// Numerator parts after multiplying by p0^(a - a_) (mu + p0)^(b - b_).
  std::pair<Poly, Poly> lifted(int a, int b) const {
    Poly x = a_;
    Poly y = b_;
    for (int k = p0_power_; k < a; ++k) {
      Poly nx = y * shell();
      y = std::move(x);
      x = std::move(nx);
    }
    const Poly m = Poly::mu();
    for (int k = shifted_power_; k < b; ++k) {
      Poly nx = x * m + y * shell();
      Poly ny = x + y * m;
      x = std::move(nx);
      y = std::move(ny);
    }
    return {std::move(x), std::move(y)};
  }

  void reduce() {
    if (is_zero()) {
      p0_power_ = shifted_power_ = 0;
      return;
    }
    // (A + B p0)/p0 = B + (A / p0^2) p0 when (mu^2 + r^2) | A.
    while (p0_power_ > 0) {
      auto q = a_.divide_exact(shell());
      if (!q) break;
      a_ = std::move(b_);
      b_ = std::move(*q);
      --p0_power_;
    }
    // (A + B p0)/(mu + p0) = (B - mu C) + C p0 with C = (A - mu B)/r^2.
    const Poly m = Poly::mu();
    while (shifted_power_ > 0) {
      auto c = (a_ - m * b_).divide_exact(radius());
      if (!c) break;
      a_ = b_ - m * *c;
      b_ = std::move(*c);
      --shifted_power_;
    }
  }
};

}  // namespace poincare
