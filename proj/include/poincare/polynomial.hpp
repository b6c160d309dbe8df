#pragma once

// Sparse polynomials in mu, p1, p2, p3 with Number coefficients.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "poincare/number.hpp"

namespace poincare {

/// Variable index: 0 = mu, 1..3 = p1..p3.
enum class Var : int { mu = 0, p1 = 1, p2 = 2, p3 = 3 };

/// Packed exponent vector, one byte per variable. The p1 byte is most
/// significant so map order groups terms by p1-degree (used by division).
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr explicit Exponent(std::uint32_t packed) : packed_(packed) {}

  static constexpr int shift(int var) {
    constexpr std::array<int, 4> shifts{16, 24, 8, 0};
    return shifts[static_cast<std::size_t>(var)];
  }
  static constexpr Exponent of(int var, int power) {
    return Exponent(static_cast<std::uint32_t>(power) << shift(var));
  }

  constexpr int operator[](int var) const { return static_cast<int>((packed_ >> shift(var)) & 0xffu); }
  constexpr std::uint32_t packed() const { return packed_; }
  constexpr int momentum_degree() const { return (*this)[1] + (*this)[2] + (*this)[3]; }

  friend constexpr Exponent operator+(Exponent a, Exponent b) { return Exponent(a.packed_ + b.packed_); }
  friend constexpr Exponent operator-(Exponent a, Exponent b) { return Exponent(a.packed_ - b.packed_); }
  friend constexpr bool operator<(Exponent a, Exponent b) { return a.packed_ < b.packed_; }
  friend constexpr bool operator>(Exponent a, Exponent b) { return a.packed_ > b.packed_; }
  friend constexpr bool operator==(Exponent a, Exponent b) { return a.packed_ == b.packed_; }

 private:
  std::uint32_t packed_ = 0;
};

class Poly {
 public:
  using Terms = std::map<Exponent, Number, std::greater<>>;

  Poly() = default;
  Poly(Number c) {
    if (!c.is_zero()) terms_.emplace(Exponent(), std::move(c));
  }
  Poly(int c) : Poly(Number(c)) {}

  static Poly var(Var v, int power = 1) {
    Poly out;
    out.terms_.emplace(Exponent::of(static_cast<int>(v), power), Number(1));
    return out;
  }
  static Poly momentum(int j) { return var(static_cast<Var>(j)); }
  static Poly mu() { return var(Var::mu); }
  /// p1^2 + p2^2 + p3^2
  static Poly momentum_squared() { return var(Var::p1, 2) + var(Var::p2, 2) + var(Var::p3, 2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent()); }
  Number constant_term() const {
    auto it = terms_.find(Exponent());
    return it == terms_.end() ? Number() : it->second;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend Poly operator*(const Number& s, const Poly& p) {
    if (s.is_zero()) return {};
    Poly out = p;
    for (auto& [e, c] : out.terms_) c = s * c;
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly conj() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = c.conj();
    return out;
  }

  /// p -> -p (mu fixed).
  Poly reflect() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_)
      if (e.momentum_degree() % 2 == 1) c = -c;
    return out;
  }

  /// d/dp_j of the polynomial part (mu and p independent), j in 1..3.
  Poly derivative(int j) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      int k = e[j];
      if (k == 0) continue;
      out.add_term(e - Exponent::of(j, 1), Number(k) * c);
    }
    return out;
  }

  /// Exact quotient by a divisor monic in p1 (its only term of top p1-degree
  /// is p1^k with coefficient 1); nullopt when the remainder is non-zero.
  std::optional<Poly> divide_exact(const Poly& divisor) const {
    const int k = divisor.terms_.begin()->first[1];
    const Exponent lead = Exponent::of(1, k);
    Poly rest = divisor;
    rest.terms_.erase(rest.terms_.begin());
    if (divisor.terms_.begin()->first != lead || !divisor.terms_.begin()->second.is_one() ||
        (!rest.is_zero() && rest.terms_.begin()->first[1] >= k)) {
      throw std::invalid_argument("Poly::divide_exact: divisor must be monic in p1");
    }
    Poly remainder = *this;
    Poly quotient;
    while (!remainder.is_zero()) {
      auto top = remainder.terms_.begin();
      if (top->first[1] < k) return std::nullopt;
      Exponent qe = top->first - lead;
      Number qc = top->second;
      quotient.add_term(qe, qc);
      remainder.terms_.erase(top);
      for (const auto& [e, c] : rest.terms_) remainder.add_term(qe + e, -(qc * c));
    }
    return quotient;
  }

  std::complex<double> eval(double mu, const std::array<double, 3>& p) const {
    std::complex<double> out{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
      double m = 1.0;
      for (int k = 0; k < e[0]; ++k) m *= mu;
      for (int j = 1; j <= 3; ++j)
        for (int k = 0; k < e[j]; ++k) m *= p[static_cast<std::size_t>(j - 1)];
      out += c.to_complex() * m;
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    static const std::array<const char*, 4> names{"mu", "p1", "p2", "p3"};
    std::string out;
    bool first = true;
    // Print in ascending total degree for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (int v : {0, 1, 2, 3}) {
        int k = e[v];
        if (k == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[static_cast<std::size_t>(v)];
        if (k > 1) mono += "^" + std::to_string(k);
      }
      std::string coef = c.to_string();
      std::string piece;
      if (mono.empty()) {
        piece = coef;
      } else if (c == Number(1)) {
        piece = mono;
      } else if (c == Number(-1)) {
        piece = "-" + mono;
      } else {
        piece = coef + "*" + mono;
      }
      if (!first && piece.front() != '-') out += "+";
      out += piece;
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;

  void add_term(Exponent e, const Number& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
};

}  // namespace poincare
