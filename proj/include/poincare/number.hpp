#pragma once

// Exact scalars: finite sums  sum_n q_n * sqrt(n)  with q_n in Q(i) and n a
// squarefree positive integer. This field is closed under the products that
// arise from ladder-operator spin matrices.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poincare {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    os << '/' << boost::multiprecision::denominator(q);
  }
  return os.str();
}

/// Gaussian rational re + i*im.
struct Gauss {
  Rational re{0};
  Rational im{0};

  Gauss() = default;
  Gauss(Rational r) : re(std::move(r)) {}
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(int r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  Gauss conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  Gauss inverse() const {
    if (is_zero()) throw std::domain_error("Gauss: division by zero");
    Rational n = norm2();
    return {re / n, -im / n};
  }

  Gauss operator-() const { return {-re, -im}; }
  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  std::string to_string() const {
    if (im == 0) return rational_string(re);
    std::string imag;
    if (im == 1) {
      imag = "i";
    } else if (im == -1) {
      imag = "-i";
    } else {
      imag = rational_string(im) + "*i";
    }
    if (re == 0) return imag;
    std::string out = "(" + rational_string(re);
    if (imag.front() != '-') out += "+";
    return out + imag + ")";
  }
};

namespace detail {

/// n = f^2 * m with m squarefree; returns {f, m}.
inline std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
  std::uint64_t f = 1;
  std::uint64_t m = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) f *= p;
    if (e % 2 == 1) m *= p;
  }
  m *= n;
  return {f, m};
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

class Number {
 public:
  using Entry = std::pair<std::uint64_t, Gauss>;  // (squarefree radicand, coefficient)

  Number() = default;
  Number(int v) : Number(Gauss(v)) {}
  Number(Rational q) : Number(Gauss(std::move(q))) {}
  Number(Gauss g) {
    if (!g.is_zero()) terms_.emplace_back(1, std::move(g));
  }

  static Number imag_unit() { return Number(Gauss(0, 1)); }
  static Number rational(long long num, long long den) {
    return Number(Rational(num) / Rational(den));
  }

  /// sqrt(n) for any non-negative integer n.
  static Number sqrt(std::uint64_t n) {
    if (n == 0) return {};
    auto [f, m] = detail::split_square(n);
    Number out;
    out.terms_.emplace_back(m, Gauss(Rational(Integer(f))));
    return out;
  }

  const std::vector<Entry>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return *this == Number(1); }

  /// True if the value lies in Q(i).
  bool is_gauss() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }
  Gauss as_gauss() const {
    if (!is_gauss()) throw std::domain_error("Number: value has a surd part");
    return terms_.empty() ? Gauss() : terms_[0].second;
  }
  bool is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Entry& e) { return e.second.im == 0; });
  }

  Number conj() const {
    Number out = *this;
    for (auto& e : out.terms_) e.second.im = -e.second.im;
    return out;
  }
  Number real_part() const {
    Number out;
    for (const auto& e : terms_)
      if (e.second.re != 0) out.terms_.emplace_back(e.first, Gauss(e.second.re));
    return out;
  }
  Number imag_part() const {
    Number out;
    for (const auto& e : terms_)
      if (e.second.im != 0) out.terms_.emplace_back(e.first, Gauss(e.second.im));
    return out;
  }

  Number operator-() const {
    Number out = *this;
    for (auto& e : out.terms_) e.second = -e.second;
    return out;
  }

  Number& operator+=(const Number& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
  }
  Number& operator-=(const Number& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
  }
  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }

  friend Number operator*(const Number& a, const Number& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
      return single_product(a.terms_[0], b.terms_[0]);
    }
    Number out;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out += single_product(x, y);
    return out;
  }
  Number& operator*=(const Number& o) { return *this = *this * o; }

  /// Multiplicative inverse; the field automorphisms sqrt(p) -> -sqrt(p)
  /// are applied prime by prime until the value is in Q(i).
  Number inverse() const {
    if (is_zero()) throw std::domain_error("Number: division by zero");
    std::set<std::uint64_t> primes;
    for (const auto& e : terms_)
      for (auto p : detail::prime_factors(e.first)) primes.insert(p);
    Number value = *this;
    Number cofactor(1);
    for (auto p : primes) {
      Number flipped = value.flip(p);
      cofactor *= flipped;
      value *= flipped;
    }
    return cofactor * Number(value.as_gauss().inverse());
  }
  friend Number operator/(const Number& a, const Number& b) { return a * b.inverse(); }

  friend bool operator==(const Number& a, const Number& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }
  friend bool operator<(const Number& a, const Number& b) { return a.compare(b) < 0; }

  std::complex<double> to_complex() const {
    std::complex<double> out{0.0, 0.0};
    for (const auto& e : terms_) out += e.second.to_complex() * std::sqrt(static_cast<double>(e.first));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [n, g] = terms_[k];
      std::string piece = g.to_string();
      if (n != 1) piece = (g == Gauss(1) ? std::string() : piece + "*") + "sqrt(" + std::to_string(n) + ")";
      if (k > 0 && piece.front() != '-') out += "+";
      out += piece;
    }
    return terms_.size() > 1 ? "(" + out + ")" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Number& n) { return os << n.to_string(); }

 private:
  std::vector<Entry> terms_;

  int compare(const Number& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = terms_[k];
      const auto& b = o.terms_[k];
      if (a.first != b.first) return a.first < b.first ? -1 : 1;
      if (a.second.re != b.second.re) return a.second.re < b.second.re ? -1 : 1;
      if (a.second.im != b.second.im) return a.second.im < b.second.im ? -1 : 1;
    }
    if (terms_.size() == o.terms_.size()) return 0;
    return terms_.size() < o.terms_.size() ? -1 : 1;
  }

  Number flip(std::uint64_t p) const {
    Number out = *this;
    for (auto& e : out.terms_)
      if (e.first % p == 0) e.second = -e.second;
    return out;
  }

  static Number single_product(const Entry& x, const Entry& y) {
    std::uint64_t g = std::gcd(x.first, y.first);
    std::uint64_t rad = (x.first / g) * (y.first / g);
    Gauss c = x.second * y.second;
    if (g != 1) c = c * Gauss(Rational(Integer(g)));
    Number out;
    if (!c.is_zero()) out.terms_.emplace_back(rad, std::move(c));
    return out;
  }

  static std::vector<Entry> merge(const std::vector<Entry>& a, const std::vector<Entry>& b, bool negate_b) {
    std::vector<Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, negate_b ? -b[j].second : b[j].second);
        ++j;
      } else {
        Gauss c = negate_b ? a[i].second - b[j].second : a[i].second + b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }
};

}  // namespace poincare
