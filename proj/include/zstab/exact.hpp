#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars and univariate polynomials over Q and Q[i].
 *
 * Every stability verdict in the library reduces to the sign of an exact
 * rational quantity, either the lowest-order coefficient of a polynomial in
 * a small parameter (behaviour at 0+) or the highest-order one (behaviour at
 * infinity). No floating point is used anywhere in this header.
 */

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace zstab {

/// Arbitrary-precision rational, always kept canonical.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Sign of x as -1, 0 or +1.
inline int sign(const Rational& x) {
  const int s = sgn(x);
  return (s > 0) - (s < 0);
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Parses "p", "+p", "-p" or "p/q" (q > 0 after sign handling).
/// Throws ParseError naming the offending token.
Rational parse_rational(const std::string& token);

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& x);

Rational factorial(unsigned n);

/// Element of Q[i].
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit widening
  GaussianRational(int r) : re(r) {}                   // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }

/// Im(conj(a) * b) = a.re * b.im - a.im * b.re.
Rational im_conj(const GaussianRational& a, const GaussianRational& b);
/// Re(conj(a) * b).
Rational re_conj(const GaussianRational& a, const GaussianRational& b);

std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/**
 * Dense univariate polynomial; index i holds the coefficient of t^i.
 * Trailing zeros are trimmed, so the zero polynomial has no coefficients.
 */
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Poly monomial(T c, std::size_t power) {
    std::vector<T> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Index of the lowest nonzero coefficient, if any.
  std::optional<std::size_t> order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!zstab::is_zero(coeffs_[i])) return i;
    return std::nullopt;
  }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Horner evaluation.
  T operator()(const T& x) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && zstab::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RPoly = Poly<Rational>;
using CPoly = Poly<GaussianRational>;

RPoly real_part(const CPoly& p);
RPoly imag_part(const CPoly& p);
CPoly conj(const CPoly& p);
CPoly to_complex(const RPoly& p);

std::string to_string(const RPoly& p, char var = 't');
std::string to_string(const CPoly& p, char var = 't');

/// The real polynomial t -> Im(conj(P(t)) * Q(t)).
RPoly im_conj_product(const CPoly& p, const CPoly& q);

/// Sign of P(t) for every sufficiently small t > 0; 0 for the zero polynomial.
int sign_at_zero_plus(const RPoly& p);

/// Sign of P(t) for every sufficiently large t; 0 for the zero polynomial.
int sign_at_infinity(const RPoly& p);

/// Order of A and B as functions on (0, t0) for small t0.
std::strong_ordering compare_at_zero_plus(const RPoly& a, const RPoly& b);

/// Order of A and B as functions on (t0, +inf) for large t0.
std::strong_ordering compare_at_infinity(const RPoly& a, const RPoly& b);

/// Q extended by a single point +inf above every rational.
class ExtReal {
 public:
  ExtReal(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit widening
  ExtReal(int v) : value_(Rational(v)) {}        // NOLINT
  static ExtReal infinity() { return ExtReal(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  ExtReal() = default;
  std::optional<Rational> value_;
};

std::string to_string(const ExtReal& x);

/// Lexicographic order, index 0 most significant. Throws std::invalid_argument
/// on length mismatch.
std::strong_ordering lex_compare(std::span<const ExtReal> u, std::span<const ExtReal> v);
std::strong_ordering lex_compare(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace zstab
