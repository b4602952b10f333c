#include "zstab/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "zstab/errors.hpp"

namespace zstab {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(const std::string& token) {
  std::size_t start = 0;
  if (!token.empty() && (token[0] == '+' || token[0] == '-')) start = 1;
  const auto slash = token.find('/');
  const std::size_t num_end = slash == std::string::npos ? token.size() : slash;
  if (!all_digits(token, start, num_end) ||
      (slash != std::string::npos && !all_digits(token, slash + 1, token.size())))
    throw ParseError("malformed rational '" + token + "'");
  std::string text = token[0] == '+' ? token.substr(1) : token;
  if (slash != std::string::npos && std::all_of(token.begin() + static_cast<std::ptrdiff_t>(slash + 1), token.end(),
                                                [](char c) { return c == '0'; }))
    throw ParseError("zero denominator in rational '" + token + "'");
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Rational im_conj(const GaussianRational& a, const GaussianRational& b) { return a.re * b.im - a.im * b.re; }

Rational re_conj(const GaussianRational& a, const GaussianRational& b) { return a.re * b.re + a.im * b.im; }

std::string to_string(const GaussianRational& z) {
  if (is_zero(z.im)) return to_string(z.re);
  std::string im_part = z.im == 1 ? "i" : z.im == -1 ? "-i" : to_string(z.im) + "i";
  if (is_zero(z.re)) return im_part;
  if (sgn(z.im) > 0) return to_string(z.re) + "+" + im_part;
  return to_string(z.re) + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

RPoly real_part(const CPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.re);
  return RPoly(std::move(out));
}

RPoly imag_part(const CPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.im);
  return RPoly(std::move(out));
}

CPoly conj(const CPoly& p) {
  std::vector<GaussianRational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.conj());
  return CPoly(std::move(out));
}

CPoly to_complex(const RPoly& p) {
  std::vector<GaussianRational> out(p.coeffs().begin(), p.coeffs().end());
  return CPoly(std::move(out));
}

namespace {

template <class T>
std::string poly_to_string(const Poly<T>& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (i == 1) os << var;
    if (i > 1) os << var << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const RPoly& p, char var) { return poly_to_string(p, var); }
std::string to_string(const CPoly& p, char var) { return poly_to_string(p, var); }

RPoly im_conj_product(const CPoly& p, const CPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i].re * b[j].im - a[i].im * b[j].re;
  return RPoly(std::move(out));
}

int sign_at_zero_plus(const RPoly& p) {
  const auto k = p.order();
  return k ? sign(p.coeffs()[*k]) : 0;
}

int sign_at_infinity(const RPoly& p) { return p.is_zero() ? 0 : sign(p.coeffs().back()); }

namespace {

std::strong_ordering from_sign_of_difference(int s) {
  // s is the sign of (B - A).
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_at_zero_plus(const RPoly& a, const RPoly& b) {
  return from_sign_of_difference(sign_at_zero_plus(b - a));
}

std::strong_ordering compare_at_infinity(const RPoly& a, const RPoly& b) {
  return from_sign_of_difference(sign_at_infinity(b - a));
}

const Rational& ExtReal::value() const {
  if (!value_) throw std::logic_error("ExtReal::value() on +inf");
  return *value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return compare(*a.value_, *b.value_);
}

std::string to_string(const ExtReal& x) { return x.is_infinite() ? "+inf" : to_string(x.value()); }

namespace {

template <class T>
std::strong_ordering lex_impl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) throw std::invalid_argument("lex_compare: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::strong_ordering c = std::strong_ordering::equal;
    if constexpr (std::is_same_v<T, Rational>)
      c = compare(u[i], v[i]);
    else
      c = u[i] <=> v[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering lex_compare(std::span<const ExtReal> u, std::span<const ExtReal> v) { return lex_impl(u, v); }

std::strong_ordering lex_compare(std::span<const Rational> u, std::span<const Rational> v) { return lex_impl(u, v); }

}  // namespace zstab
