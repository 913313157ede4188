#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(2 pi i / 12).
//
// Elements are stored as c0 + c1 zeta + c2 zeta^2 + c3 zeta^3 with rational
// coefficients, always reduced modulo the minimal polynomial
// zeta^4 - zeta^2 + 1. The field contains q = zeta^4 (primitive cube root of
// unity), the imaginary unit zeta^3 and therefore every fourth root of unity.
// Canonical form makes equality a coefficient-wise comparison.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <ostream>
#include <string>

#include "loopqkz/errors.hpp"

namespace loopqkz {

using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw invalid_argument("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

// Parses "p", "p/d" or "-p/d" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw invalid_argument("cannot parse rational '" + text + "'");
  if (r.get_den() == 0) throw invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) { c_[0] = n; }  // NOLINT: implicit integer embedding
  explicit Scalar(Rational r) { c_[0] = std::move(r); }
  explicit Scalar(std::array<Rational, 4> coefficients) : c_(std::move(coefficients)) {
    for (auto& x : c_) x.canonicalize();
  }

  const Rational& coefficient(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::array<Rational, 4>& coefficients() const { return c_; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  Scalar& operator+=(const Scalar& o) {
    for (int k = 0; k < 4; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (int k = 0; k < 4; ++k)
      if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const {
    Scalar r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    std::array<Rational, 7> t;
    for (int i = 0; i < 4; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        t[i + j] += a.c_[i] * b.c_[j];
      }
    }
    // zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
    Scalar r;
    r.c_[0] = t[0] - t[4] - t[6];
    r.c_[1] = t[1] - t[5];
    r.c_[2] = t[2] + t[4];
    r.c_[3] = t[3] + t[5];
    return r;
  }

  Scalar scaled(const Rational& f) const {
    Scalar r;
    if (sgn(f) == 0) return r;
    for (int k = 0; k < 4; ++k)
      if (sgn(c_[k]) != 0) r.c_[k] = c_[k] * f;
    return r;
  }

  // Image under the field automorphism zeta -> zeta^k, gcd(k, 12) = 1.
  Scalar galois(int k) const;

  Scalar inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in Q(zeta12)");
    if (is_rational()) return Scalar(Rational(1) / c_[0]);
    // x^{-1} = (s5 x)(s7 x)(s11 x) / N(x), the norm N(x) being rational.
    Scalar y = galois(5) * galois(7) * galois(11);
    Scalar n = *this * y;
    if (!n.is_rational()) throw internal_error("norm in Q(zeta12) is not rational");
    return y.scaled(Rational(1) / n.c_[0]);
  }

  // Integer power, negative exponents allowed for nonzero elements.
  Scalar pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1L), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Total number of bits in all numerators and denominators; used as a pivot
  // size heuristic by the elimination routines.
  std::size_t bit_size() const {
    std::size_t s = 0;
    for (const auto& x : c_) {
      if (sgn(x) == 0) continue;
      s += mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
    }
    return s;
  }

  // Human-readable form, e.g. "1/2 - 3*z^2" where z is the 12th root of unity.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k < 4; ++k) {
      if (sgn(c_[k]) == 0) continue;
      Rational mag = abs(c_[k]);
      std::string term;
      if (k == 0 || mag != 1) term = mag.get_str();
      if (k > 0) {
        if (!term.empty()) term += "*";
        term += (k == 1) ? "z" : "z^" + std::to_string(k);
      }
      if (out.empty())
        out = (sgn(c_[k]) < 0 ? "-" : "") + term;
      else
        out += (sgn(c_[k]) < 0 ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  std::array<Rational, 4> c_{};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

inline Scalar scalar_from_rational(long p, long d) { return Scalar(make_rational(p, d)); }

// zeta^k reduced modulo zeta^4 - zeta^2 + 1; k is taken modulo 12.
inline Scalar root_of_unity(long k) {
  static const std::array<std::array<int, 4>, 12> table = {{
      {1, 0, 0, 0},   {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
      {-1, 0, 1, 0},  {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
      {0, 0, -1, 0},  {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
  }};
  long m = ((k % 12) + 12) % 12;
  const auto& row = table[static_cast<std::size_t>(m)];
  return Scalar(std::array<Rational, 4>{row[0], row[1], row[2], row[3]});
}

inline Scalar Scalar::galois(int k) const {
  Scalar r(c_[0]);
  for (int j = 1; j < 4; ++j)
    if (sgn(c_[j]) != 0) r += root_of_unity(static_cast<long>(k) * j).scaled(c_[j]);
  return r;
}

// q = exp(2 pi i / 3)
inline const Scalar& q_root() {
  static const Scalar q = root_of_unity(4);
  return q;
}

inline const Scalar& imaginary_unit() {
  static const Scalar i = root_of_unity(3);
  return i;
}

// Fourth root of unity s = i^k.
inline Scalar fourth_root(int k) { return root_of_unity(3L * k); }

// [z] = z - 1/z
inline Scalar bracket(const Scalar& z) {
  if (z.is_zero()) throw division_by_zero("bracket of zero");
  return z - z.inverse();
}

// k(z, zeta) = [z/(q zeta)] [z zeta/q]
inline Scalar kfun(const Scalar& z, const Scalar& zeta) {
  if (z.is_zero() || zeta.is_zero()) throw division_by_zero("k-function at zero argument");
  const Scalar& q = q_root();
  return bracket(z / (q * zeta)) * bracket(z * zeta / q);
}

}  // namespace loopqkz
