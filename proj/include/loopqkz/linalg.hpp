#pragma once

// Exact linear algebra: fraction-free determinants over an integral domain,
// univariate Laurent polynomials with exact division, and null spaces of
// operators over the cyclotomic field.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "loopqkz/exactfield.hpp"
#include "loopqkz/sparse.hpp"

namespace loopqkz {

template <typename R>
using Matrix = std::vector<std::vector<R>>;

// Laurent polynomial in one indeterminate t with coefficients in Q(zeta12).
// Stored sparsely, zero coefficients never kept.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}  // NOLINT: constant embedding
  explicit LaurentPoly(const Scalar& c) {
    if (!c.is_zero()) terms_[0] = c;
  }
  static LaurentPoly monomial(const Scalar& c, long exponent) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[exponent] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Scalar>& terms() const { return terms_; }
  long low() const { return terms_.begin()->first; }
  long high() const { return terms_.rbegin()->first; }
  Scalar coefficient(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const { return LaurentPoly() - *this; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Exact quotient; throws internal_error if b does not divide a.
  friend LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw division_by_zero("Laurent polynomial division by zero");
    LaurentPoly rem = a, quo;
    const long bh = b.high();
    const Scalar lead_inv = b.terms_.rbegin()->second.inverse();
    const long span = b.high() - b.low();
    while (!rem.is_zero() && rem.high() - rem.low() >= span) {
      const long e = rem.high() - bh;
      const Scalar c = rem.terms_.rbegin()->second * lead_inv;
      quo.add_term(e, c);
      rem -= b * monomial(c, e);
    }
    if (!rem.is_zero()) throw internal_error("inexact Laurent polynomial division");
    return quo;
  }

  Scalar evaluate(const Scalar& t) const {
    Scalar r;
    for (const auto& [e, c] : terms_) r += c * t.pow(e);
    return r;
  }

 private:
  void add_term(long e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<long, Scalar> terms_;
};

inline Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }

// Bareiss fraction-free determinant. Every division is exact in the ring.
template <typename R>
R bareiss_determinant(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1L);
  for (const auto& row : m)
    if (row.size() != n) throw invalid_argument("determinant of a non-square matrix");
  R prev(1L);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return R();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = R();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

namespace detail {

// Element of Z[zeta12]; the elimination below runs over this ring so that
// no gcd has to be taken during the inner loop.
struct IntElem {
  std::array<mpz_class, 4> c;

  bool is_zero() const { return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0; }

  std::size_t bit_size() const {
    std::size_t s = 0;
    for (const auto& x : c)
      if (sgn(x) != 0) s += mpz_sizeinbase(x.get_mpz_t(), 2);
    return s;
  }

  friend IntElem operator*(const IntElem& a, const IntElem& b) {
    std::array<mpz_class, 7> t;
    for (int i = 0; i < 4; ++i) {
      if (sgn(a.c[i]) == 0) continue;
      for (int j = 0; j < 4; ++j)
        if (sgn(b.c[j]) != 0) mpz_addmul(t[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    IntElem r;
    r.c[0] = t[0] - t[4] - t[6];
    r.c[1] = t[1] - t[5];
    r.c[2] = t[2] + t[4];
    r.c[3] = t[3] + t[5];
    return r;
  }

  friend IntElem operator-(const IntElem& a, const IntElem& b) {
    IntElem r;
    for (int k = 0; k < 4; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }

  IntElem galois(int k) const {
    IntElem r;
    r.c[0] = c[0];
    for (int j = 1; j < 4; ++j) {
      if (sgn(c[j]) == 0) continue;
      const Scalar u = root_of_unity(static_cast<long>(k) * j);
      for (int m = 0; m < 4; ++m)
        if (sgn(u.coefficient(m)) != 0) r.c[m] += c[j] * u.coefficient(m).get_num();
    }
    return r;
  }

  Scalar to_scalar() const {
    return Scalar(std::array<Rational, 4>{Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])});
  }
};

// Exact division by a fixed nonzero element d: x / d = x * conj(d) / N(d).
class ExactDivisor {
 public:
  explicit ExactDivisor(const IntElem& d) {
    cofactor_ = d.galois(5) * d.galois(7) * d.galois(11);
    const IntElem n = d * cofactor_;
    norm_ = n.c[0];
    if (sgn(n.c[1]) != 0 || sgn(n.c[2]) != 0 || sgn(n.c[3]) != 0 || sgn(norm_) == 0)
      throw internal_error("norm in Z[zeta12] is not a nonzero integer");
  }
  IntElem divide(const IntElem& x) const {
    if (norm_ == 1) return x * cofactor_;
    IntElem r = x * cofactor_;
    for (auto& v : r.c) {
      if (!mpz_divisible_p(v.get_mpz_t(), norm_.get_mpz_t()))
        throw internal_error("inexact division in fraction-free elimination");
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), norm_.get_mpz_t());
    }
    return r;
  }

 private:
  IntElem cofactor_;
  mpz_class norm_;
};

// Row scaled by the lcm of all denominators in it.
inline std::vector<IntElem> integral_row(const std::vector<Scalar>& row) {
  mpz_class l = 1;
  for (const auto& x : row)
    for (const auto& r : x.coefficients())
      if (sgn(r) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  std::vector<IntElem> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    for (int k = 0; k < 4; ++k) {
      const Rational& r = row[j].coefficient(k);
      if (sgn(r) == 0) continue;
      out[j].c[static_cast<std::size_t>(k)] = r.get_num() * (l / r.get_den());
    }
  return out;
}

}  // namespace detail

// Basis of the null space of a dense matrix over Q(zeta12). Rows are scaled
// to Z[zeta12]; fraction-free elimination to echelon form (pivot of smallest
// size in each column, every division exact), then back substitution. The
// basis vectors are exact but not normalised.
inline std::vector<StateVector> null_space(const Matrix<Scalar>& input) {
  using detail::IntElem;
  const std::size_t rows = input.size();
  const std::size_t cols = rows == 0 ? 0 : input[0].size();
  std::vector<std::vector<IntElem>> m;
  m.reserve(rows);
  for (const auto& row : input) m.push_back(detail::integral_row(row));

  std::vector<std::size_t> pivot_cols;
  IntElem one;
  one.c[0] = 1;
  detail::ExactDivisor prev(one);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows, best_size = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const std::size_t sz = m[i][c].bit_size();
      if (best == rows || sz < best_size) best = i, best_size = sz;
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool lead_zero = m[i][c].is_zero();
      for (std::size_t j = c + 1; j < cols; ++j) {
        IntElem x = m[r][c] * m[i][j];
        if (!lead_zero && !m[r][j].is_zero()) x = x - m[i][c] * m[r][j];
        m[i][j] = prev.divide(x);
      }
      m[i][c] = IntElem();
    }
    prev = detail::ExactDivisor(m[r][c]);
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<StateVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    StateVector x(cols);
    x[f] = Scalar(1L);
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      Scalar acc;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (!x[j].is_zero() && !m[k][j].is_zero()) acc += m[k][j].to_scalar() * x[j];
      x[pc] = -acc / m[k][pc].to_scalar();
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::vector<StateVector> null_space(const SparseOperator& op) { return null_space(op.to_dense()); }

}  // namespace loopqkz
