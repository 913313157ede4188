#pragma once

// Symplectic characters
//   chi_lam(x_1..x_n) = det[x_i^(lam_j+n-j+1) - x_i^-(lam_j+n-j+1)]
//                       / det[x_i^(n-j+1) - x_i^-(n-j+1)]
// evaluated exactly, the four-character product Z of the sum rule, and the
// partitions lambda^(L), mu^(L).
//
// Arguments are passed already squared: S_n(z_1..z_n) = chi_{lambda^(n)}(z_1^2..z_n^2).

#include <string>
#include <vector>

#include "loopqkz/exactfield.hpp"
#include "loopqkz/linalg.hpp"
#include "loopqkz/transfer.hpp"

namespace loopqkz {

using Partition = std::vector<int>;

inline void validate_partition(const Partition& lam) {
  for (std::size_t j = 0; j < lam.size(); ++j) {
    if (lam[j] < 0) throw invalid_argument("partition with a negative part");
    if (j > 0 && lam[j] > lam[j - 1]) throw invalid_argument("partition parts must be weakly decreasing");
  }
}

// lambda_j = floor((L-j)/2), j = 1..L
inline Partition lambda_partition(int length) {
  if (length < 0) throw invalid_argument("lambda_partition needs L >= 0");
  Partition lam;
  for (int j = 1; j <= length; ++j) lam.push_back((length - j) / 2);
  return lam;
}

// mu_j = 2L+1-2j; checks mu = lambda^(L) + 2 lambda^(L+1) + lambda^(L+2).
inline Partition mu_partition(int length) {
  if (length < 1) throw invalid_argument("mu_partition needs L >= 1");
  Partition mu;
  for (int j = 1; j <= length; ++j) mu.push_back(2 * length + 1 - 2 * j);
  const Partition a = lambda_partition(length), b = lambda_partition(length + 1),
                  c = lambda_partition(length + 2);
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int sum = (j < a.size() ? a[j] : 0) + 2 * (j < b.size() ? b[j] : 0) + c[j];
    const int expect = j < mu.size() ? mu[j] : 0;
    if (sum != expect) throw internal_error("mu^(L) decomposition into lambda partitions failed");
  }
  return mu;
}

namespace detail {

inline Partition padded(const Partition& lam, std::size_t n) {
  validate_partition(lam);
  Partition p = lam;
  while (p.size() > n && p.back() == 0) p.pop_back();
  if (p.size() > n) throw invalid_argument("partition has more parts than arguments");
  p.resize(n, 0);
  return p;
}

// Exponents lam_j + n - j + 1, j = 1..n.
inline std::vector<long> shifted(const Partition& lam, std::size_t n) {
  const Partition p = padded(lam, n);
  std::vector<long> e(n);
  for (std::size_t j = 0; j < n; ++j) e[j] = p[j] + static_cast<long>(n - j);
  return e;
}

inline Matrix<Scalar> char_matrix(const std::vector<long>& exps, const std::vector<Scalar>& xs) {
  Matrix<Scalar> m(xs.size(), std::vector<Scalar>(exps.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw invalid_argument("character argument is zero");
    for (std::size_t j = 0; j < exps.size(); ++j) m[i][j] = xs[i].pow(exps[j]) - xs[i].pow(-exps[j]);
  }
  return m;
}

// Argument i is replaced by x_i t^(d_i); entries become Laurent polynomials.
inline Matrix<LaurentPoly> char_matrix_t(const std::vector<long>& exps, const std::vector<Scalar>& xs,
                                         const std::vector<long>& degs) {
  Matrix<LaurentPoly> m(xs.size(), std::vector<LaurentPoly>(exps.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) throw invalid_argument("character argument is zero");
    for (std::size_t j = 0; j < exps.size(); ++j)
      m[i][j] = LaurentPoly::monomial(xs[i].pow(exps[j]), degs[i] * exps[j]) -
                LaurentPoly::monomial(xs[i].pow(-exps[j]), -degs[i] * exps[j]);
  }
  return m;
}

inline Scalar perturbed_character(const Partition& lam, const std::vector<Scalar>& xs,
                                  const std::vector<long>& degs) {
  const std::size_t n = xs.size();
  const LaurentPoly den = bareiss_determinant(char_matrix_t(shifted(Partition{}, n), xs, degs));
  if (den.is_zero()) throw confluent_point("character denominator vanishes identically");
  const LaurentPoly num = bareiss_determinant(char_matrix_t(shifted(lam, n), xs, degs));
  return exact_quotient(num, den).evaluate(Scalar(1L));
}

}  // namespace detail

// Determinant ratio at pairwise distinct, non-reciprocal arguments.
inline Scalar symplectic_character(const Partition& lam, const std::vector<Scalar>& xs) {
  const std::size_t n = xs.size();
  const auto exps = detail::shifted(lam, n);
  if (n == 0) return Scalar(1L);
  const Scalar den = bareiss_determinant(detail::char_matrix(detail::shifted(Partition{}, n), xs));
  if (den.is_zero()) throw confluent_point("character denominator vanishes; use the confluent evaluator");
  return bareiss_determinant(detail::char_matrix(exps, xs)) / den;
}

// chi_lam(fixed..., 1, ..., 1) with m trailing ones: the ones become
// t, t^2, .., t^m and the ratio, a Laurent polynomial in t, is taken at t = 1.
inline Scalar character_confluent(const Partition& lam, const std::vector<Scalar>& fixed, int ones) {
  if (ones < 0) throw invalid_argument("negative count of unit arguments");
  if (ones == 0) return symplectic_character(lam, fixed);
  std::vector<Scalar> xs = fixed;
  std::vector<long> degs(fixed.size(), 0);
  for (int a = 1; a <= ones; ++a) {
    xs.emplace_back(1L);
    degs.push_back(a);
  }
  try {
    return detail::perturbed_character(lam, xs, degs);
  } catch (const confluent_point&) {
  }
  // fixed arguments collide too: perturb every argument
  for (std::size_t j = 0; j < xs.size(); ++j) degs[j] = static_cast<long>(j) + 1;
  return detail::perturbed_character(lam, xs, degs);
}

// Any arguments: direct route when possible, otherwise x_j -> x_j t^j.
inline Scalar character_any(const Partition& lam, const std::vector<Scalar>& xs) {
  try {
    return symplectic_character(lam, xs);
  } catch (const confluent_point&) {
  }
  std::vector<long> degs(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) degs[j] = static_cast<long>(j) + 1;
  return detail::perturbed_character(lam, xs, degs);
}

// S_n(args) = chi_{lambda^(n)}(args^2)
inline Scalar schar(const std::vector<Scalar>& args) {
  std::vector<Scalar> sq;
  for (const auto& a : args) sq.push_back(a * a);
  return character_any(lambda_partition(static_cast<int>(args.size())), sq);
}

// chi_{lambda^(L)}(z^2) at z_{j+1} = q z_j equals
// (-1)^L prod_{i != j,j+1} k(z_j, z_i) chi_{lambda^(L-2)}(remaining z^2).
inline bool check_char_recursion(int length, const std::vector<Scalar>& z, int j) {
  if (static_cast<int>(z.size()) != length) throw invalid_argument("argument count differs from L");
  if (length < 2 || j < 1 || j > length - 1) throw invalid_argument("recursion index out of range");
  const Scalar& zj = z[static_cast<std::size_t>(j - 1)];
  if (z[static_cast<std::size_t>(j)] != q_root() * zj) throw invalid_argument("recursion needs z_{j+1} = q z_j");
  std::vector<Scalar> rest;
  Scalar factor = (length % 2 == 0) ? Scalar(1L) : Scalar(-1L);
  for (int i = 1; i <= length; ++i) {
    if (i == j || i == j + 1) continue;
    rest.push_back(z[static_cast<std::size_t>(i - 1)]);
    factor *= kfun(zj, z[static_cast<std::size_t>(i - 1)]);
  }
  return schar(z) == factor * schar(rest);
}

// Z = S_{L+2}(zeta1, z, zeta2) S_{L+1}(zeta1, z) S_{L+1}(z, zeta2) S_L(z)
inline Scalar z_product(const SpectralPoint& pt) {
  std::vector<Scalar> left{pt.zeta1}, right, both{pt.zeta1};
  left.insert(left.end(), pt.z.begin(), pt.z.end());
  both.insert(both.end(), pt.z.begin(), pt.z.end());
  both.push_back(pt.zeta2);
  right = pt.z;
  right.push_back(pt.zeta2);
  return schar(both) * schar(left) * schar(right) * schar(pt.z);
}

}  // namespace loopqkz
