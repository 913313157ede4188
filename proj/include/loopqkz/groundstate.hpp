#pragma once

// Groundstate of the double-row transfer matrix: the eigenvector of T with
// eigenvalue 1, normalised against the closed forms of the extremal
// components, and the checks of its qKZ, recursion, sum-rule and degree
// structure.
//
// Normalisation: A_0 = 1, A_L = (-1)^L A_{L-1}, i.e. A_L = (-1)^(L(L+1)/2).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "loopqkz/baxter.hpp"
#include "loopqkz/chars.hpp"
#include "loopqkz/exactfield.hpp"
#include "loopqkz/linalg.hpp"
#include "loopqkz/linkpat.hpp"
#include "loopqkz/sparse.hpp"
#include "loopqkz/transfer.hpp"

namespace loopqkz {

inline long sign_A(int length) { return ((static_cast<long>(length) * (length + 1) / 2) % 2 == 0) ? 1 : -1; }

enum class Normalization {
  all_open,    // pinned to the closed form of psi_{((..(}
  all_close,   // pinned to the closed form of psi_{))..)}, all-open vanishes here
  continuity,  // both extremal forms vanish; fixed by interpolation from generic points
  raw,         // no closed form available, scale is arbitrary
};

inline const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::all_open: return "all-open";
    case Normalization::all_close: return "all-close";
    case Normalization::continuity: return "continuity";
    case Normalization::raw: return "raw";
  }
  return "?";
}

struct GroundstateVector {
  SpectralPoint point;
  StateVector components;
  Normalization normalization = Normalization::raw;

  const Scalar& operator[](const LinkPattern& p) const { return components.at(p.index()); }
};

inline constexpr int default_solve_cap = 8;

// Pi_{0<=i<j<=L} k(z_j, z_i) A_L S_{L+1}(z, zeta2) S_L(z), z_0 = zeta1
inline Scalar closed_form_all_open(const SpectralPoint& pt) {
  const int n = pt.length();
  std::vector<Scalar> zz{pt.zeta1};
  zz.insert(zz.end(), pt.z.begin(), pt.z.end());
  Scalar prod(sign_A(n));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) prod *= kfun(zz[j], zz[i]);
  if (prod.is_zero()) return prod;
  std::vector<Scalar> right = pt.z;
  right.push_back(pt.zeta2);
  return prod * schar(right) * schar(pt.z);
}

// Pi_{1<=i<j<=L+1} k(1/(s z_i), s z_j) A_L (s^2)^L
//   chi_{lambda^(L+1)}(s^2 zeta1^2, s^2 z^2) chi_{lambda^(L)}(s^2 z^2), z_{L+1} = zeta2
inline Scalar closed_form_all_close(const SpectralPoint& pt) {
  const int n = pt.length();
  const Scalar& s = pt.s;
  const Scalar s2 = s * s;
  std::vector<Scalar> zz = pt.z;
  zz.push_back(pt.zeta2);
  Scalar prod = Scalar(sign_A(n)) * s2.pow(n);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) prod *= kfun((s * zz[i]).inverse(), s * zz[j]);
  if (prod.is_zero()) return prod;
  std::vector<Scalar> a{s2 * pt.zeta1 * pt.zeta1}, b;
  for (const auto& x : pt.z) b.push_back(s2 * x * x);
  a.insert(a.end(), b.begin(), b.end());
  return prod * character_any(lambda_partition(n + 1), a) * character_any(lambda_partition(n), b);
}

namespace detail {

// Unique (up to scale) fixed vector of T at pt.
inline StateVector fixed_vector(const SpectralPoint& pt) {
  const SparseOperator m = transfer_matrix(pt) - SparseOperator::identity(pt.dimension());
  auto basis = null_space(m);
  if (basis.size() != 1)
    throw non_generic_point("null space of T - 1 has dimension " + std::to_string(basis.size()));
  return std::move(basis.front());
}

inline bool proportional(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) return false;
  std::size_t j = 0;
  while (j < a.size() && a[j].is_zero()) ++j;
  if (j == a.size()) return false;
  if (b[j].is_zero()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] * b[j] != b[i] * a[j]) return false;
  return true;
}

inline StateVector scaled(const StateVector& v, const Scalar& f) {
  StateVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * f;
  return out;
}

// A second auxiliary parameter for the w-independence check.
inline Scalar alternate_w(const SpectralPoint& pt) {
  static const long cand[][2] = {{7, 5}, {-11, 3}, {13, 17}, {-5, 19}, {23, 7}, {29, -13}};
  for (const auto& c : cand) {
    Scalar w2 = scalar_from_rational(c[0], c[1]);
    if (w2 == pt.w) continue;
    if (is_generic(pt.with_w(w2))) return w2;
  }
  throw non_generic_point("no generic second auxiliary parameter found");
}

}  // namespace detail

// Exact groundstate. The null space of T - 1 is computed at w; the vector
// found must also be fixed by T at a second value w'. The scale is fixed by the extremal closed
// forms when one of them is nonzero.
inline GroundstateVector solve(const SpectralPoint& pt, int max_length = default_solve_cap) {
  const int n = pt.length();
  if (n > max_length) throw invalid_argument("solve is capped at L = " + std::to_string(max_length));
  row_weights(pt);  // throws singular_parameter naming the tile
  GroundstateVector gs;
  gs.point = pt;
  if (n == 0) {
    gs.components = {Scalar(1L)};
    gs.normalization = Normalization::all_open;
    return gs;
  }
  StateVector v = detail::fixed_vector(pt);
  if (transfer_apply(v, pt.with_w(detail::alternate_w(pt))) != v)
    throw convention_error("fixed vector of T(w) is not fixed by T(w')");

  const Scalar open = closed_form_all_open(pt);
  const std::size_t last = pt.dimension() - 1;
  if (!open.is_zero()) {
    if (v[0].is_zero()) throw consistency_failure("all-open component vanishes but its closed form does not");
    gs.components = detail::scaled(v, open / v[0]);
    gs.normalization = Normalization::all_open;
    return gs;
  }
  const Scalar close = closed_form_all_close(pt);
  if (!close.is_zero()) {
    if (v[last].is_zero()) throw consistency_failure("all-close component vanishes but its closed form does not");
    if (!v[0].is_zero()) throw consistency_failure("all-open component is nonzero where its closed form vanishes");
    gs.components = detail::scaled(v, close / v[last]);
    gs.normalization = Normalization::all_close;
    return gs;
  }
  gs.components = std::move(v);
  gs.normalization = Normalization::raw;
  return gs;
}

inline Scalar sum_components(const GroundstateVector& gs) {
  Scalar s;
  for (const auto& x : gs.components) s += x;
  return s;
}

// ---------------------------------------------------------------------------
// Interpolation in one variable

struct Interpolant {
  long low = 0;                 // exponent (in z^2) of coefficients.front()
  std::vector<Scalar> coefficients;
  int variable = 1;

  // highest |exponent| with a nonzero coefficient, in z^2
  long degree() const {
    long d = -1;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      if (!coefficients[k].is_zero()) d = std::max(d, std::abs(low + static_cast<long>(k)));
    return d;
  }
  Scalar evaluate(const Scalar& zv) const {
    const Scalar x = zv * zv;
    Scalar r;
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      if (!coefficients[k].is_zero()) r += coefficients[k] * x.pow(low + static_cast<long>(k));
    return r;
  }
};

namespace detail {

// Monomial coefficients of the polynomial of degree < n through (x_k, y_k).
inline std::vector<Scalar> newton_coefficients(const std::vector<Scalar>& x, std::vector<Scalar> y) {
  const std::size_t n = x.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - j]);
      if (i == j) break;
    }
  std::vector<Scalar> c(n);
  for (std::size_t k = n; k-- > 0;) {
    // c <- c * (t - x_k) + y_k
    for (std::size_t m = n - 1; m > 0; --m) c[m] = c[m - 1] - c[m] * x[k];
    c[0] = y[k] - c[0] * x[k];
  }
  return c;
}

inline bool clashes(const Scalar& t, const std::vector<Scalar>& others) {
  const Scalar t2 = t * t;
  for (const auto& o : others) {
    const Scalar o2 = o * o;
    if (t2 == o2 || t2 * o2 == Scalar(1L)) return true;
  }
  return false;
}

// Sample values for the interpolation variable that avoid the other
// parameters, their inverses and each other.
inline std::vector<Scalar> sample_values(const SpectralPoint& pt, int var, std::size_t count,
                                         const std::vector<Scalar>& avoid) {
  std::vector<Scalar> others = avoid;
  for (int i = 1; i <= pt.length(); ++i)
    if (i != var) others.push_back(pt.zi(i));
  others.push_back(pt.zeta1);
  others.push_back(pt.zeta2);
  others.push_back(pt.w);
  others.push_back(Scalar(1L));
  std::vector<Scalar> out;
  for (long d = 2; out.size() < count; ++d)
    for (long p = d + 1; p < 2 * d && out.size() < count; ++p) {
      if (std::gcd(p, d) != 1) continue;
      const Scalar t = scalar_from_rational(p, d);
      if (clashes(t, others) || clashes(t, out)) continue;
      if (!is_generic(pt.with_z(var, t))) continue;
      out.push_back(t);
    }
  return out;
}

}  // namespace detail

// Fits every component of the normalised groundstate as a Laurent polynomial
// in z_var^2 with exponents in [-d, d], d = (samples - 2)/2, and checks every
// remaining sample. A mismatch means some component needs a larger range.
inline std::vector<Interpolant> interpolate_state(const SpectralPoint& pt, int var, int samples,
                                                  const std::vector<Scalar>& avoid = {}) {
  const int n = pt.length();
  if (var < 1 || var > n) throw invalid_argument("interpolation variable out of range");
  if (samples < 3) throw invalid_argument("interpolation needs at least 3 samples");
  const long d = (samples - 2) / 2;
  const std::size_t fit = static_cast<std::size_t>(2 * d + 1);
  const auto ts = detail::sample_values(pt, var, static_cast<std::size_t>(samples), avoid);

  std::vector<GroundstateVector> sols;
  for (const auto& t : ts) {
    GroundstateVector gs = solve(pt.with_z(var, t));
    if (gs.normalization != Normalization::all_open && gs.normalization != Normalization::all_close)
      throw non_generic_point("interpolation sample has no closed-form normalisation");
    sols.push_back(std::move(gs));
  }
  std::vector<Interpolant> out(pt.dimension());
  std::vector<Scalar> xs;
  for (std::size_t k = 0; k < fit; ++k) xs.push_back(ts[k] * ts[k]);
  for (std::size_t a = 0; a < pt.dimension(); ++a) {
    std::vector<Scalar> ys;
    for (std::size_t k = 0; k < fit; ++k) ys.push_back(sols[k].components[a] * xs[k].pow(d));
    Interpolant ip;
    ip.low = -d;
    ip.variable = var;
    ip.coefficients = detail::newton_coefficients(xs, ys);
    for (std::size_t h = fit; h < ts.size(); ++h)
      if (ip.evaluate(ts[h]) != sols[h].components[a])
        throw degree_bound_violation("component " + LinkPattern(n, a).to_string() +
                                     " is not a Laurent polynomial of degree <= " + std::to_string(d) +
                                     " in z_" + std::to_string(var) + "^2");
    out[a] = std::move(ip);
  }
  return out;
}

inline Interpolant interpolate_component(const LinkPattern& alpha, int var, const SpectralPoint& pt,
                                         int samples) {
  if (alpha.length() != pt.length()) throw invalid_argument("pattern length differs from L");
  return interpolate_state(pt, var, samples).at(alpha.index());
}

// Default sample count: degree 2L-1 on both sides plus one holdout.
inline int default_samples(int length) { return 4 * length; }

// Groundstate at a point where both extremal closed forms vanish: the
// normalised components are interpolated in z_var from generic values of that
// variable and evaluated at the requested point. The result is checked to be
// a fixed vector of T there, and the raw null space there must be
// one-dimensional.
inline GroundstateVector solve_by_continuity(const SpectralPoint& pt, int var) {
  const Scalar target = pt.zi(var);
  const auto ips = interpolate_state(pt, var, default_samples(pt.length()), {target});
  GroundstateVector gs;
  gs.point = pt;
  gs.normalization = Normalization::continuity;
  for (const auto& ip : ips) gs.components.push_back(ip.evaluate(target));
  const StateVector raw = detail::fixed_vector(pt);
  if (!detail::proportional(gs.components, raw))
    throw consistency_failure("interpolated groundstate is not the fixed vector of T");
  return gs;
}

// solve, falling back to continuity in the last variable when neither
// closed form pins the scale.
inline GroundstateVector solve_normalized(const SpectralPoint& pt, int var = 0) {
  GroundstateVector gs = solve(pt);
  if (gs.normalization != Normalization::raw) return gs;
  return solve_by_continuity(pt, var > 0 ? var : pt.length());
}

// ---------------------------------------------------------------------------
// Sum rule

inline bool check_sum_rule(const SpectralPoint& pt) {
  return sum_components(solve_normalized(pt)) == z_product(pt);
}

// Homogeneous form: Z at z_i = 1 equals
// S_{L+2}(zeta1, 1.., zeta2) S_{L+1}(zeta1, 1..) S_{L+1}(1.., zeta2) S_L(1..)
// with the confluent evaluator for the repeated unit arguments.
struct HomogeneousNorm {
  Scalar z2, z1_left, z1_right, z0;
  Scalar product() const { return z2 * z1_left * z1_right * z0; }
};

inline HomogeneousNorm homogeneous_norm(int length, const Scalar& zeta1, const Scalar& zeta2) {
  auto sq = [](const Scalar& x) { return x * x; };
  HomogeneousNorm h;
  h.z2 = character_confluent(lambda_partition(length + 2), {sq(zeta1), sq(zeta2)}, length);
  h.z1_left = character_confluent(lambda_partition(length + 1), {sq(zeta1)}, length);
  h.z1_right = character_confluent(lambda_partition(length + 1), {sq(zeta2)}, length);
  h.z0 = character_confluent(lambda_partition(length), {}, length);
  return h;
}

inline SpectralPoint homogeneous_point(int length, const Scalar& zeta1, const Scalar& zeta2,
                                       const Scalar& w = scalar_from_rational(5, 3)) {
  SpectralPoint pt;
  pt.z.assign(static_cast<std::size_t>(length), Scalar(1L));
  pt.zeta1 = zeta1;
  pt.zeta2 = zeta2;
  pt.w = w;
  return pt;
}

inline GroundstateVector solve_homogeneous(int length, const Scalar& zeta1, const Scalar& zeta2) {
  const SpectralPoint pt = homogeneous_point(length, zeta1, zeta2);
  try {
    return solve_normalized(pt);
  } catch (const non_generic_point&) {
    if (length == 0) throw;
    return solve_by_continuity(pt, 1);
  }
}

inline bool check_homogeneous_sum_rule(int length, const Scalar& zeta1, const Scalar& zeta2) {
  return sum_components(solve_homogeneous(length, zeta1, zeta2)) ==
         homogeneous_norm(length, zeta1, zeta2).product();
}

// ---------------------------------------------------------------------------
// qKZ

// R_i(z_i/z_{i+1}) Psi(z) = Psi(.., z_{i+1}, z_i, ..)
inline bool check_qkz_exchange(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  if (i < 1 || i > n - 1) throw invalid_argument("exchange index out of range");
  const GroundstateVector a = solve_normalized(pt);
  const GroundstateVector b = solve_normalized(pt.swapped(i));
  return rcheck(i, pt.zi(i) / pt.zi(i + 1), n).apply(a.components) == b.components;
}

// K_0(1/z_1, zeta1) Psi(z) = Psi(z_1 -> 1/z_1) and
// K_L(s z_L, s zeta2) Psi(z) = Psi(z_L -> 1/(s^2 z_L)).
inline bool check_qkz_boundary(const SpectralPoint& pt) {
  const int n = pt.length();
  if (n < 1) throw invalid_argument("boundary relations need L >= 1");
  const GroundstateVector a = solve_normalized(pt);
  const Scalar z1 = pt.zi(1), zl = pt.zi(n), s = pt.s;
  const GroundstateVector left = solve_normalized(pt.with_z(1, z1.inverse()));
  const GroundstateVector right = solve_normalized(pt.with_z(n, (s * s * zl).inverse()));
  const bool ok_left = kcheck0(z1.inverse(), pt.zeta1, n).apply(a.components) == left.components;
  const bool ok_right = kcheckL(s * zl, s * pt.zeta2, n).apply(a.components) == right.components;
  return ok_left && ok_right;
}

// ---------------------------------------------------------------------------
// Recursions

// p(z_i; others) = -(A_L/A_{L-2}) k(z_i,zeta1)^2 k(z_i,zeta2)^2 prod_j k(z_i,z_j)^4
inline Scalar bulk_factor(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  const Scalar& zi = pt.zi(i);
  Scalar p = Scalar(-sign_A(n) * sign_A(n - 2)) * kfun(zi, pt.zeta1).pow(2) * kfun(zi, pt.zeta2).pow(2);
  for (int j = 1; j <= n; ++j)
    if (j != i && j != i + 1) p *= kfun(zi, pt.zi(j)).pow(4);
  return p;
}

// r_0 = (-1)^(L+1) (A_L/A_{L-1}) k(zeta1,zeta2) prod_{i>=2} k(zeta1,z_i)^2
inline Scalar left_factor(const SpectralPoint& pt) {
  const int n = pt.length();
  Scalar r = Scalar(((n + 1) % 2 == 0 ? 1L : -1L) * sign_A(n) * sign_A(n - 1)) * kfun(pt.zeta1, pt.zeta2);
  for (int i = 2; i <= n; ++i) r *= kfun(pt.zeta1, pt.zi(i)).pow(2);
  return r;
}

// r_L = (-1)^(L+1) s^2 (A_L/A_{L-1}) k(1/(s zeta2), s zeta1) prod_{i<L} k(1/(s zeta2), s z_i)^2
inline Scalar right_factor(const SpectralPoint& pt) {
  const int n = pt.length();
  const Scalar& s = pt.s;
  const Scalar x = (s * pt.zeta2).inverse();
  Scalar r = Scalar(((n + 1) % 2 == 0 ? 1L : -1L) * sign_A(n) * sign_A(n - 1)) * s * s * kfun(x, s * pt.zeta1);
  for (int i = 1; i < n; ++i) r *= kfun(x, s * pt.zi(i)).pow(2);
  return r;
}

struct RecursionResult {
  bool holds = false;
  Scalar factor;           // ratio of Psi_L to the inserted smaller state
  Scalar expected;         // closed-form factor
  Normalization normalization = Normalization::raw;
};

namespace detail {

// Psi_L == f * lift(Psi_small); returns the extracted ratio as well.
template <typename Insert>
RecursionResult compare_lifted(const GroundstateVector& big, const GroundstateVector& small,
                               const Scalar& expected, Insert&& insert) {
  RecursionResult r;
  r.expected = expected;
  r.normalization = big.normalization;
  const StateVector lifted = lift_vector(small.components, small.point.length(), big.point.length(), insert);
  std::size_t j = 0;
  while (j < lifted.size() && lifted[j].is_zero()) ++j;
  if (j == lifted.size()) throw consistency_failure("smaller groundstate vanishes identically");
  r.factor = big.components[j] / lifted[j];
  r.holds = r.factor == expected && big.components == scaled(lifted, expected);
  return r;
}

}  // namespace detail

inline RecursionResult bulk_recursion(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  if (i < 1 || i > n - 1) throw invalid_argument("recursion index out of range");
  if (pt.zi(i + 1) != q_root() * pt.zi(i)) throw invalid_argument("bulk recursion needs z_{i+1} = q z_i");
  const GroundstateVector big = solve_by_continuity(pt, i + 1);
  const GroundstateVector small = solve_normalized(pt.without(i, i + 1));
  return detail::compare_lifted(big, small, bulk_factor(pt, i),
                                [i](const LinkPattern& p) { return insert_link(i, p); });
}

inline bool check_bulk_recursion(const SpectralPoint& pt, int i) { return bulk_recursion(pt, i).holds; }

enum class Side { left, right };

inline RecursionResult boundary_recursion(const SpectralPoint& pt, Side side) {
  const int n = pt.length();
  if (n < 1) throw invalid_argument("boundary recursion needs L >= 1");
  if (side == Side::left) {
    if (pt.zi(1) != q_root() * pt.zeta1) throw invalid_argument("left recursion needs z_1 = q zeta1");
    SpectralPoint small = pt.without(1, 1);
    small.zeta1 = q_root() * pt.zeta1;
    return detail::compare_lifted(solve_normalized(pt), solve_normalized(small), left_factor(pt),
                                  [](const LinkPattern& p) { return insert_left(p); });
  }
  if (pt.zi(n) != pt.zeta2 / q_root()) throw invalid_argument("right recursion needs z_L = zeta2/q");
  SpectralPoint small = pt.without(n, n);
  small.zeta2 = pt.zeta2 / q_root();
  return detail::compare_lifted(solve_normalized(pt), solve_normalized(small), right_factor(pt),
                                [](const LinkPattern& p) { return insert_right(p); });
}

inline bool check_boundary_recursion(const SpectralPoint& pt, Side side) {
  return boundary_recursion(pt, side).holds;
}

// ---------------------------------------------------------------------------
// Homogeneous Hamiltonian

inline bool check_hamiltonian(int length, const Scalar& zeta1, const Scalar& zeta2) {
  const GroundstateVector gs = solve_homogeneous(length, zeta1, zeta2);
  const StateVector hv = hamiltonian(length, c_from_zeta(zeta1), c_from_zeta(zeta2)).apply(gs.components);
  for (const auto& x : hv)
    if (!x.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Factor conditions

namespace detail {

inline bool small_link_left(const LinkPattern& a) { return partners(a)[1] == 0; }
inline bool small_link_right(const LinkPattern& a) {
  return partners(a)[static_cast<std::size_t>(a.length())] == a.length() + 1;
}
inline bool small_link(const LinkPattern& a, int i) { return partners(a)[static_cast<std::size_t>(i)] == i + 1; }

inline StateVector raw_state(const SpectralPoint& pt) { return pt.length() == 0 ? StateVector{Scalar(1L)} : fixed_vector(pt); }

}  // namespace detail

// Components lacking the small link at the left boundary vanish at the zeros
// z_1 = q zeta1, q/zeta1 of k(z_1, zeta1), and psi/k(z_1,zeta1) is invariant
// under z_1 -> 1/z_1.
inline bool check_left_factor(const SpectralPoint& pt) {
  const int n = pt.length();
  const StateVector at1 = detail::raw_state(pt.with_z(1, q_root() * pt.zeta1));
  const StateVector at2 = detail::raw_state(pt.with_z(1, q_root() / pt.zeta1));
  const GroundstateVector a = solve_normalized(pt), b = solve_normalized(pt.with_z(1, pt.zi(1).inverse()));
  const Scalar ka = kfun(pt.zi(1), pt.zeta1), kb = kfun(pt.zi(1).inverse(), pt.zeta1);
  for (std::size_t c = 0; c < pt.dimension(); ++c) {
    const LinkPattern alpha(n, c);
    if (detail::small_link_left(alpha)) continue;
    if (!at1[c].is_zero() || !at2[c].is_zero()) return false;
    if (a.components[c] * kb != b.components[c] * ka) return false;
  }
  return true;
}

// Components lacking the small link at the right boundary vanish at the zeros
// z_L = zeta2/q, 1/(s^2 q zeta2) of k(1/(s z_L), s zeta2); the remainder is
// invariant under z_L -> 1/(s^2 z_L).
inline bool check_right_factor(const SpectralPoint& pt) {
  const int n = pt.length();
  const Scalar& s = pt.s;
  const Scalar zl = pt.zi(n);
  const StateVector at1 = detail::raw_state(pt.with_z(n, pt.zeta2 / q_root()));
  const StateVector at2 = detail::raw_state(pt.with_z(n, (s * s * q_root() * pt.zeta2).inverse()));
  const Scalar zr = (s * s * zl).inverse();
  const GroundstateVector a = solve_normalized(pt), b = solve_normalized(pt.with_z(n, zr));
  const Scalar ka = kfun((s * zl).inverse(), s * pt.zeta2), kb = kfun((s * zr).inverse(), s * pt.zeta2);
  for (std::size_t c = 0; c < pt.dimension(); ++c) {
    const LinkPattern alpha(n, c);
    if (detail::small_link_right(alpha)) continue;
    if (!at1[c].is_zero() || !at2[c].is_zero()) return false;
    if (a.components[c] * kb != b.components[c] * ka) return false;
  }
  return true;
}

// Components lacking the small link (i, i+1) vanish at z_{i+1} = q z_i and
// psi/[q z_i/z_{i+1}] is symmetric in z_i, z_{i+1}.
inline bool check_bulk_factor(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  const StateVector at = detail::raw_state(pt.with_z(i + 1, q_root() * pt.zi(i)));
  const GroundstateVector a = solve_normalized(pt), b = solve_normalized(pt.swapped(i));
  const Scalar ka = bracket(q_root() * pt.zi(i) / pt.zi(i + 1)), kb = bracket(q_root() * pt.zi(i + 1) / pt.zi(i));
  for (std::size_t c = 0; c < pt.dimension(); ++c) {
    const LinkPattern alpha(n, c);
    if (detail::small_link(alpha, i)) continue;
    if (!at[c].is_zero()) return false;
    if (a.components[c] * kb != b.components[c] * ka) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// a_i and s_i on component functions

using ComponentEvaluator = std::function<Scalar(const SpectralPoint&)>;

inline ComponentEvaluator component_evaluator(const LinkPattern& alpha) {
  return [alpha](const SpectralPoint& pt) { return solve_normalized(pt).components.at(alpha.index()); };
}

namespace detail {

inline SpectralPoint pi_point(int i, const SpectralPoint& pt) {
  const int n = pt.length();
  if (i == 0) return pt.with_z(1, pt.zi(1).inverse());
  if (i == n) return pt.with_z(n, (pt.s * pt.s * pt.zi(n)).inverse());
  return pt.swapped(i);
}

inline Scalar a_multiplier(int i, const SpectralPoint& pt) {
  const int n = pt.length();
  const Scalar& q = q_root();
  if (i == 0) {
    const Scalar& z1 = pt.zi(1);
    return kfun(z1.inverse(), pt.zeta1) / (bracket(q) * bracket(z1 * z1));
  }
  if (i == n) {
    const Scalar& s = pt.s;
    const Scalar& zl = pt.zi(n);
    return -kfun(s * zl, s * pt.zeta2) / (bracket(q) * bracket(s * s * zl * zl));
  }
  const Scalar r = pt.zi(i) / pt.zi(i + 1);
  return bracket(r / q) / bracket(r);
}

}  // namespace detail

// a_i f (pt) = g(pi_i pt) f(pi_i pt) + g(pt) f(pt)
inline Scalar eval_a(int i, const ComponentEvaluator& f, const SpectralPoint& pt) {
  const int n = pt.length();
  if (i < 0 || i > n || n < 1) throw invalid_argument("a_i index out of range");
  const SpectralPoint moved = detail::pi_point(i, pt);
  try {
    return detail::a_multiplier(i, moved) * f(moved) + detail::a_multiplier(i, pt) * f(pt);
  } catch (const division_by_zero& e) {
    throw singular_parameter(std::string("a_") + std::to_string(i) + ": " + e.what());
  }
}

// s_i = q + 1/q - a_i = -1 - a_i
inline Scalar eval_s(int i, const ComponentEvaluator& f, const SpectralPoint& pt) {
  return -f(pt) - eval_a(i, f, pt);
}

inline ComponentEvaluator s_operator(int i, ComponentEvaluator f) {
  return [i, f = std::move(f)](const SpectralPoint& pt) { return eval_s(i, f, pt); };
}

// ---------------------------------------------------------------------------
// L = 3 reconstruction from the extremal components (b = 1)
//
// Patterns numbered 1 = (((, 2 = ((), 3 = ()(, 4 = ()), 5 = )((, 6 = )(), 7 = ))(, 8 = ))).
// From psi_1: psi_2 = s_3 psi_1, psi_3 = s_2 psi_2 - psi_1, psi_4 = s_3 psi_3.
// From psi_8: psi_4 = s_0 psi_8, psi_6 = s_1 psi_4 - psi_8, psi_2 = s_0 psi_6.
// psi_5 and psi_7 only enter through s_1 psi_3 = psi_1 + psi_2 + psi_5 + psi_7.

struct PartialReconstruction {
  std::map<std::string, Scalar> determined;  // pattern -> value
  Scalar sum_undetermined;                   // psi_5 + psi_7
  std::vector<std::string> undetermined;     // {")((", "))("}
};

inline PartialReconstruction reconstruct_partial_L3(const ComponentEvaluator& psi1, const ComponentEvaluator& psi8,
                                                    const SpectralPoint& pt) {
  if (pt.length() != 3) throw invalid_argument("the partial reconstruction is for L = 3");
  auto minus = [](ComponentEvaluator a, ComponentEvaluator b) -> ComponentEvaluator {
    return [a = std::move(a), b = std::move(b)](const SpectralPoint& p) { return a(p) - b(p); };
  };
  const ComponentEvaluator psi2 = s_operator(3, psi1);
  const ComponentEvaluator psi3 = minus(s_operator(2, psi2), psi1);
  const ComponentEvaluator psi4 = s_operator(3, psi3);
  const ComponentEvaluator psi4b = s_operator(0, psi8);
  const ComponentEvaluator psi6 = minus(s_operator(1, psi4b), psi8);
  const ComponentEvaluator psi2b = s_operator(0, psi6);

  PartialReconstruction r;
  const Scalar v2 = psi2(pt), v4 = psi4(pt);
  if (v4 != psi4b(pt)) throw consistency_failure("the two routes to psi_()) disagree");
  if (v2 != psi2b(pt)) throw consistency_failure("the two routes to psi_(() disagree");
  const Scalar v1 = psi1(pt), v3 = psi3(pt);
  r.determined = {{"(((", v1}, {"(()", v2}, {"()(", v3}, {"())", v4}, {")()", psi6(pt)}, {")))", psi8(pt)}};
  r.sum_undetermined = eval_s(1, psi3, pt) - v1 - v2;
  r.undetermined = {")((", "))("};
  return r;
}

}  // namespace loopqkz
