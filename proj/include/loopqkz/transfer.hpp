#pragma once

// Double-row transfer matrix of the dense O(1) loop model on a strip with two
// open boundaries.
//
// Geometry: one auxiliary line enters at the left boundary, crosses the bottom
// row of L bulk faces, reflects on the right boundary tile, crosses the top
// row from right to left and closes on the left boundary tile. Each face has
// two loop configurations; with q = exp(2 pi i/3) and b = 1 every closed loop
// and every boundary-to-boundary arc has weight 1.
//
// Tile convention (fixed by the commuting-family, interlacing and recursion
// identities; see the README):
//   bottom face at site i   R(q z_i, w)
//   top face at site i      R(z_i, 1/w)
//   right boundary tile     K_L(w, zeta2)
//   left boundary tile      K_0(1/w, zeta1)
// Within a face, the identity-picture weight goes to the configuration joining
// the lower edge to the left edge (and upper edge to right edge).
//
// Two independent contraction routes are provided: the threaded route runs
// the auxiliary line through an extended link pattern with L+2 slots and
// merges equal frontiers after every tile; the naive route enumerates every
// one of the 2^(2L+2) tile configurations and traces the resulting planar
// graph.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "loopqkz/baxter.hpp"
#include "loopqkz/exactfield.hpp"
#include "loopqkz/linkpat.hpp"
#include "loopqkz/sparse.hpp"

namespace loopqkz {

struct SpectralPoint {
  std::vector<Scalar> z;  // z_1..z_L stored at z[0..L-1]
  Scalar zeta1{1L};
  Scalar zeta2{1L};
  Scalar w{1L};
  Scalar s{1L};  // fourth root of unity entering the qKZ boundary relation

  int length() const { return static_cast<int>(z.size()); }
  std::size_t dimension() const { return std::size_t{1} << z.size(); }

  // 1-based accessors
  const Scalar& zi(int i) const { return z.at(static_cast<std::size_t>(i - 1)); }

  SpectralPoint with_z(int i, Scalar value) const {
    SpectralPoint p = *this;
    p.z.at(static_cast<std::size_t>(i - 1)) = std::move(value);
    return p;
  }
  SpectralPoint with_w(Scalar value) const {
    SpectralPoint p = *this;
    p.w = std::move(value);
    return p;
  }
  SpectralPoint swapped(int i) const {
    SpectralPoint p = *this;
    std::swap(p.z.at(static_cast<std::size_t>(i - 1)), p.z.at(static_cast<std::size_t>(i)));
    return p;
  }
  // Drops z_first..z_last (1-based, inclusive).
  SpectralPoint without(int first, int last) const {
    SpectralPoint p = *this;
    p.z.erase(p.z.begin() + (first - 1), p.z.begin() + last);
    return p;
  }

  bool operator==(const SpectralPoint&) const = default;
};

// Tile weights of one double row.
struct RowWeights {
  std::vector<FaceWeights> bottom;
  std::vector<FaceWeights> top;
  FaceWeights right;
  FaceWeights left;
};

inline RowWeights row_weights(const SpectralPoint& pt) {
  if (pt.w.is_zero()) throw singular_parameter("w is zero");
  if (pt.zeta1.is_zero() || pt.zeta2.is_zero()) throw singular_parameter("boundary parameter is zero");
  const Scalar& q = q_root();
  const Scalar w_inv = pt.w.inverse();
  RowWeights rw;
  for (int i = 1; i <= pt.length(); ++i) {
    if (pt.zi(i).is_zero()) throw singular_parameter("z_" + std::to_string(i) + " is zero");
    try {
      rw.bottom.push_back(face_weights_R(q * pt.zi(i), pt.w));
      rw.top.push_back(face_weights_R(pt.zi(i), w_inv));
    } catch (const singular_parameter& e) {
      throw singular_parameter("bulk tile at site " + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    rw.right = face_weights_KL(pt.w, pt.zeta2);
  } catch (const singular_parameter& e) {
    throw singular_parameter(std::string("right boundary tile: ") + e.what());
  }
  try {
    rw.left = face_weights_K0(w_inv, pt.zeta1);
  } catch (const singular_parameter& e) {
    throw singular_parameter(std::string("left boundary tile: ") + e.what());
  }
  return rw;
}

// No tile weight of the double row has a vanishing denominator.
inline bool is_generic(const SpectralPoint& pt) {
  try {
    row_weights(pt);
    return true;
  } catch (const singular_parameter&) {
    return false;
  }
}

namespace detail {

// Frontier of the threaded contraction, keyed by extended pattern index. The
// slots are, from the left: start of the auxiliary line, the vertical edges
// produced so far, the current end of the auxiliary line, untouched input.
using Frontier = std::map<std::uint64_t, Scalar>;

inline void accumulate(Frontier& f, std::uint64_t key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = f.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) f.erase(it);
  }
}

// Applies weight_id * Id + weight_e * e_g to every frontier pattern.
inline Frontier two_term_step(const Frontier& in, int length, int generator, const FaceWeights& fw) {
  Frontier out;
  for (const auto& [key, amp] : in) {
    accumulate(out, key, amp * fw.identity);
    accumulate(out, apply_e(generator, LinkPattern(length, key)).index(), amp * fw.cup);
  }
  return out;
}

// Same with the roles swapped: on the bottom row the identity picture is the
// one that joins the auxiliary end to the incoming site.
inline Frontier swapped_step(const Frontier& in, int length, int generator, const FaceWeights& fw) {
  return two_term_step(in, length, generator, FaceWeights{fw.cup, fw.identity});
}

}  // namespace detail

// Threads the auxiliary line through the frontier of every basis state of v
// and returns T v. Exact and linear; equal frontiers are merged after every
// tile so the work per tile is bounded by 2^(L+2) patterns.
inline StateVector transfer_apply(const StateVector& v, const SpectralPoint& pt) {
  const int n = pt.length();
  if (v.size() != pt.dimension()) throw invalid_argument("state vector has wrong dimension");
  const RowWeights rw = row_weights(pt);
  const int ext = n + 2;

  // slot 1: start of the auxiliary line, slot 2: its current end (joined to
  // slot 1 by a zero-length segment), slots 3..L+2: the input pattern.
  detail::Frontier frontier;
  const std::uint64_t prefix = std::uint64_t{1} << n;  // "()" in front of the input word
  for (std::size_t a = 0; a < v.size(); ++a)
    if (!v[a].is_zero()) detail::accumulate(frontier, prefix | a, v[a]);

  // Bottom row: the current end sits at slot i+1, input site i at slot i+2.
  // Joining them (e_{i+1}) is the identity picture of R.
  for (int i = 1; i <= n; ++i)
    frontier = detail::swapped_step(frontier, ext, i + 1, rw.bottom[static_cast<std::size_t>(i - 1)]);

  // Right boundary: reflection is the identity, attaching both ends to the
  // boundary is e on the last slot.
  frontier = detail::two_term_step(frontier, ext, ext, rw.right);

  // Top row from right to left: the current end sits at slot i+2 next to the
  // middle edge of site i at slot i+1; the cup-cap picture joins them.
  for (int i = n; i >= 1; --i)
    frontier = detail::two_term_step(frontier, ext, i + 1, rw.top[static_cast<std::size_t>(i - 1)]);

  // Left boundary: straight joins both ends of the auxiliary line (e_1 then
  // drop the resulting small link); the turn attaches both ends to the left
  // boundary (e_0 and drop, twice).
  StateVector out(v.size());
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (const auto& [key, amp] : frontier) {
    const LinkPattern p(ext, key);
    const LinkPattern joined = apply_e(1, p);
    out[joined.index() & mask] += amp * rw.left.identity;
    const LinkPattern once = apply_e(0, p);
    const LinkPattern shorter(ext - 1, once.index() & ((std::uint64_t{1} << (ext - 1)) - 1));
    const LinkPattern twice = apply_e(0, shorter);
    out[twice.index() & mask] += amp * rw.left.cup;
  }
  return out;
}

// Exhaustive expansion over all tile configurations; exponential, used as the
// oracle for transfer_apply.
inline StateVector transfer_apply_naive(const StateVector& v, const SpectralPoint& pt, int max_length = 4) {
  const int n = pt.length();
  if (n > max_length)
    throw invalid_argument("naive transfer expansion refused for L = " + std::to_string(n) +
                           " (cap " + std::to_string(max_length) + ")");
  if (v.size() != pt.dimension()) throw invalid_argument("state vector has wrong dimension");
  const RowWeights rw = row_weights(pt);

  // Node numbering: input edges B, middle edges M, output edges U, bottom
  // auxiliary edges h_0..h_L, top auxiliary edges g_0..g_L, boundaries.
  const int B = 0, M = n, U = 2 * n, H = 3 * n, G = 4 * n + 1, LB = 5 * n + 2, RB = 5 * n + 3;
  const int nodes = 5 * n + 4;
  const int tiles = 2 * n + 2;

  StateVector out(v.size());
  std::vector<std::array<int, 2>> adj(static_cast<std::size_t>(nodes));
  std::vector<int> deg(static_cast<std::size_t>(nodes));
  auto link = [&](int a, int b) {
    if (a != LB && a != RB) adj[a][deg[a]++] = b;
    if (b != LB && b != RB) adj[b][deg[b]++] = a;
  };

  for (std::size_t alpha = 0; alpha < v.size(); ++alpha) {
    if (v[alpha].is_zero()) continue;
    const auto partner = detail::partners(LinkPattern(n, alpha));
    for (std::uint64_t config = 0; config < (std::uint64_t{1} << tiles); ++config) {
      std::fill(deg.begin(), deg.end(), 0);
      auto bit = [&](int t) { return (config >> t) & 1U; };
      for (int i = 1; i <= n; ++i) {
        const int p = partner[i];
        if (p == 0)
          link(B + i - 1, LB);
        else if (p == n + 1)
          link(B + i - 1, RB);
        else if (p > i)
          link(B + i - 1, B + p - 1);
      }
      Scalar weight(1L);
      for (int i = 0; i < n; ++i) {
        // configuration 0: lower edge to left edge, upper edge to right edge
        const FaceWeights& fb = rw.bottom[static_cast<std::size_t>(i)];
        if (bit(i) == 0) {
          link(B + i, H + i);
          link(M + i, H + i + 1);
          weight *= fb.identity;
        } else {
          link(B + i, H + i + 1);
          link(M + i, H + i);
          weight *= fb.cup;
        }
        const FaceWeights& ft = rw.top[static_cast<std::size_t>(i)];
        if (bit(n + 1 + i) == 0) {
          link(M + i, G + i);
          link(U + i, G + i + 1);
          weight *= ft.identity;
        } else {
          link(M + i, G + i + 1);
          link(U + i, G + i);
          weight *= ft.cup;
        }
      }
      if (bit(n) == 0) {
        link(H + n, G + n);
        weight *= rw.right.identity;
      } else {
        link(H + n, RB);
        link(G + n, RB);
        weight *= rw.right.cup;
      }
      if (bit(2 * n + 1) == 0) {
        link(H, G);
        weight *= rw.left.identity;
      } else {
        link(H, LB);
        link(G, LB);
        weight *= rw.left.cup;
      }
      if (weight.is_zero()) continue;

      std::vector<int> out_partner(static_cast<std::size_t>(n) + 2, -1);
      for (int i = 0; i < n; ++i) {
        int prev = U + i, cur = adj[U + i][0];
        while (true) {
          if (cur == LB) {
            out_partner[i + 1] = 0;
            break;
          }
          if (cur == RB) {
            out_partner[i + 1] = n + 1;
            break;
          }
          if (cur >= U && cur < U + n) {
            out_partner[i + 1] = cur - U + 1;
            break;
          }
          const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
        }
      }
      out[detail::from_partners(out_partner, n).index()] += weight * v[alpha];
    }
  }
  return out;
}

inline constexpr int default_matrix_cap = 12;

// Column-by-column assembly of T.
inline SparseOperator transfer_matrix(const SpectralPoint& pt, int max_length = default_matrix_cap) {
  if (pt.length() > max_length)
    throw invalid_argument("transfer matrix assembly capped at L = " + std::to_string(max_length));
  const std::size_t dim = pt.dimension();
  SparseOperator t(dim);
  for (std::size_t c = 0; c < dim; ++c) t.set_column(c, transfer_apply(basis_vector(dim, c), pt));
  return t;
}

inline SparseOperator transfer_matrix_naive(const SpectralPoint& pt, int max_length = 4) {
  const std::size_t dim = pt.dimension();
  SparseOperator t(dim);
  for (std::size_t c = 0; c < dim; ++c) t.set_column(c, transfer_apply_naive(basis_vector(dim, c), pt, max_length));
  return t;
}

// ---------------------------------------------------------------------------
// Identities of the transfer matrix

// T(v) T(w) = T(w) T(v); the two points differ only in w.
inline bool check_commuting(const SpectralPoint& pt, const Scalar& other_w) {
  const SparseOperator a = transfer_matrix(pt);
  const SparseOperator b = transfer_matrix(pt.with_w(other_w));
  return a * b == b * a;
}

inline bool check_column_sums(const SpectralPoint& pt) {
  for (const auto& x : transfer_matrix(pt).column_sums())
    if (x != Scalar(1L)) return false;
  return true;
}

// Interlacing with R_i (1 <= i < L), K_0 (i = 0) and K_L (i = L).
inline bool check_interlace(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  if (n < 1 || i < 0 || i > n) throw invalid_argument("interlacing index out of range");
  SparseOperator op;
  SpectralPoint moved = pt;
  if (i == 0) {
    op = kcheck0(pt.zi(1).inverse(), pt.zeta1, n);
    moved = pt.with_z(1, pt.zi(1).inverse());
  } else if (i == n) {
    op = kcheckL(pt.zi(n), pt.zeta2, n);
    moved = pt.with_z(n, pt.zi(n).inverse());
  } else {
    op = rcheck(i, pt.zi(i) / pt.zi(i + 1), n);
    moved = pt.swapped(i);
  }
  return op * transfer_matrix(pt) == transfer_matrix(moved) * op;
}

// Proportionality factor of the bulk recursion for generic q; identically 1
// at q = exp(2 pi i / 3).
inline Scalar bulk_recursion_factor(const Scalar& zi, const Scalar& w) {
  const Scalar& q = q_root();
  const Scalar q2 = q * q;
  return bracket(q / (zi * w)) * bracket(q2 * zi / w) / (bracket(q2 * zi * w) * bracket(q * w / zi));
}

namespace detail {

// Compares big(insert(x)) with insert(small(x)) on every basis vector x of
// the smaller space.
template <typename Insert>
bool intertwines(const SpectralPoint& big, const SpectralPoint& small, Insert&& insert) {
  const int nb = big.length(), ns = small.length();
  for (std::size_t c = 0; c < small.dimension(); ++c) {
    const StateVector e = basis_vector(small.dimension(), c);
    const StateVector lhs = transfer_apply(lift_vector(e, ns, nb, insert), big);
    const StateVector rhs = lift_vector(transfer_apply(e, small), ns, nb, insert);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace detail

// T_L(z_{i+1} = q z_i) phi_i = phi_i T_{L-2}(z without z_i, z_{i+1}).
inline bool check_T_recursion(const SpectralPoint& pt, int i) {
  const int n = pt.length();
  if (i < 1 || i > n - 1) throw invalid_argument("recursion index out of range");
  if (pt.zi(i + 1) != q_root() * pt.zi(i)) throw invalid_argument("recursion needs z_{i+1} = q z_i");
  return detail::intertwines(pt, pt.without(i, i + 1), [i](const LinkPattern& p) { return insert_link(i, p); });
}

// T_L(z_1 = q zeta1) phi_0 = phi_0 T_{L-1}(z_2..z_L; q zeta1, zeta2).
inline bool check_T_boundary_recursion_left(const SpectralPoint& pt) {
  if (pt.length() < 1) throw invalid_argument("boundary recursion needs L >= 1");
  if (pt.zi(1) != q_root() * pt.zeta1) throw invalid_argument("left recursion needs z_1 = q zeta1");
  SpectralPoint small = pt.without(1, 1);
  small.zeta1 = q_root() * pt.zeta1;
  return detail::intertwines(pt, small, [](const LinkPattern& p) { return insert_left(p); });
}

// T_L(z_L = zeta2/q) phi_L = phi_L T_{L-1}(z_1..z_{L-1}; zeta1, zeta2/q).
inline bool check_T_boundary_recursion_right(const SpectralPoint& pt) {
  const int n = pt.length();
  if (n < 1) throw invalid_argument("boundary recursion needs L >= 1");
  if (pt.zi(n) != pt.zeta2 / q_root()) throw invalid_argument("right recursion needs z_L = zeta2/q");
  SpectralPoint small = pt.without(n, n);
  small.zeta2 = pt.zeta2 / q_root();
  return detail::intertwines(pt, small, [](const LinkPattern& p) { return insert_right(p); });
}

}  // namespace loopqkz
