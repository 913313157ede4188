#pragma once

// Link patterns on L sites with two open boundaries and the action of the
// two-boundary Temperley-Lieb generators at loop weight 1 and boundary
// parameter b = 1.
//
// A pattern is a word in '(' and ')'. Site i matched with j > i carries '('
// at i and ')' at j; an unmatched ')' is attached to the left boundary and an
// unmatched '(' to the right boundary. Every word is a valid pattern, so the
// space has dimension 2^L. The canonical index reads the word as an L-bit
// integer with '(' = 0, ')' = 1 and site 1 as the most significant bit.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopqkz/exactfield.hpp"
#include "loopqkz/sparse.hpp"

namespace loopqkz {

class LinkPattern {
 public:
  static constexpr int max_length = 30;

  LinkPattern() = default;
  LinkPattern(int length, std::uint64_t index) : length_(length), bits_(index) {
    if (length < 0 || length > max_length) throw invalid_argument("link pattern length out of range");
    if (length < 64 && (index >> length) != 0) throw invalid_argument("link pattern index out of range");
  }

  static LinkPattern parse(std::string_view word) {
    if (word.size() > static_cast<std::size_t>(max_length))
      throw invalid_argument("link pattern too long");
    std::uint64_t bits = 0;
    for (char c : word) {
      if (c != '(' && c != ')') throw invalid_argument("link pattern must consist of '(' and ')'");
      bits = (bits << 1) | (c == ')' ? 1U : 0U);
    }
    return LinkPattern(static_cast<int>(word.size()), bits);
  }

  int length() const { return length_; }
  std::uint64_t index() const { return bits_; }
  std::size_t dimension() const { return std::size_t{1} << length_; }

  // true when site (1-based) carries ')'
  bool closes(int site) const { return (bits_ >> (length_ - site)) & 1U; }

  std::string to_string() const {
    std::string s;
    for (int i = 1; i <= length_; ++i) s += closes(i) ? ')' : '(';
    return s;
  }

  auto operator<=>(const LinkPattern&) const = default;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

// Connectivity of a pattern. Sites are 1..L, the left boundary is 0 and the
// right boundary is L+1.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // i < j, ordered by i
  std::vector<int> left;                   // sites attached to the left boundary
  std::vector<int> right;                  // sites attached to the right boundary

  bool operator==(const Matching&) const = default;
};

namespace detail {

// partner[i] for i = 1..L: the site or boundary (0 or L+1) that i connects to.
inline std::vector<int> partners(const LinkPattern& p) {
  const int n = p.length();
  std::vector<int> partner(static_cast<std::size_t>(n) + 2, -1);
  std::vector<int> open;
  for (int i = 1; i <= n; ++i) {
    if (!p.closes(i)) {
      open.push_back(i);
    } else if (!open.empty()) {
      partner[i] = open.back();
      partner[open.back()] = i;
      open.pop_back();
    } else {
      partner[i] = 0;
    }
  }
  for (int i : open) partner[i] = n + 1;
  return partner;
}

inline LinkPattern from_partners(const std::vector<int>& partner, int n) {
  std::uint64_t bits = 0;
  for (int i = 1; i <= n; ++i) {
    const int j = partner[i];
    const bool close = (j == 0) || (j >= 1 && j <= n && j < i);
    bits = (bits << 1) | (close ? 1U : 0U);
  }
  return LinkPattern(n, bits);
}

// Joins the strands ending at sites a and b (both removed from the frontier):
// their former partners become connected. Arcs between the boundaries and
// closed loops carry weight 1 and are dropped.
inline void join_partners(std::vector<int>& partner, int a, int b, int n) {
  const int ka = partner[a], kb = partner[b];
  if (ka == b) return;
  const bool ka_site = ka >= 1 && ka <= n;
  const bool kb_site = kb >= 1 && kb <= n;
  if (ka_site && kb_site) {
    partner[ka] = kb;
    partner[kb] = ka;
  } else if (ka_site) {
    partner[ka] = kb;
  } else if (kb_site) {
    partner[kb] = ka;
  }
}

}  // namespace detail

inline Matching closure(const LinkPattern& p) {
  Matching m;
  const auto partner = detail::partners(p);
  for (int i = 1; i <= p.length(); ++i) {
    const int j = partner[i];
    if (j == 0)
      m.left.push_back(i);
    else if (j == p.length() + 1)
      m.right.push_back(i);
    else if (j > i)
      m.pairs.emplace_back(i, j);
  }
  return m;
}

// Action of e_i, i = 0..L, on a single pattern. At loop weight 1 and b = 1 the
// image is always one pattern with coefficient 1.
inline LinkPattern apply_e(int i, const LinkPattern& p) {
  const int n = p.length();
  if (i < 0 || i > n) throw invalid_argument("generator index out of range");
  if (n == 0) throw invalid_argument("no generators act on the empty pattern");
  auto partner = detail::partners(p);
  if (i == 0) {
    const int x = partner[1];
    if (x >= 1 && x <= n) partner[x] = 0;
    partner[1] = 0;
  } else if (i == n) {
    const int x = partner[n];
    if (x >= 1 && x <= n) partner[x] = n + 1;
    partner[n] = n + 1;
  } else {
    detail::join_partners(partner, i, i + 1, n);
    partner[i] = i + 1;
    partner[i + 1] = i;
  }
  return detail::from_partners(partner, n);
}

inline SparseOperator generator_matrix(int i, int length) {
  const std::size_t dim = std::size_t{1} << length;
  SparseOperator op(dim);
  for (std::size_t c = 0; c < dim; ++c)
    op.add_to(apply_e(i, LinkPattern(length, c)).index(), c, Scalar(1L));
  return op;
}

// The two idempotents of the double quotient: products of alternating
// generators chosen by the parity of L.
inline std::pair<SparseOperator, SparseOperator> idempotents(int length) {
  if (length < 1) throw invalid_argument("idempotents need L >= 1");
  const std::size_t dim = std::size_t{1} << length;
  SparseOperator i1 = SparseOperator::identity(dim);
  SparseOperator i2 = SparseOperator::identity(dim);
  auto times = [&](SparseOperator& acc, int g) { acc = acc * generator_matrix(g, length); };
  if (length % 2 == 0) {
    for (int g = 1; g <= length - 1; g += 2) times(i1, g);
    for (int g = 0; g <= length; g += 2) times(i2, g);
  } else {
    for (int g = 1; g <= length - 2; g += 2) times(i1, g);
    times(i1, length);
    for (int g = 0; g <= length - 1; g += 2) times(i2, g);
  }
  return {i1, i2};
}

// Boundary coupling of the Hamiltonian as a function of the boundary
// parameter: 3 / (1 + zeta^2 + zeta^-2).
inline Scalar c_from_zeta(const Scalar& zeta) {
  if (zeta.is_zero()) throw singular_parameter("boundary parameter is zero");
  const Scalar z2 = zeta * zeta;
  const Scalar den = Scalar(1L) + z2 + z2.inverse();
  if (den.is_zero()) throw singular_parameter("1 + zeta^2 + zeta^-2 vanishes");
  return Scalar(3L) / den;
}

inline SparseOperator hamiltonian(int length, const Scalar& c1, const Scalar& c2) {
  const std::size_t dim = std::size_t{1} << length;
  const SparseOperator id = SparseOperator::identity(dim);
  SparseOperator h(dim);
  if (length == 0) return h;
  h = (id - generator_matrix(0, length)).scaled(c1) + (id - generator_matrix(length, length)).scaled(c2);
  for (int j = 1; j <= length - 1; ++j) h = h + (id - generator_matrix(j, length));
  return h;
}

// phi_i: shifts sites >= i by two and places a small link on (i, i+1).
// Valid for i = 1..len(p)+1.
inline LinkPattern insert_link(int i, const LinkPattern& p) {
  const int n = p.length();
  if (i < 1 || i > n + 1) throw invalid_argument("insertion position out of range");
  const std::string w = p.to_string();
  return LinkPattern::parse(w.substr(0, static_cast<std::size_t>(i - 1)) + "()" +
                            w.substr(static_cast<std::size_t>(i - 1)));
}

// phi_0: prepends a site attached to the left boundary.
inline LinkPattern insert_left(const LinkPattern& p) { return LinkPattern::parse(")" + p.to_string()); }

// phi_L: appends a site attached to the right boundary.
inline LinkPattern insert_right(const LinkPattern& p) { return LinkPattern::parse(p.to_string() + "("); }

// Lifts a vector on patterns of the smaller size through an insertion map.
template <typename Insert>
StateVector lift_vector(const StateVector& v, int small_length, int big_length, Insert&& insert) {
  StateVector out(std::size_t{1} << big_length);
  for (std::size_t s = 0; s < v.size(); ++s)
    out[insert(LinkPattern(small_length, s)).index()] = v[s];
  return out;
}

}  // namespace loopqkz
