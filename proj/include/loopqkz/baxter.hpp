#pragma once

// Baxterised bulk and boundary operators and the two-term tile weights used
// by the diagrammatic transfer matrix.

#include "loopqkz/exactfield.hpp"
#include "loopqkz/linkpat.hpp"

namespace loopqkz {

// Weights of the two pictures of a tile. For bulk tiles `identity` multiplies
// the picture with two through-lines and `cup` the cup-cap picture; for
// boundary tiles they are the straight and the turn-back picture.
struct FaceWeights {
  Scalar identity;
  Scalar cup;

  bool operator==(const FaceWeights&) const = default;
};

namespace detail {

inline Scalar checked_inverse(const Scalar& den, const char* what) {
  if (den.is_zero()) throw singular_parameter(what);
  return den.inverse();
}

}  // namespace detail

// a(z) = [q/z]/[qz], b(z) = -[z]/[qz]
inline FaceWeights bulk_weights(const Scalar& z) {
  const Scalar& q = q_root();
  if (z.is_zero()) throw singular_parameter("spectral parameter is zero");
  const Scalar inv = detail::checked_inverse(bracket(q * z), "[q z] vanishes");
  return {bracket(q / z) * inv, -bracket(z) * inv};
}

// Boundary weights with the K_L normalisation:
// straight k(x,zeta)/k(1/x,zeta), turn -[q][x^2]/k(1/x,zeta).
inline FaceWeights boundary_weights(const Scalar& x, const Scalar& zeta) {
  if (x.is_zero() || zeta.is_zero()) throw singular_parameter("boundary tile at zero argument");
  const Scalar inv = detail::checked_inverse(kfun(x.inverse(), zeta), "k(1/z, zeta) vanishes");
  return {kfun(x, zeta) * inv, -bracket(q_root()) * bracket(x * x) * inv};
}

// R(z, w): identity picture [qw/z]/[qz/w], cup-cap picture -[z/w]/[qz/w].
inline FaceWeights face_weights_R(const Scalar& z, const Scalar& w) { return bulk_weights(z / w); }

// K_0(w, zeta): straight k(qw,zeta)/k(1/(qw),zeta), turn -[q][q^2 w^2]/k(1/(qw),zeta).
inline FaceWeights face_weights_K0(const Scalar& w, const Scalar& zeta) {
  return boundary_weights(q_root() * w, zeta);
}

// K_L(w, zeta): straight k(w,zeta)/k(1/w,zeta), turn -[q][w^2]/k(1/w,zeta).
inline FaceWeights face_weights_KL(const Scalar& w, const Scalar& zeta) { return boundary_weights(w, zeta); }

// a Id + b e_g on the link-pattern space of the given length.
inline SparseOperator two_term_operator(const FaceWeights& f, int generator, int length) {
  const std::size_t dim = std::size_t{1} << length;
  return SparseOperator::identity(dim).scaled(f.identity) + generator_matrix(generator, length).scaled(f.cup);
}

// R_i(z) = ([q/z] - [z] e_i)/[qz], i = 1..L-1
inline SparseOperator rcheck(int i, const Scalar& z, int length) {
  if (i < 1 || i > length - 1) throw invalid_argument("bulk generator index out of range");
  return two_term_operator(bulk_weights(z), i, length);
}

// K_0(z, zeta) = (k(z,zeta) - [q][z^2] e_0)/k(1/z,zeta)
inline SparseOperator kcheck0(const Scalar& z, const Scalar& zeta, int length) {
  if (length < 1) throw invalid_argument("boundary operator needs L >= 1");
  return two_term_operator(boundary_weights(z, zeta), 0, length);
}

// K_L(z, zeta) = (k(z,zeta) - [q][z^2] e_L)/k(1/z,zeta)
inline SparseOperator kcheckL(const Scalar& z, const Scalar& zeta, int length) {
  if (length < 1) throw invalid_argument("boundary operator needs L >= 1");
  return two_term_operator(boundary_weights(z, zeta), length, length);
}

}  // namespace loopqkz
