#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "loopqkz/exactfield.hpp"

namespace loopqkz {

// Coefficients of a vector in the link-pattern basis, indexed by the
// canonical pattern index.
using StateVector = std::vector<Scalar>;

inline StateVector basis_vector(std::size_t dim, std::size_t index) {
  StateVector v(dim);
  v.at(index) = Scalar(1L);
  return v;
}

// Exact linear map on the link-pattern basis, stored column by column as
// sorted (row, value) lists without explicit zeros.
class SparseOperator {
 public:
  using Entry = std::pair<std::uint32_t, Scalar>;
  using Column = std::vector<Entry>;

  SparseOperator() = default;
  explicit SparseOperator(std::size_t dim) : columns_(dim) {}

  static SparseOperator identity(std::size_t dim) {
    SparseOperator op(dim);
    for (std::size_t c = 0; c < dim; ++c)
      op.columns_[c].emplace_back(static_cast<std::uint32_t>(c), Scalar(1L));
    return op;
  }

  // Builds an operator from column images.
  static SparseOperator from_columns(const std::vector<StateVector>& images) {
    SparseOperator op(images.size());
    for (std::size_t c = 0; c < images.size(); ++c) op.set_column(c, images[c]);
    return op;
  }

  std::size_t dim() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }

  void set_column(std::size_t c, const StateVector& image) {
    Column& col = columns_.at(c);
    col.clear();
    for (std::size_t r = 0; r < image.size(); ++r)
      if (!image[r].is_zero()) col.emplace_back(static_cast<std::uint32_t>(r), image[r]);
  }

  void add_to(std::size_t row, std::size_t c, const Scalar& value) {
    if (value.is_zero()) return;
    Column& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != col.end() && it->first == row) {
      it->second += value;
      if (it->second.is_zero()) col.erase(it);
    } else {
      col.emplace(it, static_cast<std::uint32_t>(row), value);
    }
  }

  Scalar entry(std::size_t row, std::size_t c) const {
    for (const auto& [r, v] : column(c))
      if (r == row) return v;
    return Scalar();
  }

  StateVector apply(const StateVector& v) const {
    if (v.size() != dim()) throw invalid_argument("operator/vector dimension mismatch");
    StateVector out(dim());
    for (std::size_t c = 0; c < dim(); ++c) {
      if (v[c].is_zero()) continue;
      for (const auto& [r, x] : columns_[c]) out[r] += x * v[c];
    }
    return out;
  }

  SparseOperator scaled(const Scalar& f) const {
    SparseOperator out(dim());
    if (f.is_zero()) return out;
    for (std::size_t c = 0; c < dim(); ++c)
      for (const auto& [r, x] : columns_[c]) out.columns_[c].emplace_back(r, x * f);
    return out;
  }

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    check_dims(a, b);
    SparseOperator out = a;
    for (std::size_t c = 0; c < b.dim(); ++c)
      for (const auto& [r, x] : b.columns_[c]) out.add_to(r, c, x);
    return out;
  }

  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return a + b.scaled(Scalar(-1L));
  }

  // Composition: (a * b) v = a (b v).
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    check_dims(a, b);
    SparseOperator out(a.dim());
    for (std::size_t c = 0; c < b.dim(); ++c) {
      std::map<std::uint32_t, Scalar> acc;
      for (const auto& [k, y] : b.columns_[c])
        for (const auto& [r, x] : a.columns_[k]) acc[r] += x * y;
      for (auto& [r, x] : acc)
        if (!x.is_zero()) out.columns_[c].emplace_back(r, std::move(x));
    }
    return out;
  }

  friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
    return a.columns_ == b.columns_;
  }
  friend bool operator!=(const SparseOperator& a, const SparseOperator& b) { return !(a == b); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : columns_) n += col.size();
    return n;
  }

  std::vector<std::vector<Scalar>> to_dense() const {
    std::vector<std::vector<Scalar>> m(dim(), std::vector<Scalar>(dim()));
    for (std::size_t c = 0; c < dim(); ++c)
      for (const auto& [r, x] : columns_[c]) m[r][c] = x;
    return m;
  }

  // Sum of the entries of each column, i.e. the action of the all-ones
  // covector.
  StateVector column_sums() const {
    StateVector sums(dim());
    for (std::size_t c = 0; c < dim(); ++c)
      for (const auto& [r, x] : columns_[c]) sums[c] += x;
    return sums;
  }

 private:
  static void check_dims(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim()) throw invalid_argument("operator dimension mismatch");
  }

  std::vector<Column> columns_;
};

}  // namespace loopqkz
