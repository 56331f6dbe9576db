#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tsing/rational.hpp"

namespace tsing {

// Dense row-major matrix; small sizes only.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) data_.insert(data_.end(), r.begin(), r.end());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

// Solves A x = b exactly by Gaussian elimination with row pivoting.
// Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Rational>& b);

// Leading principal minors det(A[0..k, 0..k]) for k = 1..n (fraction-free
// Bareiss elimination).
std::vector<std::int64_t> leading_minors(const IntMatrix& a);

// Negative definiteness via Sylvester's criterion: (-1)^k * minor_k > 0.
bool is_negative_definite(const IntMatrix& a);

}  // namespace tsing
