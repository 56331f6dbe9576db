#include "tsing/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_exact: dimension mismatch");

  Matrix<Rational> m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(a(i, j));
    m(i, n) = b[i];
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = col; j <= n; ++j) std::swap(m(col, j), m(pivot, j));
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j <= n; ++j) m(i, j) -= factor * m(col, j);
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = m(i, n);
    for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
    x[i] = acc / m(i, i);
  }
  return x;
}

std::vector<std::int64_t> leading_minors(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("leading_minors: matrix must be square");
  std::vector<std::int64_t> minors;
  minors.reserve(n);
  // Bareiss without pivoting: after step k, entry (k, k) is the (k+1)-th
  // leading minor. A zero pivot means a vanishing minor; the remaining minors
  // are then computed directly from the truncated matrices.
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::vector<__int128>> m(size, std::vector<__int128>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m[i][j] = a(i, j);
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
      if (m[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < size && m[p][k] == 0) ++p;
        if (p == size) {
          prev = 0;
          break;
        }
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < size; ++i) {
        for (std::size_t j = k + 1; j < size; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    minors.push_back(prev == 0 && size > 1 ? 0 : narrow_checked(sign * m[size - 1][size - 1]));
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& a) {
  const auto minors = leading_minors(a);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k % 2) == 0;  // minor of size k+1
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

}  // namespace tsing
