#pragma once

// Fraction-free (Bareiss) determinant over an integral domain.
//
// After step k every entry of the trailing block is a (k+1)x(k+1) minor of
// the input, so the division by the previous pivot is always exact. The
// caller supplies that exact division.

#include <cstddef>
#include <utility>
#include <vector>

namespace bonded::detail {

template <class T, class IsZero, class ExactDiv>
T bareiss_determinant(std::vector<std::vector<T>> a, const T& one, IsZero is_zero, ExactDiv exact_div) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
      if (swap_row == n) return T{};
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(value, prev);
      }
    }
    prev = a[k][k];
  }
  T result = std::move(a[n - 1][n - 1]);
  if (negate) result = -result;
  return result;
}

}  // namespace bonded::detail
