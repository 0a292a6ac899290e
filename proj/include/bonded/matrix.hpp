#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bonded/ring.hpp"

namespace bonded {

/// Dense square matrix over the localized ring. Dimension is fixed at
/// construction; 0x0 is allowed and behaves as the empty product.
class RingMatrix {
 public:
  explicit RingMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
  static RingMatrix identity(std::size_t n);
  /// Throws DimensionError unless rows form a square.
  static RingMatrix from_rows(const std::vector<std::vector<RingElement>>& rows);

  std::size_t dim() const { return n_; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  RingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<RingElement>& entries() const { return entries_; }

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  std::vector<RingElement> operator*(const std::vector<RingElement>& v) const;

  bool is_identity() const;
  /// True if any entry has a t, d1 or d2 denominator.
  bool has_denominators() const;
  RingMatrix substitute_z_with_zk() const;

  bool operator==(const RingMatrix&) const = default;
  /// Row-major bracketed list, e.g. `[[-t + 1, t], [1, 0]]`.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<RingElement> entries_;

  void require_same_dim(const RingMatrix& o) const;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);

/// Exact determinant: cofactor expansion for dim <= 4, Bareiss above.
RingElement det(const RingMatrix& m);
/// Bareiss elimination on the numerators after scaling to a common
/// t^a d1^b d2^c denominator.
RingElement det_bareiss(const RingMatrix& m);
/// Laplace expansion along the first row.
RingElement det_cofactor(const RingMatrix& m);

/// Upper-triangular all-ones matrix C_n.
RingMatrix c_matrix(std::size_t n);
/// C_n^{-1} in closed form: 1 on the diagonal, -1 on the superdiagonal.
RingMatrix c_inverse(std::size_t n);
/// C^{-1} m C.
RingMatrix conjugate_by_C(const RingMatrix& m);

struct ReducedBlocks {
  RingMatrix upper_left;
  std::vector<RingElement> bottom_row;
  RingElement corner;
  bool upper_right_zero = false;
};

/// Splits an n x n matrix (n >= 2) into the leading (n-1) x (n-1) block,
/// the first n-1 entries of the last row, and the bottom-right corner.
ReducedBlocks block_decompose_reduced(const RingMatrix& m);

/// m == numerators / (t^den_t * d1^den_d1 * d2^den_d2), entrywise.
struct ScaledMatrix {
  std::vector<std::vector<Polynomial>> numerators;
  std::uint32_t den_t = 0;
  std::uint32_t den_d1 = 0;
  std::uint32_t den_d2 = 0;
};
ScaledMatrix common_denominator(const RingMatrix& m);

/// Inverse of to_string(). Throws ParseError.
RingMatrix parse_matrix(std::string_view text);

}  // namespace bonded
