#include "bonded/matrix.hpp"

#include <algorithm>

#include "bonded/bareiss.hpp"
#include "bonded/error.hpp"

namespace bonded {

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement(1);
  return m;
}

RingMatrix RingMatrix::from_rows(const std::vector<std::vector<RingElement>>& rows) {
  RingMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionError("from_rows: matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void RingMatrix::require_same_dim(const RingMatrix& o) const {
  if (n_ != o.n_) {
    throw DimensionError("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  require_same_dim(o);
  RingMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  require_same_dim(o);
  RingMatrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= o.entries_[k];
  return out;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  require_same_dim(o);
  RingMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const RingElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const RingElement& b = o(k, j);
        if (b.is_zero()) continue;
        if (a.is_one()) {
          out(i, j) += b;
        } else if (b.is_one()) {
          out(i, j) += a;
        } else {
          out(i, j) += a * b;
        }
      }
    }
  }
  return out;
}

std::vector<RingElement> RingMatrix::operator*(const std::vector<RingElement>& v) const {
  if (v.size() != n_) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<RingElement> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

bool RingMatrix::is_identity() const { return *this == identity(n_); }

bool RingMatrix::has_denominators() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const RingElement& e) { return e.has_denominator(); });
}

RingMatrix RingMatrix::substitute_z_with_zk() const {
  RingMatrix out(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].substitute_z_with_zk();
  return out;
}

std::string RingMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i > 0) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) { return a * b; }

ScaledMatrix common_denominator(const RingMatrix& m) {
  ScaledMatrix s;
  for (const auto& e : m.entries()) {
    s.den_t = std::max(s.den_t, e.den_t());
    s.den_d1 = std::max(s.den_d1, e.den_d1());
    s.den_d2 = std::max(s.den_d2, e.den_d2());
  }
  const std::size_t n = m.dim();
  s.numerators.assign(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& e = m(i, j);
      Polynomial p = e.num().shift_t(static_cast<int>(s.den_t - e.den_t()));
      if (s.den_d1 > e.den_d1()) p = p * special_polynomial(Special::d1).pow(s.den_d1 - e.den_d1());
      if (s.den_d2 > e.den_d2()) p = p * special_polynomial(Special::d2).pow(s.den_d2 - e.den_d2());
      s.numerators[i][j] = std::move(p);
    }
  }
  return s;
}

RingElement det_bareiss(const RingMatrix& m) {
  const std::size_t n = m.dim();
  ScaledMatrix s = common_denominator(m);
  Polynomial num = detail::bareiss_determinant(
      std::move(s.numerators), Polynomial(1), [](const Polynomial& p) { return p.is_zero(); },
      [](const Polynomial& p, const Polynomial& q) {
        auto r = try_exact_div(p, q);
        if (!r) throw Error("bareiss: inexact division");
        return *r;
      });
  const auto scale = static_cast<std::uint32_t>(n);
  return RingElement(std::move(num), s.den_t * scale, s.den_d1 * scale, s.den_d2 * scale);
}

namespace {

RingElement cofactor_rec(const RingMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t remaining = cols.size();
  if (remaining == 0) return RingElement(1);
  if (remaining == 1) return m(row, cols[0]);
  RingElement sum;
  for (std::size_t k = 0; k < remaining; ++k) {
    const RingElement& a = m(row, cols[k]);
    if (a.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    RingElement minor = cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    RingElement term = a * minor;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

RingElement det_cofactor(const RingMatrix& m) {
  std::vector<std::size_t> cols(m.dim());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

RingElement det(const RingMatrix& m) { return m.dim() <= 4 ? det_cofactor(m) : det_bareiss(m); }

RingMatrix c_matrix(std::size_t n) {
  RingMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) c(i, j) = RingElement(1);
  }
  return c;
}

RingMatrix c_inverse(std::size_t n) {
  RingMatrix c = RingMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = RingElement(-1);
  return c;
}

RingMatrix conjugate_by_C(const RingMatrix& m) {
  const std::size_t n = m.dim();
  return c_inverse(n) * m * c_matrix(n);
}

ReducedBlocks block_decompose_reduced(const RingMatrix& m) {
  const std::size_t n = m.dim();
  if (n < 2) throw DimensionError("block_decompose_reduced needs dimension >= 2");
  ReducedBlocks blocks;
  blocks.upper_left = RingMatrix(n - 1);
  blocks.bottom_row.resize(n - 1);
  blocks.upper_right_zero = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) blocks.upper_left(i, j) = m(i, j);
    blocks.bottom_row[i] = m(n - 1, i);
    if (!m(i, n - 1).is_zero()) blocks.upper_right_zero = false;
  }
  blocks.corner = m(n - 1, n - 1);
  return blocks;
}

RingMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<RingElement>> rows;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  expect('[');
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return RingMatrix(0);
  }
  while (true) {
    expect('[');
    std::vector<RingElement> row;
    while (true) {
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
      if (pos >= text.size()) throw ParseError("unterminated row", pos);
      try {
        row.push_back(parse_ring_element(text.substr(start, pos - start)));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad matrix entry: ") + e.what(), start + e.position());
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      ++pos;
    }
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  try {
    return RingMatrix::from_rows(rows);
  } catch (const DimensionError&) {
    throw ParseError("matrix is not square", 0);
  }
}

}  // namespace bonded
