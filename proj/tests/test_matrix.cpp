#include <doctest.h>

#include <random>

#include "bonded/burau.hpp"
#include "bonded/error.hpp"
#include "bonded/matrix.hpp"
#include "support.hpp"

using namespace bonded;

namespace {

const RingElement T = RingElement::variable(Var::t);
const RingElement Z = RingElement::variable(Var::z);
const RingElement ONE(1);

RingMatrix rows(std::vector<std::vector<RingElement>> r) { return RingMatrix::from_rows(r); }

RingMatrix A1() { return rows({{ONE - T, T}, {ONE, 0}}); }
RingMatrix B1() { return rows({{ONE - T * Z, T * Z}, {Z, ONE - Z}}); }

RingMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool with_denominator) {
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::mt19937_64 local(rng());
      RingElement e(test::random_polynomial(local, 3));
      if (with_denominator && test::uniform(rng, 0, 3) == 0) e *= invert_special(Special::d1);
      if (with_denominator && test::uniform(rng, 0, 3) == 0) e *= invert_special(Special::t);
      m(i, j) = e;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("mat_mul examples") {
  const RingMatrix m = A1();
  CHECK(mat_mul(RingMatrix::identity(2), m) == m);
  const RingMatrix a_inv = rows({{0, ONE}, {invert_special(Special::t), ONE - invert_special(Special::t)}});
  CHECK(mat_mul(A1(), a_inv).is_identity());
  const RingElement inv_d1 = invert_special(Special::d1);
  const RingMatrix b_inv = rows({{(ONE - Z) * inv_d1, -(T * Z) * inv_d1}, {-Z * inv_d1, (ONE - T * Z) * inv_d1}});
  CHECK(mat_mul(B1(), b_inv).is_identity());
  CHECK(mat_mul(b_inv, B1()).is_identity());
  CHECK_THROWS_AS(mat_mul(RingMatrix::identity(2), RingMatrix::identity(3)), DimensionError);
  CHECK_THROWS_AS(RingMatrix::from_rows({{1, 2}}), DimensionError);
}

TEST_CASE("det examples") {
  CHECK(det(RingMatrix::identity(3)) == ONE);
  CHECK(det(A1()) == -T);
  CHECK(det(B1()) == RingElement(special_polynomial(Special::d1)));
  CHECK(det(RingMatrix(0)) == ONE);
  CHECK(det_bareiss(A1()) == -T);
  CHECK(det_cofactor(B1()) == det_bareiss(B1()));
}

TEST_CASE("conjugate_by_C examples") {
  CHECK(conjugate_by_C(RingMatrix::identity(4)).is_identity());
  CHECK(conjugate_by_C(A1()) == rows({{-T, 0}, {ONE, ONE}}));
  CHECK(conjugate_by_C(B1()) == rows({{-T * Z - Z + ONE, 0}, {Z, ONE}}));
  CHECK(conjugate_by_C(B1()).to_string() == "[[-t*z - z + 1, 0], [z, 1]]");
}

TEST_CASE("block_decompose_reduced examples") {
  const ReprKind full{false, Flavor::rigid_monoid()};
  for (int n = 2; n <= 6; ++n) {
    const auto last = [&](Generator g) { return block_decompose_reduced(conjugate_by_C(gen_matrix(g, n, full))); };
    std::vector<RingElement> expect_sigma(static_cast<std::size_t>(n - 1), RingElement(0));
    std::vector<RingElement> expect_bond = expect_sigma;
    expect_sigma.back() = ONE;
    expect_bond.back() = Z;
    CHECK(last(Generator::s(n - 1)).bottom_row == expect_sigma);
    CHECK(last(Generator::b(n - 1)).bottom_row == expect_bond);
    for (int i = 1; i < n - 1; ++i) {
      const ReducedBlocks blocks = last(Generator::s(i));
      CHECK(blocks.upper_right_zero);
      CHECK(blocks.corner == ONE);
      for (const auto& e : blocks.bottom_row) CHECK(e.is_zero());
    }
  }
  CHECK_THROWS_AS(block_decompose_reduced(RingMatrix::identity(1)), DimensionError);
}

TEST_CASE("property: associativity and multiplicative determinant") {
  std::mt19937_64 rng(31337);
  for (int k = 0; k < 25; ++k) {
    const RingMatrix a = random_matrix(rng, 3, true);
    const RingMatrix b = random_matrix(rng, 3, true);
    const RingMatrix c = random_matrix(rng, 3, true);
    CHECK((a * b) * c == a * (b * c));
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det_bareiss(a) == det_cofactor(a));
  }
}

TEST_CASE("property: Bareiss and cofactor expansion agree above the cutoff") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {4u, 5u}) {
    for (int k = 0; k < 4; ++k) {
      const RingMatrix a = random_matrix(rng, n, k % 2 == 0);
      CHECK(det_bareiss(a) == det_cofactor(a));
    }
  }
  // Leading zero pivot forces a row swap.
  const RingMatrix p = rows({{0, ONE, T}, {ONE, 0, Z}, {T, Z, 0}});
  CHECK(det_bareiss(p) == det_cofactor(p));
}

TEST_CASE("property: C times its closed-form inverse is the identity") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK((c_matrix(n) * c_inverse(n)).is_identity());
    CHECK((c_inverse(n) * c_matrix(n)).is_identity());
  }
}

TEST_CASE("property: corner of every conjugated generator is 1") {
  for (const Flavor& f : test::all_flavors()) {
    const ReprKind full{false, f};
    for (int n = 2; n <= 6; ++n) {
      for (int i = 1; i < n; ++i) {
        std::vector<Generator> gens{Generator::s(i), Generator::s(i, -1), Generator::b(i)};
        if (f.allows_bond_inverses()) gens.push_back(Generator::b(i, -1));
        if (f.allows_kinks()) gens.push_back(Generator::k(i));
        for (const auto& g : gens) {
          CHECK(block_decompose_reduced(conjugate_by_C(gen_matrix(g, n, full))).corner == ONE);
        }
      }
    }
  }
}

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    const RingMatrix m = random_matrix(rng, 3, true);
    CHECK(parse_matrix(m.to_string()) == m);
  }
  CHECK(A1().to_string() == "[[-t + 1, t], [1, 0]]");
  CHECK_THROWS_AS(parse_matrix("[[1, 2], [3]]"), Error);
}
