#pragma once

#include <random>
#include <vector>

#include "bonded/ring.hpp"
#include "bonded/words.hpp"

namespace bonded::test {

inline const char* kFig6 = "b3 s1 s2 s3^-1 b2 s3 s1^-1 s3 b1";
inline const char* kFig17 =
    "b2 s5 s4^-1 s3^-1 b7 s4^-1 s2^-1 s4^-1 s1^-1 s2^-1 s3^-1 s6 s5 s4 s3 s2 s1 s7 s6 s5 s4 s3 s2";

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Up to 6 terms, coefficients in [-9, 9], exponents up to 3.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_terms = 6) {
  std::vector<Polynomial::Term> terms;
  const int count = uniform(rng, 0, max_terms);
  for (int k = 0; k < count; ++k) {
    Monomial m(static_cast<std::uint32_t>(uniform(rng, 0, 3)), static_cast<std::uint32_t>(uniform(rng, 0, 3)),
               static_cast<std::uint32_t>(uniform(rng, 0, 2)));
    terms.push_back({m, mpz_class(uniform(rng, -9, 9))});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline RingElement random_element(std::mt19937_64& rng, bool with_denominator = true) {
  Polynomial p = random_polynomial(rng);
  if (!with_denominator) return RingElement(p);
  return RingElement(p, static_cast<std::uint32_t>(uniform(rng, 0, 2)), static_cast<std::uint32_t>(uniform(rng, 0, 2)),
                     static_cast<std::uint32_t>(uniform(rng, 0, 1)));
}

/// Letters legal in `flavor`, indices in 1..n-1 (n >= 2).
inline BraidWord random_word(std::mt19937_64& rng, int n, int length, Flavor flavor) {
  BraidWord w{n, flavor, {}};
  for (int k = 0; k < length; ++k) {
    const int kinds = flavor.allows_kinks() ? 3 : 2;
    const auto kind = static_cast<GenKind>(uniform(rng, 0, kinds - 1));
    int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    if (kind != GenKind::sigma && !flavor.allows_bond_inverses()) sign = 1;
    w.letters.push_back({kind, uniform(rng, 1, n - 1), sign});
  }
  return w;
}

inline const std::vector<Flavor>& all_flavors() {
  static const std::vector<Flavor> f{Flavor::monoid(), Flavor::group(), Flavor::rigid_monoid(),
                                     Flavor::rigid_group()};
  return f;
}

}  // namespace bonded::test
