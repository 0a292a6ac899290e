#pragma once

// Polynomial quantities extracted from the representations, and a harness
// that compares them (with the closure fingerprint) along Markov walks.

#include <cstdint>
#include <string>
#include <vector>

#include "bonded/burau.hpp"
#include "bonded/markov.hpp"
#include "bonded/ring.hpp"

namespace bonded {

/// coefficients[k] is the coefficient of x^k.
struct CharPoly {
  std::vector<RingElement> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  /// Highest power first, e.g. `x^2 + (-2)*x + 1`.
  std::string to_string() const;
  /// FNV-1a 64 of to_string().
  std::uint64_t hash() const;

  bool operator==(const CharPoly&) const = default;
};

/// det(x I - represent(w, kind)), by Bareiss elimination over Z[t, z, zk][x]
/// after scaling the matrix to a common denominator.
CharPoly char_poly(const BraidWord& w, const ReprKind& kind);

struct AlexanderCandidate {
  /// Unit-normalized quotient when `normalized`, otherwise the raw
  /// determinant.
  RingElement value;
  /// det(reduced(w) - I) was divisible by 1 + t + ... + t^(n-1).
  bool normalized = false;
  /// det(reduced(w) - I).
  RingElement raw;

  std::string to_string() const;
};

/// Requires n >= 2 (DimensionError otherwise). Uses the reduced
/// representation in w's flavor.
AlexanderCandidate alexander_candidate(const BraidWord& w);

/// Multiplies by a power of t so that no t divides the numerator and no t
/// remains in the denominator, then fixes the sign so the leading term has a
/// positive coefficient.
RingElement unit_normalize(const RingElement& e);

enum class WalkMode { conjugation, conjugation_and_cycles, all_moves };

std::string to_string(WalkMode mode);

struct InvarianceRow {
  int walk_id = 0;
  WalkMode mode = WalkMode::conjugation;
  std::vector<MarkovMove> moves;
  BraidWord endpoint;
  std::uint64_t char_poly_hash = 0;
  std::string alexander;
  std::string fingerprint;
  bool pass = false;
  /// Observations that are logged rather than asserted.
  std::string note;
};

struct InvarianceReport {
  BraidWord start;
  std::uint64_t start_char_poly_hash = 0;
  std::string start_alexander;
  std::string start_fingerprint;
  std::vector<InvarianceRow> rows;

  bool all_pass() const;
  /// One row per walk endpoint:
  /// walk | mode | moves | char_poly hash | alexander | fingerprint | verdict
  std::string to_string() const;
};

/// Walk `id` uses mode id % 3 (conjugation only, conjugation and cycles, all
/// moves including stabilization) and seed `seed + id`. Walks without
/// stabilization assert equal char_poly and equal fingerprint; walks with
/// stabilization assert the stable fingerprint and log the rest.
InvarianceReport invariance_report(const BraidWord& w, int walks, int steps, std::uint64_t seed);

}  // namespace bonded
