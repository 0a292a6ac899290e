#pragma once

// Bonded braid words in the four flavors: topological/rigid monoids and
// their groups with adjoined bond/kink inverses.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bonded {

enum class Algebra { monoid, group };
enum class Geometry { topological, rigid };

struct Flavor {
  Algebra algebraic = Algebra::monoid;
  Geometry geometry = Geometry::topological;

  bool allows_kinks() const { return geometry == Geometry::rigid; }
  /// b_i^{-1} and k_i^{-1} exist only in the groups.
  bool allows_bond_inverses() const { return algebraic == Algebra::group; }

  /// `monoid`, `group`, `rigid-monoid` or `rigid-group`.
  std::string name() const;
  static Flavor parse(std::string_view name);

  static Flavor monoid() { return {Algebra::monoid, Geometry::topological}; }
  static Flavor group() { return {Algebra::group, Geometry::topological}; }
  static Flavor rigid_monoid() { return {Algebra::monoid, Geometry::rigid}; }
  static Flavor rigid_group() { return {Algebra::group, Geometry::rigid}; }

  auto operator<=>(const Flavor&) const = default;
};

enum class GenKind { sigma, bond, kink };

struct Generator {
  GenKind kind = GenKind::sigma;
  int index = 1;  // 1-based, 1 <= index <= n-1
  int sign = 1;   // +1 or -1

  static Generator s(int i, int sign = 1) { return {GenKind::sigma, i, sign}; }
  static Generator b(int i, int sign = 1) { return {GenKind::bond, i, sign}; }
  static Generator k(int i, int sign = 1) { return {GenKind::kink, i, sign}; }

  Generator inverse() const { return {kind, index, -sign}; }
  bool is_sigma() const { return kind == GenKind::sigma; }
  /// Bond or kink.
  bool is_connector() const { return kind != GenKind::sigma; }

  /// Token text: `s3`, `s3^-1`, `b2`, `k1^-1`.
  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;
};

struct BraidWord {
  int strands = 1;
  Flavor flavor;
  std::vector<Generator> letters;

  static BraidWord identity(int n, Flavor f = Flavor::monoid()) { return {n, f, {}}; }

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  /// Whitespace-separated tokens; the empty word prints as "".
  std::string to_string() const;

  auto operator<=>(const BraidWord&) const = default;
};

struct Violation {
  std::size_t position;  // letter index
  std::string message;
};

/// Every index and flavor violation, in letter order. Empty means valid.
std::vector<Violation> validate(const BraidWord& w);
/// Throws RangeError or FlavorError on the first violation.
void require_valid(const BraidWord& w);

/// Parses `s1 s2^-1 b3 k1`. Throws ParseError (syntax), RangeError or
/// FlavorError, all naming the offending character position.
BraidWord parse_word(std::string_view text, int strands, Flavor flavor);

BraidWord free_reduce(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Reverse with letterwise inversion. Throws FlavorError for monoid flavors.
BraidWord invert(const BraidWord& w);

/// images[p] is the bottom position of the strand starting at top position p
/// (0-based).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  std::size_t size() const { return images.size(); }
  /// Apply this, then `next`.
  Permutation then(const Permutation& next) const;
  /// Cycles as 1-based positions, each starting at its smallest element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  bool operator==(const Permutation&) const = default;
};

/// sigma letters swap positions i and i+1; bonds and kinks act trivially.
Permutation permutation(const BraidWord& w);

/// One application of a defining relation (or a derived form) at
/// `position`: letters [position, position + from.size()) equal `from` and
/// are replaced by `to`.
struct Rewrite {
  std::string relation;
  std::size_t position = 0;
  std::vector<Generator> from;
  std::vector<Generator> to;

  Rewrite reversed() const { return {relation, position, to, from}; }
  bool operator==(const Rewrite&) const = default;
};

struct NeighborOptions {
  /// Also insert x x^{-1} at every position. Off by default since it grows
  /// words without bound.
  bool allow_insertions = false;
};

/// All single rewrites applicable to w, in deterministic order (by position,
/// then relation).
std::vector<Rewrite> enumerate_rewrites(const BraidWord& w, NeighborOptions options = {});
/// Distinct words reachable by one rewrite, in enumeration order.
std::vector<BraidWord> relation_neighbors(const BraidWord& w, NeighborOptions options = {});
/// Applies `r` after checking it is one of enumerate_rewrites(w) (with
/// insertions allowed). Throws MoveError otherwise.
BraidWord apply_rewrite(const BraidWord& w, const Rewrite& r);

}  // namespace bonded
