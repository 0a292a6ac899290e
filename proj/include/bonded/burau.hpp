#pragma once

// Bonded Burau representations and their reduced versions.
//
//   sigma_i -> A_i: block [[1-t, t], [1, 0]] at rows/cols i, i+1
//   b_i     -> B_i: block [[1-t*z, t*z], [z, 1-z]]
//   k_i     -> C_i: B_i with z replaced by zk
//
// Inverse bonds and kinks need 1/(1-z-t*z) and 1/(1-zk-t*zk), so the
// codomain is always the localized ring. For words without inverse letters
// every entry is a plain polynomial.
//
// The reduced representation is the (n-1)-dimensional upper-left block of
// C^{-1} G C, where C is the upper-triangular all-ones matrix.

#include <optional>
#include <string>
#include <vector>

#include "bonded/matrix.hpp"
#include "bonded/words.hpp"

namespace bonded {

struct ReprKind {
  bool reduced = false;
  Flavor flavor;

  std::size_t dimension(int strands) const { return static_cast<std::size_t>(reduced ? strands - 1 : strands); }
};

/// Throws RangeError for a bad index, FlavorError if the generator is not
/// legal in kind.flavor, DimensionError for reduced with n < 2.
RingMatrix gen_matrix(const Generator& g, int strands, const ReprKind& kind);

/// Ordered product of generator matrices, leftmost letter leftmost.
/// The word must be valid and legal in kind.flavor.
RingMatrix represent(const BraidWord& w, const ReprKind& kind);

struct RelationCheck {
  std::string relation;
  int strands = 0;
  int i = 0;
  std::optional<int> j;
  bool reduced = false;
  bool pass = false;

  /// `R3 n=4 i=2 kind=full PASS`
  std::string to_string() const;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
  std::string to_string() const;
};

/// Checks every defining relation instance of the flavor at n strands as an
/// exact matrix identity (plus b b^{-1} = id and k k^{-1} = id in groups).
RelationReport verify_relations(int strands, const ReprKind& kind);

/// Instances (lhs, rhs) that verify_relations checks, with their labels.
struct RelationInstance {
  std::string relation;
  int i = 0;
  std::optional<int> j;
  std::vector<Generator> lhs;
  std::vector<Generator> rhs;
};
std::vector<RelationInstance> relation_instances(int strands, const Flavor& flavor);

struct ReductionCheck {
  std::string check;  // BLOCK, STAR, UPPER_LEFT or INVARIANT
  int strands = 0;
  Generator generator;
  bool pass = false;

  /// `STAR n=5 gen=b4 PASS`
  std::string to_string() const;
};

struct ReductionReport {
  std::vector<ReductionCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
  std::string to_string() const;
};

/// For every generator image G at n strands:
///   BLOCK      C^{-1} G C has a zero upper-right column and corner 1
///   STAR       its bottom row equals the expected row vector
///   UPPER_LEFT its upper-left block equals the reduced generator matrix
///   INVARIANT  G (C e_n) = C e_n
/// Inverse generators (group flavors) are checked against the bottom row
/// -star * A'^{-1} implied by inverting the block form.
ReductionReport reduction_consistency_check(int strands, const Flavor& flavor);

/// The row vector expected in the bottom row of C^{-1} G C for a positive
/// generator: zero, except (0,...,0,1) for sigma_{n-1}, (0,...,0,z) for
/// b_{n-1} and (0,...,0,zk) for k_{n-1}.
std::vector<RingElement> expected_star_row(const Generator& g, int strands);

}  // namespace bonded
