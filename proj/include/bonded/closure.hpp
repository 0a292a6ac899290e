#pragma once

// Combinatorics of the closure of a bonded braid: components, which
// components each bond joins, linking numbers and per-component writhe.

#include <string>
#include <utility>
#include <vector>

#include "bonded/words.hpp"

namespace bonded {

struct ClosureSummary {
  int component_count = 0;
  /// Cycles of the strand permutation, 1-based positions, ordered by their
  /// smallest element. Component ids index this vector.
  std::vector<std::vector<int>> components;
  /// Per bond or kink letter, in word order: the (sorted) component ids of
  /// the two strands it joins.
  std::vector<std::pair<int, int>> bond_incidence;
  /// Sign of each bond or kink letter (-1 for b_i^{-1}, k_i^{-1}).
  std::vector<int> bond_signs;
  /// Symmetric, zero diagonal.
  std::vector<std::vector<long>> linking_matrix;
  /// Signed self-crossing count per component.
  std::vector<long> writhe;

  std::string to_string() const;
};

/// Strands are identified by their top endpoint and tracked positionally:
/// sigma_i^{+-1} crosses the strands currently at positions i and i+1.
ClosureSummary close(const BraidWord& w);

/// `c=<count>;sizes=[...];bonds=[...];lk=[...]` where sizes is the sorted
/// multiset of component sizes, bonds the bond incidence pairs `a-b` under
/// the relabeling of components that makes the sorted list least, and lk the
/// sorted nonzero linking numbers. Bonds are counted with sign, so b b^{-1}
/// contributes nothing; a pair with negative net count prints as `a-b^-1`.
std::string closure_invariant_fingerprint(const BraidWord& w);
std::string closure_invariant_fingerprint(const ClosureSummary& s);

/// The fingerprint without the sizes field, which stabilization changes.
std::string stable_fingerprint(const ClosureSummary& s);

}  // namespace bonded
