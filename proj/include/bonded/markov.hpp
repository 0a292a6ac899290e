#pragma once

// Bonded Markov moves: conjugation by sigma_i^{+-1}, cyclic permutation of a
// bond (or kink, rigid flavors) across the whole word, and
// (de)stabilization. Also random walks and a bounded equivalence search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bonded/words.hpp"

namespace bonded {

struct MarkovMove {
  enum class Type {
    conjugate,          // w -> s_i^{sign} w s_i^{-sign}
    bond_cycle_left,    // w b -> b w
    bond_cycle_right,   // b w -> w b
    kink_cycle_left,    // w k -> k w
    kink_cycle_right,   // k w -> w k
    stabilize,          // w in M_n -> w s_n^{sign} in M_{n+1}
    destabilize,        // w s_{n-1}^{+-1} in M_n -> w in M_{n-1}
  };

  Type type = Type::conjugate;
  int index = 0;  // conjugate only
  int sign = 1;   // conjugate and stabilize

  static MarkovMove conjugate(int i, int sign) { return {Type::conjugate, i, sign}; }
  static MarkovMove stabilize(int sign) { return {Type::stabilize, 0, sign}; }
  static MarkovMove destabilize() { return {Type::destabilize, 0, 1}; }
  static MarkovMove of(Type type) { return {type, 0, 1}; }

  bool changes_strands() const { return type == Type::stabilize || type == Type::destabilize; }
  bool is_cycle() const;
  std::string name() const;
  std::string to_string() const;

  bool operator==(const MarkovMove&) const = default;
};

/// Throws MoveError naming the failed precondition. The result is not
/// free-reduced.
BraidWord apply_move(const BraidWord& w, const MarkovMove& m);

/// The move that undoes `m` applied to `before` (up to free reduction).
MarkovMove inverse_move(const BraidWord& before, const MarkovMove& m);

struct MoveSet {
  bool conjugation = true;
  bool cycles = true;
  bool stabilization = true;
  /// Stabilize only below this strand count; 0 means no cap.
  int max_strands = 0;
  /// Cycle moves on b^{-1} / k^{-1} letters.
  bool allow_antibonds = false;
};

/// Applicable moves in deterministic order.
std::vector<MarkovMove> applicable_moves(const BraidWord& w, const MoveSet& set);

struct WalkResult {
  BraidWord word;
  std::vector<MarkovMove> trace;
};

/// `steps` moves, each drawn uniformly from applicable_moves, with free
/// reduction after every move. Deterministic in `seed`.
WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed, const MoveSet& set);
/// Default move set; with allow_stab the strand count is capped at n + 3.
WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed, bool allow_stab);

/// A relation rewrite or a Markov move. Replaying a step applies it and then
/// free-reduces.
struct CertificateStep {
  std::optional<Rewrite> rewrite;
  std::optional<MarkovMove> move;

  bool operator==(const CertificateStep&) const = default;
};

BraidWord replay_step(const BraidWord& w, const CertificateStep& step);
/// Replays from free_reduce(start).
BraidWord replay_certificate(const BraidWord& start, const std::vector<CertificateStep>& steps);

nlohmann::json certificate_to_json(const std::vector<CertificateStep>& steps);
std::vector<CertificateStep> certificate_from_json(const nlohmann::json& j);

struct SearchBounds {
  /// 0 selects max(|a|, |b|) + 4.
  std::size_t max_len = 0;
  /// 0 selects max(n_a, n_b) + 1.
  int max_n = 0;
  std::size_t max_states = 200000;
  bool allow_antibonds = false;
};

struct SearchResult {
  bool found = false;
  std::vector<CertificateStep> certificate;
  std::size_t explored = 0;
};

/// Bidirectional breadth-first search over free-reduced words under relation
/// rewrites and Markov moves. A failed search says nothing about
/// inequivalence.
SearchResult markov_equiv_search(const BraidWord& a, const BraidWord& b, const SearchBounds& bounds = {});

}  // namespace bonded
