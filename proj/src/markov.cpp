#include "bonded/markov.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "bonded/error.hpp"

namespace bonded {

bool MarkovMove::is_cycle() const {
  return type == Type::bond_cycle_left || type == Type::bond_cycle_right || type == Type::kink_cycle_left ||
         type == Type::kink_cycle_right;
}

std::string MarkovMove::name() const {
  switch (type) {
    case Type::conjugate: return "conjugate";
    case Type::bond_cycle_left: return "bond_cycle_left";
    case Type::bond_cycle_right: return "bond_cycle_right";
    case Type::kink_cycle_left: return "kink_cycle_left";
    case Type::kink_cycle_right: return "kink_cycle_right";
    case Type::stabilize: return "stabilize";
    case Type::destabilize: return "destabilize";
  }
  return "?";
}

std::string MarkovMove::to_string() const {
  const char* s = sign < 0 ? "-" : "+";
  switch (type) {
    case Type::conjugate: return "conjugate(" + std::to_string(index) + "," + s + ")";
    case Type::stabilize: return std::string("stabilize(") + s + ")";
    default: return name();
  }
}

namespace {

bool cycles_kinks(MarkovMove::Type t) {
  return t == MarkovMove::Type::kink_cycle_left || t == MarkovMove::Type::kink_cycle_right;
}

bool cycles_right(MarkovMove::Type t) {
  return t == MarkovMove::Type::bond_cycle_right || t == MarkovMove::Type::kink_cycle_right;
}

// Letter moved by a cycle move, or nullptr if the word does not start/end
// with the right kind of letter.
const Generator* cycled_letter(const BraidWord& w, MarkovMove::Type t) {
  if (w.letters.empty()) return nullptr;
  const Generator& g = cycles_right(t) ? w.letters.front() : w.letters.back();
  const GenKind wanted = cycles_kinks(t) ? GenKind::kink : GenKind::bond;
  return g.kind == wanted ? &g : nullptr;
}

bool destabilizable(const BraidWord& w) {
  if (w.strands < 2 || w.letters.empty()) return false;
  const Generator& last = w.letters.back();
  if (!last.is_sigma() || last.index != w.strands - 1) return false;
  return std::none_of(w.letters.begin(), w.letters.end() - 1,
                      [&](const Generator& g) { return g.index == w.strands - 1; });
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const MarkovMove& m) {
  using T = MarkovMove::Type;
  BraidWord out = w;
  switch (m.type) {
    case T::conjugate: {
      if (m.index < 1 || m.index > w.strands - 1) {
        throw MoveError("conjugate: index " + std::to_string(m.index) + " outside 1.." +
                        std::to_string(w.strands - 1));
      }
      if (m.sign != 1 && m.sign != -1) throw MoveError("conjugate: sign must be +1 or -1");
      out.letters.insert(out.letters.begin(), Generator::s(m.index, m.sign));
      out.letters.push_back(Generator::s(m.index, -m.sign));
      return out;
    }
    case T::bond_cycle_left:
    case T::bond_cycle_right:
    case T::kink_cycle_left:
    case T::kink_cycle_right: {
      if (cycles_kinks(m.type) && !w.flavor.allows_kinks()) {
        throw MoveError(m.name() + ": kink cycles need a rigid flavor");
      }
      const Generator* g = cycled_letter(w, m.type);
      if (g == nullptr) {
        const char* what = cycles_kinks(m.type) ? "kink" : "bond";
        throw MoveError(m.name() + ": word must " + (cycles_right(m.type) ? "begin" : "end") + " with a " +
                        what + " letter");
      }
      const Generator letter = *g;
      if (cycles_right(m.type)) {
        out.letters.erase(out.letters.begin());
        out.letters.push_back(letter);
      } else {
        out.letters.pop_back();
        out.letters.insert(out.letters.begin(), letter);
      }
      return out;
    }
    case T::stabilize: {
      if (m.sign != 1 && m.sign != -1) throw MoveError("stabilize: sign must be +1 or -1");
      out.strands = w.strands + 1;
      out.letters.push_back(Generator::s(w.strands, m.sign));
      return out;
    }
    case T::destabilize: {
      if (!destabilizable(w)) {
        throw MoveError("destabilize: word must end with s" + std::to_string(w.strands - 1) +
                        "^{+-1} and index " + std::to_string(w.strands - 1) + " must not occur elsewhere");
      }
      out.strands = w.strands - 1;
      out.letters.pop_back();
      return out;
    }
  }
  throw MoveError("unknown move");
}

MarkovMove inverse_move(const BraidWord& before, const MarkovMove& m) {
  using T = MarkovMove::Type;
  switch (m.type) {
    case T::conjugate: return MarkovMove::conjugate(m.index, -m.sign);
    case T::bond_cycle_left: return MarkovMove::of(T::bond_cycle_right);
    case T::bond_cycle_right: return MarkovMove::of(T::bond_cycle_left);
    case T::kink_cycle_left: return MarkovMove::of(T::kink_cycle_right);
    case T::kink_cycle_right: return MarkovMove::of(T::kink_cycle_left);
    case T::stabilize: return MarkovMove::destabilize();
    case T::destabilize:
      if (before.letters.empty()) throw MoveError("destabilize: empty word");
      return MarkovMove::stabilize(before.letters.back().sign);
  }
  throw MoveError("unknown move");
}

std::vector<MarkovMove> applicable_moves(const BraidWord& w, const MoveSet& set) {
  using T = MarkovMove::Type;
  std::vector<MarkovMove> out;
  if (set.conjugation) {
    for (int i = 1; i <= w.strands - 1; ++i) {
      out.push_back(MarkovMove::conjugate(i, 1));
      out.push_back(MarkovMove::conjugate(i, -1));
    }
  }
  if (set.cycles) {
    for (T t : {T::bond_cycle_right, T::bond_cycle_left, T::kink_cycle_right, T::kink_cycle_left}) {
      if (cycles_kinks(t) && !w.flavor.allows_kinks()) continue;
      const Generator* g = cycled_letter(w, t);
      if (g == nullptr) continue;
      if (g->sign < 0 && !set.allow_antibonds) continue;
      out.push_back(MarkovMove::of(t));
    }
  }
  if (set.stabilization) {
    if (set.max_strands == 0 || w.strands < set.max_strands) {
      out.push_back(MarkovMove::stabilize(1));
      out.push_back(MarkovMove::stabilize(-1));
    }
    if (destabilizable(w)) out.push_back(MarkovMove::destabilize());
  }
  return out;
}

WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed, const MoveSet& set) {
  require_valid(w);
  std::mt19937_64 rng(seed);
  WalkResult result{w, {}};
  for (int s = 0; s < steps; ++s) {
    const auto moves = applicable_moves(result.word, set);
    if (moves.empty()) break;
    const MarkovMove& m = moves[static_cast<std::size_t>(rng() % moves.size())];
    result.word = free_reduce(apply_move(result.word, m));
    result.trace.push_back(m);
  }
  return result;
}

WalkResult random_markov_walk(const BraidWord& w, int steps, std::uint64_t seed, bool allow_stab) {
  MoveSet set;
  set.stabilization = allow_stab;
  set.max_strands = w.strands + 3;
  return random_markov_walk(w, steps, seed, set);
}

// ---------------------------------------------------------------------------
// Certificates

BraidWord replay_step(const BraidWord& w, const CertificateStep& step) {
  if (step.rewrite) return free_reduce(apply_rewrite(w, *step.rewrite));
  if (step.move) return free_reduce(apply_move(w, *step.move));
  throw MoveError("empty certificate step");
}

BraidWord replay_certificate(const BraidWord& start, const std::vector<CertificateStep>& steps) {
  BraidWord w = free_reduce(start);
  for (const auto& step : steps) w = replay_step(w, step);
  return w;
}

namespace {

std::vector<Generator> parse_letters(const std::string& text) {
  // Strand count and flavor are checked when the step is replayed.
  return parse_word(text, 1 << 20, Flavor::rigid_group()).letters;
}

std::string letters_text(const std::vector<Generator>& letters) {
  return BraidWord{1, Flavor::monoid(), letters}.to_string();
}

}  // namespace

nlohmann::json certificate_to_json(const std::vector<CertificateStep>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& step : steps) {
    nlohmann::json item;
    if (step.rewrite) {
      item["move"] = "rewrite";
      item["params"] = {{"relation", step.rewrite->relation},
                        {"position", step.rewrite->position},
                        {"from", letters_text(step.rewrite->from)},
                        {"to", letters_text(step.rewrite->to)}};
    } else if (step.move) {
      item["move"] = step.move->name();
      nlohmann::json params = nlohmann::json::object();
      if (step.move->type == MarkovMove::Type::conjugate) {
        params["index"] = step.move->index;
        params["sign"] = step.move->sign;
      } else if (step.move->type == MarkovMove::Type::stabilize) {
        params["sign"] = step.move->sign;
      }
      item["params"] = params;
    }
    out.push_back(item);
  }
  return out;
}

std::vector<CertificateStep> certificate_from_json(const nlohmann::json& j) {
  using T = MarkovMove::Type;
  std::vector<CertificateStep> out;
  for (const auto& item : j) {
    const std::string name = item.at("move").get<std::string>();
    const nlohmann::json params = item.value("params", nlohmann::json::object());
    CertificateStep step;
    if (name == "rewrite") {
      step.rewrite = Rewrite{params.at("relation").get<std::string>(), params.at("position").get<std::size_t>(),
                             parse_letters(params.at("from").get<std::string>()),
                             parse_letters(params.at("to").get<std::string>())};
    } else {
      MarkovMove m;
      bool known = false;
      for (T t : {T::conjugate, T::bond_cycle_left, T::bond_cycle_right, T::kink_cycle_left, T::kink_cycle_right,
                  T::stabilize, T::destabilize}) {
        if (MarkovMove::of(t).name() == name) {
          m = MarkovMove::of(t);
          known = true;
        }
      }
      if (!known) throw Error("certificate: unknown move '" + name + "'");
      if (m.type == T::conjugate) m.index = params.at("index").get<int>();
      if (m.type == T::conjugate || m.type == T::stabilize) m.sign = params.at("sign").get<int>();
      step.move = m;
    }
    out.push_back(std::move(step));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct WordHash {
  std::size_t operator()(const BraidWord& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.strands) * 0x9e3779b97f4a7c15ULL;
    for (const auto& g : w.letters) {
      const std::size_t v = (static_cast<std::size_t>(g.kind) << 24) ^ (static_cast<std::size_t>(g.index) << 2) ^
                            static_cast<std::size_t>(g.sign + 1);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Link {
  BraidWord neighbor;  // parent (forward) or next-toward-goal (backward)
  CertificateStep step;
  bool root = false;
};

using LinkMap = std::unordered_map<BraidWord, Link, WordHash>;

struct Edge {
  CertificateStep step;
  BraidWord target;
};

std::vector<Edge> successors(const BraidWord& w, std::size_t max_len, const MoveSet& moves) {
  std::vector<Edge> out;
  for (const auto& r : enumerate_rewrites(w)) {
    BraidWord next = free_reduce(apply_rewrite(w, r));
    if (next.length() <= max_len) out.push_back({CertificateStep{r, std::nullopt}, std::move(next)});
  }
  for (const auto& m : applicable_moves(w, moves)) {
    BraidWord next = free_reduce(apply_move(w, m));
    if (next.length() <= max_len) out.push_back({CertificateStep{std::nullopt, m}, std::move(next)});
  }
  return out;
}

// Step leading from `after` back to `before`, if one replays exactly.
std::optional<CertificateStep> reverse_step(const BraidWord& before, const CertificateStep& step,
                                            const BraidWord& after) {
  CertificateStep back;
  if (step.rewrite) {
    back.rewrite = step.rewrite->reversed();
  } else {
    back.move = inverse_move(before, *step.move);
  }
  try {
    if (replay_step(after, back) == before) return back;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

SearchResult markov_equiv_search(const BraidWord& a, const BraidWord& b, const SearchBounds& bounds) {
  if (a.flavor != b.flavor) throw FlavorError("markov_equiv_search: flavors differ");
  require_valid(a);
  require_valid(b);
  const BraidWord start = free_reduce(a);
  const BraidWord goal = free_reduce(b);
  const std::size_t max_len =
      bounds.max_len != 0 ? bounds.max_len : std::max(start.length(), goal.length()) + 4;
  const int max_n = bounds.max_n != 0 ? bounds.max_n : std::max(a.strands, b.strands) + 1;

  MoveSet moves;
  moves.max_strands = max_n;
  moves.allow_antibonds = bounds.allow_antibonds;

  SearchResult result;
  if (start == goal) {
    result.found = true;
    result.explored = 1;
    return result;
  }

  LinkMap forward;
  LinkMap backward;
  forward.emplace(start, Link{start, {}, true});
  backward.emplace(goal, Link{goal, {}, true});
  std::vector<BraidWord> frontier_f{start};
  std::vector<BraidWord> frontier_b{goal};

  auto build = [&](const BraidWord& meet) {
    std::vector<CertificateStep> head;
    for (BraidWord at = meet; !forward.at(at).root;) {
      const Link& link = forward.at(at);
      head.push_back(link.step);
      at = link.neighbor;
    }
    std::reverse(head.begin(), head.end());
    for (BraidWord at = meet; !backward.at(at).root;) {
      const Link& link = backward.at(at);
      head.push_back(link.step);
      at = link.neighbor;
    }
    result.found = true;
    result.certificate = std::move(head);
  };

  while (!frontier_f.empty() && !frontier_b.empty()) {
    const bool grow_forward = frontier_f.size() <= frontier_b.size();
    std::vector<BraidWord> next_frontier;
    auto& frontier = grow_forward ? frontier_f : frontier_b;
    auto& own = grow_forward ? forward : backward;
    auto& other = grow_forward ? backward : forward;
    for (const BraidWord& w : frontier) {
      for (auto& edge : successors(w, max_len, moves)) {
        if (edge.target.strands > max_n || own.count(edge.target) != 0) continue;
        if (grow_forward) {
          own.emplace(edge.target, Link{w, edge.step, false});
        } else {
          auto back = reverse_step(w, edge.step, edge.target);
          if (!back) continue;
          own.emplace(edge.target, Link{w, *back, false});
        }
        result.explored = forward.size() + backward.size();
        if (other.count(edge.target) != 0) {
          build(edge.target);
          return result;
        }
        if (result.explored >= bounds.max_states) return result;
        next_frontier.push_back(std::move(edge.target));
      }
    }
    frontier = std::move(next_frontier);
  }
  result.explored = forward.size() + backward.size();
  return result;
}

}  // namespace bonded
