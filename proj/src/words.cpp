#include "bonded/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <set>

#include "bonded/error.hpp"

namespace bonded {

// ---------------------------------------------------------------------------
// Flavor / Generator / BraidWord

std::string Flavor::name() const {
  const bool rigid = geometry == Geometry::rigid;
  const bool group = algebraic == Algebra::group;
  return std::string(rigid ? "rigid-" : "") + (group ? "group" : "monoid");
}

Flavor Flavor::parse(std::string_view name) {
  if (name == "monoid") return monoid();
  if (name == "group") return group();
  if (name == "rigid-monoid") return rigid_monoid();
  if (name == "rigid-group") return rigid_group();
  throw Error("unknown flavor '" + std::string(name) +
              "' (expected monoid, group, rigid-monoid or rigid-group)");
}

std::string Generator::to_string() const {
  const char letter = kind == GenKind::sigma ? 's' : kind == GenKind::bond ? 'b' : 'k';
  std::string out = letter + std::to_string(index);
  if (sign < 0) out += "^-1";
  return out;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& g : letters) {
    if (!out.empty()) out += ' ';
    out += g.to_string();
  }
  return out;
}

namespace {

// Empty string if g is legal in (n, flavor).
std::string letter_problem(const Generator& g, int n, const Flavor& flavor) {
  if (g.sign != 1 && g.sign != -1) return "sign must be +1 or -1";
  if (g.index < 1 || g.index > n - 1) {
    return "index " + std::to_string(g.index) + " out of range 1.." + std::to_string(n - 1) +
           " for n=" + std::to_string(n);
  }
  if (g.kind == GenKind::kink && !flavor.allows_kinks()) return "kink generator in topological flavor";
  if (g.is_connector() && g.sign < 0 && !flavor.allows_bond_inverses()) {
    return std::string(g.kind == GenKind::bond ? "inverse bond" : "inverse kink") + " in monoid flavor";
  }
  return {};
}

bool is_range_problem(const Generator& g, int n) { return g.index < 1 || g.index > n - 1; }

}  // namespace

std::vector<Violation> validate(const BraidWord& w) {
  std::vector<Violation> out;
  if (w.strands < 1) out.push_back({0, "strand count must be >= 1"});
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    std::string problem = letter_problem(w.letters[p], w.strands, w.flavor);
    if (!problem.empty()) out.push_back({p, w.letters[p].to_string() + ": " + problem});
  }
  return out;
}

void require_valid(const BraidWord& w) {
  if (w.strands < 1) throw RangeError("strand count must be >= 1");
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    const Generator& g = w.letters[p];
    std::string problem = letter_problem(g, w.strands, w.flavor);
    if (problem.empty()) continue;
    std::string msg = "letter " + std::to_string(p) + " (" + g.to_string() + "): " + problem;
    if (is_range_problem(g, w.strands)) throw RangeError(msg);
    throw FlavorError(msg);
  }
}

BraidWord parse_word(std::string_view text, int strands, Flavor flavor) {
  if (strands < 1) throw RangeError("strand count must be >= 1");
  BraidWord w{strands, flavor, {}};
  std::size_t pos = 0;
  auto is_space = [&](std::size_t p) { return std::isspace(static_cast<unsigned char>(text[p])) != 0; };
  while (true) {
    while (pos < text.size() && is_space(pos)) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    Generator g;
    switch (text[pos]) {
      case 's': g.kind = GenKind::sigma; break;
      case 'b': g.kind = GenKind::bond; break;
      case 'k': g.kind = GenKind::kink; break;
      default:
        throw ParseError(std::string("unexpected character '") + text[pos] + "', expected s, b or k", pos);
    }
    ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected generator index", pos);
    if (pos - digits > 6) throw ParseError("generator index too large", digits);
    g.index = std::atoi(std::string(text.substr(digits, pos - digits)).c_str());
    if (pos < text.size() && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") throw ParseError("only the exponent ^-1 is allowed", pos);
      g.sign = -1;
      pos += 3;
    }
    if (pos < text.size() && !is_space(pos)) {
      throw ParseError(std::string("unexpected character '") + text[pos] + "' after generator", pos);
    }
    std::string problem = letter_problem(g, strands, flavor);
    if (!problem.empty()) {
      std::string msg = g.to_string() + ": " + problem + " at position " + std::to_string(start);
      if (is_range_problem(g, strands)) throw RangeError(msg);
      throw FlavorError(msg);
    }
    w.letters.push_back(g);
  }
  return w;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.strands, w.flavor, {}};
  out.letters.reserve(w.letters.size());
  for (const auto& g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == g.inverse()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw FlavorError("concat: strand counts differ");
  if (a.flavor != b.flavor) throw FlavorError("concat: flavors differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord invert(const BraidWord& w) {
  if (w.flavor.algebraic != Algebra::group) {
    throw FlavorError("invert is only defined in group flavors (" + w.flavor.name() + " given)");
  }
  BraidWord out{w.strands, w.flavor, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.images[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    out.images[i] = next.images[static_cast<std::size_t>(images[i])];
  }
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(images[x])) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation permutation(const BraidWord& w) {
  // at[position] = strand (top position) currently there
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  for (int i = 0; i < w.strands; ++i) at[static_cast<std::size_t>(i)] = i;
  for (const auto& g : w.letters) {
    if (g.is_sigma()) std::swap(at[static_cast<std::size_t>(g.index - 1)], at[static_cast<std::size_t>(g.index)]);
  }
  Permutation p;
  p.images.resize(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) p.images[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return p;
}

// ---------------------------------------------------------------------------
// Relations

namespace {

std::string inverse_pair_name(GenKind k) {
  switch (k) {
    case GenKind::sigma: return "R1";
    case GenKind::bond: return "R1b";
    case GenKind::kink: return "R1k";
  }
  return "R1";
}

// Name of the commutation relation between letters of kinds a and b.
std::string commutation_name(GenKind a, GenKind b, bool far, const Flavor& flavor) {
  const bool rigid = flavor.geometry == Geometry::rigid;
  if (a > b) std::swap(a, b);
  if (a == GenKind::sigma && b == GenKind::sigma) return "R2";
  if (a == GenKind::bond && b == GenKind::bond) return "B1";
  if (a == GenKind::kink && b == GenKind::kink) return "K1";
  if (a == GenKind::bond && b == GenKind::kink) return "BK1";
  if (a == GenKind::sigma && b == GenKind::bond) return std::string(rigid ? "MB" : "M") + (far ? "1" : "2");
  return std::string("MK") + (far ? "1" : "2");
}

// Slot of a three-letter pattern: sigma_{i+offset}^{sign}, or the connector
// X_{i+offset} whose kind and sign come from the matched letter.
struct Slot {
  bool connector;
  int offset;
  int sign;
};

struct TriplePattern {
  int number;  // 3 or 4, for the M3/M4 family name
  std::array<Slot, 3> lhs;
  std::array<Slot, 3> rhs;
};

// sigma_{i+1} sigma_i X_{i+1} = X_i sigma_{i+1} sigma_i and
// sigma_i sigma_{i+1} X_i = X_{i+1} sigma_i sigma_{i+1}, each together with
// the form obtained by moving the sigmas to the other side, which holds for
// X^{-1} as well.
constexpr std::array<TriplePattern, 4> kTriples = {{
    {3, {{{false, 1, 1}, {false, 0, 1}, {true, 1, 0}}}, {{{true, 0, 0}, {false, 1, 1}, {false, 0, 1}}}},
    {3, {{{true, 1, 0}, {false, 0, -1}, {false, 1, -1}}}, {{{false, 0, -1}, {false, 1, -1}, {true, 0, 0}}}},
    {4, {{{false, 0, 1}, {false, 1, 1}, {true, 0, 0}}}, {{{true, 1, 0}, {false, 0, 1}, {false, 1, 1}}}},
    {4, {{{true, 0, 0}, {false, 1, -1}, {false, 0, -1}}}, {{{false, 1, -1}, {false, 0, -1}, {true, 1, 0}}}},
}};

std::string triple_name(int number, GenKind connector, const Flavor& flavor) {
  std::string family = connector == GenKind::kink ? "MK" : (flavor.geometry == Geometry::rigid ? "MB" : "M");
  return family + std::to_string(number);
}

// Tries to match `window` against `pattern`; on success fills `out`.
bool match_triple(const std::array<Slot, 3>& pattern, const std::array<Slot, 3>& replacement,
                  const Generator* window, int n, std::vector<Generator>& out, GenKind& connector_kind) {
  int x_slot = -1;
  for (int k = 0; k < 3; ++k) {
    if (pattern[static_cast<std::size_t>(k)].connector) x_slot = k;
  }
  const Generator& x = window[x_slot];
  if (!x.is_connector()) return false;
  const int i = x.index - pattern[static_cast<std::size_t>(x_slot)].offset;
  if (i < 1 || i + 1 > n - 1) return false;
  for (int k = 0; k < 3; ++k) {
    const Slot& slot = pattern[static_cast<std::size_t>(k)];
    if (slot.connector) continue;
    if (window[k] != Generator::s(i + slot.offset, slot.sign)) return false;
  }
  out.clear();
  for (const Slot& slot : replacement) {
    out.push_back(slot.connector ? Generator{x.kind, i + slot.offset, x.sign}
                                 : Generator::s(i + slot.offset, slot.sign));
  }
  connector_kind = x.kind;
  return true;
}

std::vector<Generator> legal_generators(int n, const Flavor& flavor) {
  std::vector<Generator> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back(Generator::s(i, 1));
    out.push_back(Generator::s(i, -1));
    if (flavor.allows_bond_inverses()) {
      out.push_back(Generator::b(i, 1));
      out.push_back(Generator::b(i, -1));
      if (flavor.allows_kinks()) {
        out.push_back(Generator::k(i, 1));
        out.push_back(Generator::k(i, -1));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Rewrite> enumerate_rewrites(const BraidWord& w, NeighborOptions options) {
  std::vector<Rewrite> out;
  const auto& letters = w.letters;
  const std::size_t len = letters.size();
  const std::vector<Generator> inserts =
      options.allow_insertions ? legal_generators(w.strands, w.flavor) : std::vector<Generator>{};

  for (std::size_t p = 0; p <= len; ++p) {
    for (const auto& g : inserts) {
      out.push_back({inverse_pair_name(g.kind), p, {}, {g, g.inverse()}});
    }
    if (p + 1 < len) {
      const Generator& x = letters[p];
      const Generator& y = letters[p + 1];
      if (y == x.inverse()) {
        out.push_back({inverse_pair_name(x.kind), p, {x, y}, {}});
      } else if (std::abs(x.index - y.index) >= 2) {
        out.push_back({commutation_name(x.kind, y.kind, true, w.flavor), p, {x, y}, {y, x}});
      } else if (x.index == y.index && x.is_sigma() != y.is_sigma()) {
        out.push_back({commutation_name(x.kind, y.kind, false, w.flavor), p, {x, y}, {y, x}});
      }
    }
    if (p + 2 < len) {
      const Generator* window = &letters[p];
      if (window[0].is_sigma() && window[1].is_sigma() && window[0] == window[2] &&
          window[0].sign == window[1].sign && std::abs(window[0].index - window[1].index) == 1) {
        out.push_back({"R3", p, {window[0], window[1], window[2]}, {window[1], window[0], window[1]}});
      }
      std::vector<Generator> replacement;
      GenKind connector = GenKind::bond;
      for (const auto& pattern : kTriples) {
        if (match_triple(pattern.lhs, pattern.rhs, window, w.strands, replacement, connector)) {
          out.push_back({triple_name(pattern.number, connector, w.flavor), p,
                         {window[0], window[1], window[2]}, replacement});
        }
        if (match_triple(pattern.rhs, pattern.lhs, window, w.strands, replacement, connector)) {
          out.push_back({triple_name(pattern.number, connector, w.flavor), p,
                         {window[0], window[1], window[2]}, replacement});
        }
      }
    }
  }
  return out;
}

namespace {

BraidWord splice(const BraidWord& w, const Rewrite& r) {
  BraidWord out{w.strands, w.flavor, {}};
  out.letters.reserve(w.letters.size() + r.to.size());
  const auto pos = static_cast<std::ptrdiff_t>(r.position);
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  out.letters.insert(out.letters.end(), r.to.begin(), r.to.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + pos + static_cast<std::ptrdiff_t>(r.from.size()),
                     w.letters.end());
  return out;
}

}  // namespace

std::vector<BraidWord> relation_neighbors(const BraidWord& w, NeighborOptions options) {
  std::vector<BraidWord> out;
  std::set<std::vector<Generator>> seen;
  for (const auto& r : enumerate_rewrites(w, options)) {
    BraidWord next = splice(w, r);
    if (seen.insert(next.letters).second) out.push_back(std::move(next));
  }
  return out;
}

BraidWord apply_rewrite(const BraidWord& w, const Rewrite& r) {
  if (r.position > w.letters.size() || r.position + r.from.size() > w.letters.size() ||
      !std::equal(r.from.begin(), r.from.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(r.position))) {
    throw MoveError("rewrite " + r.relation + " does not match the word at position " +
                    std::to_string(r.position));
  }
  const auto candidates = enumerate_rewrites(w, NeighborOptions{.allow_insertions = r.from.empty()});
  if (std::find(candidates.begin(), candidates.end(), r) == candidates.end()) {
    throw MoveError("rewrite " + r.relation + " at position " + std::to_string(r.position) +
                    " is not an instance of a relation");
  }
  return splice(w, r);
}

}  // namespace bonded
