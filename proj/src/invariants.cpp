#include "bonded/invariants.hpp"

#include <algorithm>
#include <cstdio>

#include "bonded/bareiss.hpp"
#include "bonded/closure.hpp"
#include "bonded/error.hpp"

namespace bonded {

namespace {

// Polynomial in x over Z[t, z, zk]; c[k] is the coefficient of x^k, with no
// trailing zeros.
struct XPoly {
  std::vector<Polynomial> c;

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }

  XPoly operator-() const {
    XPoly out{c};
    for (auto& p : out.c) p = -p;
    return out;
  }
  friend XPoly operator-(const XPoly& a, const XPoly& b) {
    XPoly out{a.c};
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size());
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[k] -= b.c[k];
    out.trim();
    return out;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    XPoly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Polynomial());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) {
        if (!b.c[j].is_zero()) out.c[i + j] += a.c[i] * b.c[j];
      }
    }
    out.trim();
    return out;
  }
};

// Long division in R[x]; every leading-coefficient quotient must be exact.
XPoly exact_div(const XPoly& p, const XPoly& q) {
  if (q.is_zero()) throw DivisionByZero("char_poly: division by zero pivot");
  XPoly rem = p;
  if (rem.c.size() < q.c.size()) {
    if (!rem.is_zero()) throw Error("char_poly: inexact division");
    return {};
  }
  XPoly quot;
  quot.c.assign(rem.c.size() - q.c.size() + 1, Polynomial());
  const Polynomial& lead = q.c.back();
  while (!rem.is_zero() && rem.c.size() >= q.c.size()) {
    const std::size_t shift = rem.c.size() - q.c.size();
    auto factor = try_exact_div(rem.c.back(), lead);
    if (!factor) throw Error("char_poly: inexact division");
    for (std::size_t k = 0; k < q.c.size(); ++k) rem.c[k + shift] -= *factor * q.c[k];
    quot.c[shift] = std::move(*factor);
    rem.trim();
  }
  if (!rem.is_zero()) throw Error("char_poly: inexact division");
  quot.trim();
  return quot;
}

bool needs_parens(const std::string& s) {
  return s.find(' ') != std::string::npos || (!s.empty() && s[0] == '-');
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string CharPoly::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const RingElement& a = coefficients[k];
    if (a.is_zero()) continue;
    std::string term;
    const std::string power = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    const std::string coeff = a.to_string();
    if (k == 0) {
      term = needs_parens(coeff) ? "(" + coeff + ")" : coeff;
    } else if (a.is_one()) {
      term = power;
    } else {
      term = (needs_parens(coeff) ? "(" + coeff + ")" : coeff) + "*" + power;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::uint64_t CharPoly::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_string()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CharPoly char_poly(const BraidWord& w, const ReprKind& kind) {
  const RingMatrix m = represent(w, kind);
  const std::size_t n = m.dim();
  ScaledMatrix s = common_denominator(m);
  // D = t^a d1^b d2^c as a polynomial.
  Polynomial scale = Polynomial(1).shift_t(static_cast<int>(s.den_t));
  if (s.den_d1 > 0) scale = scale * special_polynomial(Special::d1).pow(s.den_d1);
  if (s.den_d2 > 0) scale = scale * special_polynomial(Special::d2).pow(s.den_d2);

  // det(D x I - N) = D^n det(x I - M).
  std::vector<std::vector<XPoly>> a(n, std::vector<XPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      XPoly e;
      e.c.push_back(-s.numerators[i][j]);
      if (i == j) e.c.push_back(scale);
      e.trim();
      a[i][j] = std::move(e);
    }
  }
  XPoly one;
  one.c.push_back(Polynomial(1));
  const XPoly d = detail::bareiss_determinant(
      std::move(a), one, [](const XPoly& p) { return p.is_zero(); },
      [](const XPoly& p, const XPoly& q) { return exact_div(p, q); });

  CharPoly out;
  const auto nn = static_cast<std::uint32_t>(n);
  out.coefficients.resize(n + 1);
  for (std::size_t k = 0; k < d.c.size() && k <= n; ++k) {
    out.coefficients[k] = RingElement(d.c[k], s.den_t * nn, s.den_d1 * nn, s.den_d2 * nn);
  }
  return out;
}

RingElement unit_normalize(const RingElement& e) {
  if (e.is_zero()) return e;
  const Polynomial& num = e.num();
  Polynomial shifted = num.shift_t(-static_cast<int>(num.min_exp_t()));
  if (shifted.leading().coeff < 0) shifted = -shifted;
  return RingElement(std::move(shifted), 0, e.den_d1(), e.den_d2());
}

AlexanderCandidate alexander_candidate(const BraidWord& w) {
  if (w.strands < 2) throw DimensionError("alexander_candidate: needs at least 2 strands");
  const RingMatrix m = represent(w, ReprKind{true, w.flavor});
  const RingMatrix shifted = m - RingMatrix::identity(m.dim());
  AlexanderCandidate out;
  out.raw = det(shifted);

  Polynomial divisor;
  for (int k = 0; k < w.strands; ++k) divisor += Polynomial::variable(Var::t, static_cast<std::uint32_t>(k));
  if (auto q = try_exact_div(out.raw.num(), divisor)) {
    out.normalized = true;
    out.value = unit_normalize(RingElement(*q, out.raw.den_t(), out.raw.den_d1(), out.raw.den_d2()));
  } else {
    out.value = out.raw;
  }
  return out;
}

std::string AlexanderCandidate::to_string() const {
  return normalized ? value.to_string() : value.to_string() + " (unnormalized)";
}

std::string to_string(WalkMode mode) {
  switch (mode) {
    case WalkMode::conjugation: return "conj";
    case WalkMode::conjugation_and_cycles: return "conj+cycle";
    case WalkMode::all_moves: return "conj+cycle+stab";
  }
  return "?";
}

namespace {

std::string alexander_text(const BraidWord& w) {
  if (w.strands < 2) return "n/a";
  return alexander_candidate(w).to_string();
}

std::string moves_text(const std::vector<MarkovMove>& moves) {
  std::size_t conj = 0, cycle = 0, stab = 0;
  for (const auto& m : moves) {
    if (m.type == MarkovMove::Type::conjugate) {
      ++conj;
    } else if (m.is_cycle()) {
      ++cycle;
    } else {
      ++stab;
    }
  }
  return std::to_string(moves.size()) + " (c" + std::to_string(conj) + " y" + std::to_string(cycle) + " s" +
         std::to_string(stab) + ")";
}

}  // namespace

InvarianceReport invariance_report(const BraidWord& w, int walks, int steps, std::uint64_t seed) {
  require_valid(w);
  InvarianceReport report;
  report.start = w;
  const ReprKind full{false, w.flavor};
  const CharPoly start_cp = char_poly(w, full);
  const ClosureSummary start_closure = close(w);
  report.start_char_poly_hash = start_cp.hash();
  report.start_alexander = alexander_text(w);
  report.start_fingerprint = closure_invariant_fingerprint(start_closure);
  const std::string start_stable = stable_fingerprint(start_closure);

  for (int id = 0; id < walks; ++id) {
    InvarianceRow row;
    row.walk_id = id;
    row.mode = static_cast<WalkMode>(id % 3);
    MoveSet set;
    set.cycles = row.mode != WalkMode::conjugation;
    set.stabilization = row.mode == WalkMode::all_moves;
    set.max_strands = w.strands + 3;
    const WalkResult walk = random_markov_walk(w, steps, seed + static_cast<std::uint64_t>(id), set);
    row.moves = walk.trace;
    row.endpoint = walk.word;

    const CharPoly cp = char_poly(walk.word, ReprKind{false, walk.word.flavor});
    const ClosureSummary summary = close(walk.word);
    row.char_poly_hash = cp.hash();
    row.alexander = alexander_text(walk.word);
    row.fingerprint = closure_invariant_fingerprint(summary);
    if (row.mode == WalkMode::all_moves) {
      row.pass = stable_fingerprint(summary) == start_stable;
      row.note = std::string("char_poly ") + (cp == start_cp ? "same" : "differs") + ", alexander " +
                 (row.alexander == report.start_alexander ? "same" : "differs") + " (logged)";
    } else {
      const bool cp_same = cp == start_cp;
      const bool fp_same = row.fingerprint == report.start_fingerprint;
      row.pass = cp_same && fp_same;
      if (!cp_same) row.note += "char_poly differs; ";
      if (!fp_same) row.note += "fingerprint differs; ";
      if (row.alexander != report.start_alexander) row.note += "alexander differs (logged)";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool InvarianceReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const InvarianceRow& r) { return r.pass; });
}

std::string InvarianceReport::to_string() const {
  std::string out = "start: n=" + std::to_string(start.strands) + " word=\"" + start.to_string() +
                    "\" char_poly=" + hex64(start_char_poly_hash) + " alexander=" + start_alexander +
                    " fingerprint=" + start_fingerprint + "\n";
  out += "walk | mode | moves | char_poly hash | alexander | fingerprint | verdict\n";
  for (const auto& r : rows) {
    out += std::to_string(r.walk_id) + " | " + bonded::to_string(r.mode) + " | " + moves_text(r.moves) + " | " +
           hex64(r.char_poly_hash) + " | " + r.alexander + " | " + r.fingerprint + " | " +
           (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) out += " | " + r.note;
    out += "\n";
  }
  out += std::string("overall: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace bonded
