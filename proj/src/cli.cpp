#include "bonded/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>

#include "bonded/burau.hpp"
#include "bonded/closure.hpp"
#include "bonded/error.hpp"
#include "bonded/invariants.hpp"
#include "bonded/markov.hpp"

namespace bonded::cli {

using nlohmann::json;

std::pair<int, int> parse_strand_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
      throw Error("invalid strand count '" + text + "'");
    }
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = to_int(text);
  } else {
    lo = to_int(text.substr(0, dots));
    hi = to_int(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw Error("invalid strand range '" + text + "'");
  return {lo, hi};
}

namespace {

struct Options {
  std::string strands = "2";
  std::string flavor = "monoid";
  std::string word;
  bool json_out = false;
  std::uint64_t seed = 1;
  int walks = 6;
  int steps = 20;
  bool allow_stab = false;
  std::string target;
  std::optional<int> target_strands;
  std::size_t max_len = 0;
  int max_n = 0;
  std::size_t max_states = 200000;
  bool allow_antibonds = false;
};

void add_word_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--n,--strands", o.strands, "strand count")->required();
  cmd->add_option("--flavor", o.flavor, "monoid | group | rigid-monoid | rigid-group")->capture_default_str();
  cmd->add_option("--word", o.word, "braid word, e.g. \"s1 s2^-1 b1\"");
  cmd->add_flag("--json", o.json_out, "structured output");
}

int single_strands(const Options& o) {
  const auto [lo, hi] = parse_strand_range(o.strands);
  if (lo != hi) throw Error("this command takes a single strand count, not a range");
  return lo;
}

BraidWord read_word(const Options& o) { return parse_word(o.word, single_strands(o), Flavor::parse(o.flavor)); }

json matrix_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json char_poly_json(const CharPoly& cp) {
  json coeffs = json::array();
  for (const auto& c : cp.coefficients) coeffs.push_back(c.to_string());
  return {{"text", cp.to_string()}, {"coefficients", coeffs}};
}

json word_json(const BraidWord& w) {
  return {{"strands", w.strands}, {"flavor", w.flavor.name()}, {"word", w.to_string()}};
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto [lo, hi] = parse_strand_range(o.strands);
  const Flavor flavor = Flavor::parse(o.flavor);
  bool pass = true;
  json results = json::array();
  for (int n = lo; n <= hi; ++n) {
    json entry{{"n", n}};
    for (bool reduced : {false, true}) {
      if (reduced && n < 2) continue;
      const RelationReport rep = verify_relations(n, ReprKind{reduced, flavor});
      pass = pass && rep.all_pass();
      json checks = json::array();
      for (const auto& c : rep.checks) {
        if (!o.json_out) out << c.to_string() << "\n";
        checks.push_back({{"relation", c.relation}, {"i", c.i}, {"j", c.j ? json(*c.j) : json(nullptr)},
                          {"pass", c.pass}});
      }
      entry[reduced ? "reduced" : "full"] = {{"pass", rep.all_pass()}, {"failures", rep.failures()},
                                             {"checks", checks}};
    }
    if (n >= 2) {
      const ReductionReport red = reduction_consistency_check(n, flavor);
      pass = pass && red.all_pass();
      json checks = json::array();
      for (const auto& c : red.checks) {
        if (!o.json_out) out << c.to_string() << "\n";
        checks.push_back({{"check", c.check}, {"generator", c.generator.to_string()}, {"pass", c.pass}});
      }
      entry["reduction"] = {{"pass", red.all_pass()}, {"failures", red.failures()}, {"checks", checks}};
    }
    results.push_back(entry);
  }
  if (o.json_out) {
    out << json{{"command", "verify"}, {"flavor", flavor.name()}, {"results", results}, {"pass", pass}}.dump(2)
        << "\n";
  } else {
    out << "verify " << flavor.name() << " n=" << lo << ".." << hi << ": " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_represent(const Options& o, bool reduced, std::ostream& out) {
  const BraidWord w = read_word(o);
  const RingMatrix m = represent(w, ReprKind{reduced, w.flavor});
  if (o.json_out) {
    out << json{{"command", reduced ? "reduced" : "burau"}, {"input", word_json(w)}, {"dimension", m.dim()},
                {"matrix", matrix_json(m)}}
               .dump(2)
        << "\n";
  } else {
    out << m.to_string() << "\n";
  }
  return 0;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const BraidWord w = read_word(o);
  const ClosureSummary s = close(w);
  const std::string fp = closure_invariant_fingerprint(s);
  if (o.json_out) {
    json bonds = json::array();
    for (std::size_t k = 0; k < s.bond_incidence.size(); ++k) {
      bonds.push_back({{"components", {s.bond_incidence[k].first, s.bond_incidence[k].second}},
                       {"sign", s.bond_signs[k]}});
    }
    out << json{{"command", "closure"},
                {"input", word_json(w)},
                {"component_count", s.component_count},
                {"components", s.components},
                {"bond_incidence", bonds},
                {"linking_matrix", s.linking_matrix},
                {"writhe", s.writhe},
                {"fingerprint", fp}}
               .dump(2)
        << "\n";
  } else {
    out << s.to_string() << "fingerprint: " << fp << "\n";
  }
  return 0;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const BraidWord w = read_word(o);
  const CharPoly full = char_poly(w, ReprKind{false, w.flavor});
  std::optional<CharPoly> reduced;
  std::optional<AlexanderCandidate> alex;
  if (w.strands >= 2) {
    reduced = char_poly(w, ReprKind{true, w.flavor});
    alex = alexander_candidate(w);
  }
  if (o.json_out) {
    json j{{"command", "invariant"}, {"input", word_json(w)}, {"char_poly", char_poly_json(full)}};
    j["char_poly_reduced"] = reduced ? char_poly_json(*reduced) : json(nullptr);
    j["alexander"] = alex ? json{{"value", alex->value.to_string()},
                                 {"normalized", alex->normalized},
                                 {"raw", alex->raw.to_string()}}
                          : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "char_poly: " << full.to_string() << "\n";
    if (reduced) out << "char_poly reduced: " << reduced->to_string() << "\n";
    if (alex) {
      out << "alexander: " << alex->to_string() << "\n";
      out << "alexander raw: " << alex->raw.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_walk(const Options& o, std::ostream& out) {
  const BraidWord w = read_word(o);
  const WalkResult walk = random_markov_walk(w, o.steps, o.seed, o.allow_stab);
  const InvarianceReport report = invariance_report(w, o.walks, o.steps, o.seed);
  if (o.json_out) {
    json trace = json::array();
    BraidWord at = w;
    for (const auto& m : walk.trace) {
      at = free_reduce(apply_move(at, m));
      trace.push_back({{"move", m.to_string()}, {"strands", at.strands}, {"word", at.to_string()}});
    }
    json rows = json::array();
    for (const auto& r : report.rows) {
      json moves = json::array();
      for (const auto& m : r.moves) moves.push_back(m.to_string());
      rows.push_back({{"walk", r.walk_id},
                      {"mode", to_string(r.mode)},
                      {"moves", moves},
                      {"endpoint", word_json(r.endpoint)},
                      {"char_poly_hash", r.char_poly_hash},
                      {"alexander", r.alexander},
                      {"fingerprint", r.fingerprint},
                      {"pass", r.pass},
                      {"note", r.note}});
    }
    out << json{{"command", "markov-walk"},
                {"input", word_json(w)},
                {"seed", o.seed},
                {"trace", trace},
                {"result", word_json(walk.word)},
                {"report", {{"start_fingerprint", report.start_fingerprint},
                            {"start_char_poly_hash", report.start_char_poly_hash},
                            {"start_alexander", report.start_alexander},
                            {"rows", rows},
                            {"pass", report.all_pass()}}}}
               .dump(2)
        << "\n";
  } else {
    out << "walk seed=" << o.seed << " steps=" << o.steps << (o.allow_stab ? " (stabilization on)" : "") << "\n";
    BraidWord at = w;
    out << "  start: n=" << at.strands << " \"" << at.to_string() << "\"\n";
    for (std::size_t k = 0; k < walk.trace.size(); ++k) {
      at = free_reduce(apply_move(at, walk.trace[k]));
      out << "  " << (k + 1) << ". " << walk.trace[k].to_string() << " -> n=" << at.strands << " \""
          << at.to_string() << "\"\n";
    }
    out << report.to_string();
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const BraidWord a = read_word(o);
  const int target_n = o.target_strands.value_or(a.strands);
  const BraidWord b = parse_word(o.target, target_n, a.flavor);
  SearchBounds bounds;
  bounds.max_len = o.max_len;
  bounds.max_n = o.max_n;
  bounds.max_states = o.max_states;
  bounds.allow_antibonds = o.allow_antibonds;
  const SearchResult r = markov_equiv_search(a, b, bounds);
  if (o.json_out) {
    out << json{{"command", "markov-equiv"},
                {"from", word_json(a)},
                {"to", word_json(b)},
                {"found", r.found},
                {"explored", r.explored},
                {"certificate", r.found ? certificate_to_json(r.certificate) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (r.found) {
    out << "equivalent: certificate of " << r.certificate.size() << " steps (explored " << r.explored
        << " states)\n";
    BraidWord at = free_reduce(a);
    for (std::size_t k = 0; k < r.certificate.size(); ++k) {
      const auto& step = r.certificate[k];
      at = replay_step(at, step);
      const std::string what = step.rewrite ? step.rewrite->relation + " at " + std::to_string(step.rewrite->position)
                                            : step.move->to_string();
      out << "  " << (k + 1) << ". " << what << " -> n=" << at.strands << " \"" << at.to_string() << "\"\n";
    }
  } else {
    out << "no certificate within bounds (explored " << r.explored << " states); this does not show the words "
        << "are inequivalent\n";
  }
  return r.found ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bonded braid representations, closures and Markov moves", "bonded"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "check every relation and reduction identity");
  verify->add_option("--n,--strands", o.strands, "strand count or range such as 2..5")->capture_default_str();
  verify->add_option("--flavor", o.flavor, "monoid | group | rigid-monoid | rigid-group")->capture_default_str();
  verify->add_flag("--json", o.json_out, "structured output");

  auto* burau = app.add_subcommand("burau", "print the unreduced matrix of a word");
  add_word_options(burau, o);
  auto* reduced = app.add_subcommand("reduced", "print the reduced matrix of a word");
  add_word_options(reduced, o);
  auto* closure = app.add_subcommand("closure", "components, bonds and linking numbers of the closure");
  add_word_options(closure, o);
  auto* invariant = app.add_subcommand("invariant", "characteristic polynomial and Alexander candidate");
  add_word_options(invariant, o);

  auto* walk = app.add_subcommand("markov-walk", "random Markov walk and invariance report");
  add_word_options(walk, o);
  walk->add_option("--seed", o.seed)->capture_default_str();
  walk->add_option("--walks", o.walks)->capture_default_str()->check(CLI::NonNegativeNumber);
  walk->add_option("--steps", o.steps)->capture_default_str()->check(CLI::NonNegativeNumber);
  walk->add_flag("--allow-stab", o.allow_stab, "allow stabilization in the printed walk");

  auto* equiv = app.add_subcommand("markov-equiv", "search for a certificate between two words");
  add_word_options(equiv, o);
  equiv->add_option("--target", o.target, "second word")->required();
  equiv->add_option("--target-n,--target-strands", o.target_strands, "strand count of the second word");
  equiv->add_option("--max-len", o.max_len, "0 means max length + 4")->capture_default_str();
  equiv->add_option("--max-n", o.max_n, "0 means max strands + 1")->capture_default_str();
  equiv->add_option("--max-states", o.max_states)->capture_default_str();
  equiv->add_flag("--allow-antibonds", o.allow_antibonds, "cycle inverse bonds as well");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (burau->parsed()) return cmd_represent(o, false, out);
    if (reduced->parsed()) return cmd_represent(o, true, out);
    if (closure->parsed()) return cmd_closure(o, out);
    if (invariant->parsed()) return cmd_invariant(o, out);
    if (walk->parsed()) return cmd_walk(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bonded::cli
