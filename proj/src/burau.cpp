#include "bonded/burau.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "bonded/error.hpp"

namespace bonded {

namespace {

RingElement t_() { return RingElement::variable(Var::t); }
RingElement z_() { return RingElement::variable(Var::z); }
RingElement t_inv() { return invert_special(Special::t); }
RingElement d1_inv() { return invert_special(Special::d1); }

void check_generator(const Generator& g, int strands, const ReprKind& kind) {
  if (g.index < 1 || g.index > strands - 1) {
    throw RangeError("generator " + g.to_string() + " out of range for n=" + std::to_string(strands));
  }
  if (g.kind == GenKind::kink && !kind.flavor.allows_kinks()) {
    throw FlavorError("kink generator " + g.to_string() + " needs a rigid flavor");
  }
  if (g.is_connector() && g.sign < 0 && !kind.flavor.allows_bond_inverses()) {
    throw FlavorError("inverse generator " + g.to_string() + " needs a group flavor");
  }
  if (kind.reduced && strands < 2) throw DimensionError("reduced representation needs n >= 2");
}

// 2x2 block of the unreduced image of sigma or bond, at rows/cols i-1, i.
void set_unreduced_block(RingMatrix& m, std::size_t c, GenKind kind, int sign) {
  const RingElement one(1);
  if (kind == GenKind::sigma) {
    if (sign > 0) {
      m(c, c) = one - t_();
      m(c, c + 1) = t_();
      m(c + 1, c) = one;
      m(c + 1, c + 1) = RingElement();
    } else {
      m(c, c) = RingElement();
      m(c, c + 1) = one;
      m(c + 1, c) = t_inv();
      m(c + 1, c + 1) = one - t_inv();
    }
    return;
  }
  const RingElement tz = t_() * z_();
  if (sign > 0) {
    m(c, c) = one - tz;
    m(c, c + 1) = tz;
    m(c + 1, c) = z_();
    m(c + 1, c + 1) = one - z_();
  } else {
    const RingElement s = d1_inv();
    m(c, c) = (one - z_()) * s;
    m(c, c + 1) = -tz * s;
    m(c + 1, c) = -z_() * s;
    m(c + 1, c + 1) = (one - tz) * s;
  }
}

// Reduced images differ from the identity only in column i-1.
void set_reduced_column(RingMatrix& m, std::size_t c, GenKind kind, int sign) {
  const std::size_t dim = m.dim();
  RingElement above;
  RingElement diag;
  RingElement below;
  if (kind == GenKind::sigma) {
    if (sign > 0) {
      above = t_();
      diag = -t_();
      below = RingElement(1);
    } else {
      above = RingElement(1);
      diag = -t_inv();
      below = t_inv();
    }
  } else {
    const RingElement tz = t_() * z_();
    if (sign > 0) {
      above = tz;
      diag = RingElement(special_polynomial(Special::d1));
      below = z_();
    } else {
      above = -tz * d1_inv();
      diag = d1_inv();
      below = -z_() * d1_inv();
    }
  }
  m(c, c) = diag;
  if (c >= 1) m(c - 1, c) = above;
  if (c + 1 < dim) m(c + 1, c) = below;
}

RingMatrix build_gen_matrix(const Generator& g, int strands, bool reduced) {
  const std::size_t c = static_cast<std::size_t>(g.index - 1);
  const GenKind shape = g.kind == GenKind::sigma ? GenKind::sigma : GenKind::bond;
  RingMatrix m = RingMatrix::identity(static_cast<std::size_t>(reduced ? strands - 1 : strands));
  if (reduced) {
    set_reduced_column(m, c, shape, g.sign);
  } else {
    set_unreduced_block(m, c, shape, g.sign);
  }
  if (g.kind == GenKind::kink) m = m.substitute_z_with_zk();
  return m;
}

using CacheKey = std::tuple<bool, int, int, int, int>;

class MatrixCache {
 public:
  std::shared_ptr<const RingMatrix> get(const Generator& g, int strands, bool reduced) {
    const CacheKey key{reduced, strands, static_cast<int>(g.kind), g.index, g.sign};
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const RingMatrix>(build_gen_matrix(g, strands, reduced));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(built)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<CacheKey, std::shared_ptr<const RingMatrix>> cache_;
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

std::string kind_label(bool reduced) { return reduced ? "reduced" : "full"; }

}  // namespace

RingMatrix gen_matrix(const Generator& g, int strands, const ReprKind& kind) {
  check_generator(g, strands, kind);
  return *matrix_cache().get(g, strands, kind.reduced);
}

RingMatrix represent(const BraidWord& w, const ReprKind& kind) {
  if (kind.reduced && w.strands < 2) throw DimensionError("reduced representation needs n >= 2");
  for (const auto& g : w.letters) check_generator(g, w.strands, kind);
  RingMatrix product = RingMatrix::identity(kind.dimension(w.strands));
  for (const auto& g : w.letters) product = product * *matrix_cache().get(g, w.strands, kind.reduced);
  return product;
}

// ---------------------------------------------------------------------------
// Relation verification

std::string RelationCheck::to_string() const {
  std::string out = relation + " n=" + std::to_string(strands) + " i=" + std::to_string(i);
  if (j) out += " j=" + std::to_string(*j);
  out += " kind=" + kind_label(reduced);
  out += pass ? " PASS" : " FAIL";
  return out;
}

bool RelationReport::all_pass() const { return failures() == 0; }

std::size_t RelationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::string RelationReport::to_string() const {
  std::string out;
  for (const auto& c : checks) out += c.to_string() + "\n";
  return out;
}

std::vector<RelationInstance> relation_instances(int strands, const Flavor& flavor) {
  std::vector<RelationInstance> out;
  const int n = strands;
  const bool rigid = flavor.allows_kinks();
  const bool group = flavor.allows_bond_inverses();
  using G = Generator;

  for (int i = 1; i <= n - 1; ++i) out.push_back({"R1", i, {}, {G::s(i), G::s(i, -1)}, {}});
  if (group) {
    for (int i = 1; i <= n - 1; ++i) out.push_back({"R1b", i, {}, {G::b(i), G::b(i, -1)}, {}});
    if (rigid) {
      for (int i = 1; i <= n - 1; ++i) out.push_back({"R1k", i, {}, {G::k(i), G::k(i, -1)}, {}});
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) out.push_back({"R2", i, j, {G::s(i), G::s(j)}, {G::s(j), G::s(i)}});
  }
  for (int i = 1; i <= n - 2; ++i) {
    out.push_back({"R3", i, {}, {G::s(i), G::s(i + 1), G::s(i)}, {G::s(i + 1), G::s(i), G::s(i + 1)}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) out.push_back({"B1", i, j, {G::b(i), G::b(j)}, {G::b(j), G::b(i)}});
  }
  if (rigid) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) out.push_back({"K1", i, j, {G::k(i), G::k(j)}, {G::k(j), G::k(i)}});
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) out.push_back({"BK1", i, j, {G::b(i), G::k(j)}, {G::k(j), G::b(i)}});
      }
    }
  }

  auto mixed = [&](const std::string& prefix, auto make) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) out.push_back({prefix + "1", i, j, {G::s(i), make(j)}, {make(j), G::s(i)}});
      }
    }
    for (int i = 1; i <= n - 1; ++i) out.push_back({prefix + "2", i, {}, {G::s(i), make(i)}, {make(i), G::s(i)}});
    for (int i = 1; i <= n - 2; ++i) {
      out.push_back({prefix + "3", i, {}, {G::s(i + 1), G::s(i), make(i + 1)}, {make(i), G::s(i + 1), G::s(i)}});
    }
    for (int i = 1; i <= n - 2; ++i) {
      out.push_back({prefix + "4", i, {}, {G::s(i), G::s(i + 1), make(i)}, {make(i + 1), G::s(i), G::s(i + 1)}});
    }
  };
  mixed(rigid ? "MB" : "M", [](int i) { return G::b(i); });
  if (rigid) mixed("MK", [](int i) { return G::k(i); });
  return out;
}

RelationReport verify_relations(int strands, const ReprKind& kind) {
  if (strands < 2) throw DimensionError("verify_relations needs n >= 2");
  RelationReport report;
  for (const auto& inst : relation_instances(strands, kind.flavor)) {
    const RingMatrix lhs = represent(BraidWord{strands, kind.flavor, inst.lhs}, kind);
    const RingMatrix rhs = represent(BraidWord{strands, kind.flavor, inst.rhs}, kind);
    report.checks.push_back({inst.relation, strands, inst.i, inst.j, kind.reduced, lhs == rhs});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Reduction consistency

std::string ReductionCheck::to_string() const {
  return check + " n=" + std::to_string(strands) + " gen=" + generator.to_string() + (pass ? " PASS" : " FAIL");
}

bool ReductionReport::all_pass() const { return failures() == 0; }

std::size_t ReductionReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::string ReductionReport::to_string() const {
  std::string out;
  for (const auto& c : checks) out += c.to_string() + "\n";
  return out;
}

std::vector<RingElement> expected_star_row(const Generator& g, int strands) {
  std::vector<RingElement> row(static_cast<std::size_t>(strands - 1));
  if (g.index == strands - 1) {
    switch (g.kind) {
      case GenKind::sigma: row.back() = RingElement(1); break;
      case GenKind::bond: row.back() = RingElement::variable(Var::z); break;
      case GenKind::kink: row.back() = RingElement::variable(Var::zk); break;
    }
  }
  return row;
}

ReductionReport reduction_consistency_check(int strands, const Flavor& flavor) {
  if (strands < 2) throw DimensionError("reduction_consistency_check needs n >= 2");
  ReductionReport report;
  const ReprKind full{false, flavor};
  const ReprKind reduced{true, flavor};
  const RingMatrix c = c_matrix(static_cast<std::size_t>(strands));
  std::vector<RingElement> c_en(static_cast<std::size_t>(strands));
  for (std::size_t r = 0; r < c_en.size(); ++r) c_en[r] = c(r, c_en.size() - 1);

  std::vector<Generator> gens;
  for (int i = 1; i <= strands - 1; ++i) {
    gens.push_back(Generator::s(i));
    gens.push_back(Generator::s(i, -1));
    gens.push_back(Generator::b(i));
    if (flavor.allows_bond_inverses()) gens.push_back(Generator::b(i, -1));
    if (flavor.allows_kinks()) {
      gens.push_back(Generator::k(i));
      if (flavor.allows_bond_inverses()) gens.push_back(Generator::k(i, -1));
    }
  }

  for (const auto& g : gens) {
    const RingMatrix image = gen_matrix(g, strands, full);
    const ReducedBlocks blocks = block_decompose_reduced(conjugate_by_C(image));
    const RingMatrix reduced_image = gen_matrix(g, strands, reduced);

    report.checks.push_back({"BLOCK", strands, g, blocks.upper_right_zero && blocks.corner.is_one()});

    std::vector<RingElement> star = expected_star_row(g, strands);
    if (g.sign < 0) {
      // [[A', 0], [s, 1]]^{-1} = [[A'^{-1}, 0], [-s A'^{-1}, 1]]
      const std::vector<RingElement> positive = expected_star_row(g.inverse(), strands);
      const std::size_t dim = reduced_image.dim();
      for (std::size_t col = 0; col < dim; ++col) {
        RingElement sum;
        for (std::size_t k = 0; k < dim; ++k) sum += positive[k] * reduced_image(k, col);
        star[col] = -sum;
      }
    }
    report.checks.push_back({"STAR", strands, g, blocks.bottom_row == star});
    report.checks.push_back({"UPPER_LEFT", strands, g, blocks.upper_left == reduced_image});
    report.checks.push_back({"INVARIANT", strands, g, image * c_en == c_en});
  }
  return report;
}

}  // namespace bonded
