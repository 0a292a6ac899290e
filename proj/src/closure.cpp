#include "bonded/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <type_traits>

namespace bonded {

ClosureSummary close(const BraidWord& w) {
  require_valid(w);
  ClosureSummary s;
  s.components = permutation(w).cycles();
  s.component_count = static_cast<int>(s.components.size());

  const auto n = static_cast<std::size_t>(w.strands);
  std::vector<int> component_of(n);
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    for (int strand : s.components[c]) component_of[static_cast<std::size_t>(strand - 1)] = static_cast<int>(c);
  }

  const auto count = static_cast<std::size_t>(s.component_count);
  std::vector<std::vector<long>> crossing_sum(count, std::vector<long>(count, 0));
  s.writhe.assign(count, 0);

  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 0);
  for (const auto& g : w.letters) {
    const auto left = static_cast<std::size_t>(g.index - 1);
    const int a = component_of[static_cast<std::size_t>(at[left])];
    const int b = component_of[static_cast<std::size_t>(at[left + 1])];
    if (g.is_sigma()) {
      if (a == b) {
        s.writhe[static_cast<std::size_t>(a)] += g.sign;
      } else {
        crossing_sum[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += g.sign;
        crossing_sum[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += g.sign;
      }
      std::swap(at[left], at[left + 1]);
    } else {
      s.bond_incidence.emplace_back(std::min(a, b), std::max(a, b));
      s.bond_signs.push_back(g.sign);
    }
  }

  s.linking_matrix.assign(count, std::vector<long>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b) s.linking_matrix[a][b] = crossing_sum[a][b] / 2;
    }
  }
  return s;
}

namespace {

template <class T>
std::string bracketed(const std::vector<T>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += ',';
    if constexpr (std::is_same_v<T, std::string>) {
      out += items[k];
    } else {
      out += std::to_string(items[k]);
    }
  }
  return out + "]";
}

struct SignedBond {
  int a;
  int b;
  int inverse;  // 0 for a bond, 1 for an inverse bond

  auto operator<=>(const SignedBond&) const = default;
};

// Net signed bond multiset, as the least sorted list over all relabelings of
// the components it touches. Component counts are bounded by the strand count.
std::vector<SignedBond> canonical_bonds(const ClosureSummary& s) {
  std::map<std::pair<int, int>, long> net;
  for (std::size_t k = 0; k < s.bond_incidence.size(); ++k) net[s.bond_incidence[k]] += s.bond_signs[k];
  std::vector<SignedBond> bonds;
  for (const auto& [pair, count] : net) {
    for (long c = 0; c < std::abs(count); ++c) bonds.push_back({pair.first, pair.second, count < 0 ? 1 : 0});
  }

  std::vector<int> touched;
  for (const auto& bond : bonds) {
    touched.push_back(bond.a);
    touched.push_back(bond.b);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  std::vector<int> labels(touched.size());
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<SignedBond> best;
  bool first = true;
  do {
    std::vector<SignedBond> relabeled;
    relabeled.reserve(bonds.size());
    for (const auto& bond : bonds) {
      const auto ia = std::lower_bound(touched.begin(), touched.end(), bond.a) - touched.begin();
      const auto ib = std::lower_bound(touched.begin(), touched.end(), bond.b) - touched.begin();
      const int la = labels[static_cast<std::size_t>(ia)];
      const int lb = labels[static_cast<std::size_t>(ib)];
      relabeled.push_back({std::min(la, lb), std::max(la, lb), bond.inverse});
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) {
      best = std::move(relabeled);
      first = false;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

std::string bonds_field(const ClosureSummary& s) {
  std::vector<std::string> items;
  for (const auto& bond : canonical_bonds(s)) {
    items.push_back(std::to_string(bond.a) + "-" + std::to_string(bond.b) + (bond.inverse ? "^-1" : ""));
  }
  return "bonds=" + bracketed(items);
}

std::string lk_field(const ClosureSummary& s) {
  std::vector<long> lk;
  for (std::size_t a = 0; a < s.linking_matrix.size(); ++a) {
    for (std::size_t b = a + 1; b < s.linking_matrix.size(); ++b) {
      if (s.linking_matrix[a][b] != 0) lk.push_back(s.linking_matrix[a][b]);
    }
  }
  std::sort(lk.begin(), lk.end());
  return "lk=" + bracketed(lk);
}

}  // namespace

std::string closure_invariant_fingerprint(const ClosureSummary& s) {
  std::vector<int> sizes;
  for (const auto& c : s.components) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return "c=" + std::to_string(s.component_count) + ";sizes=" + bracketed(sizes) + ";" + bonds_field(s) + ";" +
         lk_field(s);
}

std::string closure_invariant_fingerprint(const BraidWord& w) { return closure_invariant_fingerprint(close(w)); }

std::string stable_fingerprint(const ClosureSummary& s) {
  return "c=" + std::to_string(s.component_count) + ";" + bonds_field(s) + ";" + lk_field(s);
}

std::string ClosureSummary::to_string() const {
  std::string out = "components: " + std::to_string(component_count) + "\n";
  for (std::size_t c = 0; c < components.size(); ++c) {
    out += "  " + std::to_string(c) + ": strands " + bracketed(components[c]) +
           " writhe " + std::to_string(writhe[c]) + "\n";
  }
  out += "bonds:";
  if (bond_incidence.empty()) out += " none";
  out += "\n";
  for (std::size_t k = 0; k < bond_incidence.size(); ++k) {
    out += "  #" + std::to_string(k) + ": " + std::to_string(bond_incidence[k].first) + "-" +
           std::to_string(bond_incidence[k].second) + (bond_signs[k] < 0 ? " (inverse)" : "") + "\n";
  }
  out += "linking:\n";
  for (const auto& row : linking_matrix) out += "  " + bracketed(row) + "\n";
  return out;
}

}  // namespace bonded
