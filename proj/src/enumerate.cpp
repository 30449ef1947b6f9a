#include "wonder/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wonder {

std::string CanonicalKey::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < data.size(); ++i) {
    if (i) os << '.';
    os << data[i];
  }
  return os.str();
}

CanonicalKey canonical_form(const SphericalSystem& sys) {
  const int n = sys.rs.rank();
  auto perms = diagram_automorphisms(sys.rs);
  CanonicalKey best;
  bool first = true;
  for (const auto& pi : perms) {
    std::vector<int> sp;
    for (int i : sys.sp) sp.push_back(pi[i]);
    std::sort(sp.begin(), sp.end());

    std::vector<Weight> sigma;
    for (const auto& w : sys.sigma) {
      Weight v(n, 0);
      for (int i = 0; i < n; ++i) v[pi[i]] = w[i];
      sigma.push_back(std::move(v));
    }
    std::vector<int> order(sigma.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sigma[a] < sigma[b]; });

    std::vector<std::vector<int>> rows;
    for (const auto& r : sys.a_rows) {
      std::vector<int> v(order.size());
      for (size_t j = 0; j < order.size(); ++j) v[j] = r.c[order[j]];
      rows.push_back(std::move(v));
    }
    std::sort(rows.begin(), rows.end());

    CanonicalKey key;
    key.data.push_back(n);
    key.data.push_back((int)sp.size());
    for (int i : sp) key.data.push_back(i);
    key.data.push_back((int)sigma.size());
    for (int j : order)
      for (int x : sigma[j]) key.data.push_back(x);
    key.data.push_back((int)rows.size());
    for (const auto& r : rows)
      for (int x : r) key.data.push_back(x);

    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  if (first) {  // rank 0: no automorphisms generated
    best.data = {0, 0, 0, 0};
  }
  return best;
}

namespace {

int height(const Weight& w) {
  int h = 0;
  for (int x : w) h += x;
  return h;
}

// all connected subsets of the diagram, classified once
struct ConnectedSubset {
  Component comp;
  std::vector<std::vector<int>> orderings;
};

std::vector<ConnectedSubset> connected_subsets(const RootSystem& rs) {
  std::vector<ConnectedSubset> out;
  for (const auto& f : rs.factors()) {
    for (unsigned mask = 1; mask < (1u << f.rank); ++mask) {
      std::vector<int> nodes;
      for (int p = 0; p < f.rank; ++p)
        if (mask & (1u << p)) nodes.push_back(f.offset + p);
      auto comps = components(rs, nodes);
      if (comps.size() != 1) continue;
      ConnectedSubset c;
      c.comp = comps[0];
      c.orderings = bourbaki_orderings(rs, c.comp);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<Weight> sigma_candidates(const RootSystem& rs, std::span<const int> sp,
                                     const RankOneTable& table) {
  const int n = rs.rank();
  std::set<Weight> seen;
  auto subsets = connected_subsets(rs);
  for (const auto& e : table.entries()) {
    if (e.ortho_pair) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (rs.cartan(i, j) != 0) continue;
          Weight w(n, 0);
          w[i] = 1;
          w[j] = 1;
          seen.insert(std::move(w));
        }
      continue;
    }
    for (const auto& cs : subsets) {
      if (cs.comp.type != e.support_type) continue;
      if (cs.comp.rank < e.min_rank || cs.comp.rank > e.max_rank) continue;
      auto tmpl = e.coeffs(cs.comp.rank);
      for (const auto& ord : cs.orderings) {
        Weight w(n, 0);
        for (int p = 0; p < cs.comp.rank; ++p) w[ord[p]] = tmpl[p];
        seen.insert(std::move(w));
      }
    }
  }
  std::vector<Weight> out;
  for (const auto& w : seen)
    if (axiom_S_holds(rs, w, sp, table)) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

namespace {

// incremental checks on a growing sigma list
bool independent(const std::vector<Weight>& sigma) {
  std::vector<std::vector<long long>> m;
  for (const auto& w : sigma) m.emplace_back(w.begin(), w.end());
  size_t rows = m.size();
  if (rows == 0) return true;
  size_t cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long a = m[r][c], b = m[i][c];
      long long g = std::gcd(std::abs(a), std::abs(b));
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * (a / g) - m[r][j] * (b / g);
    }
    ++r;
  }
  return r == rows;
}

bool sigma_axioms_ok(const RootSystem& rs, const std::vector<Weight>& sigma) {
  const int n = rs.rank();
  // (Sigma1)
  for (size_t j = 0; j < sigma.size(); ++j) {
    auto supp = support(sigma[j]);
    if (supp.size() != 1 || sigma[j][supp[0]] != 2) continue;
    for (size_t k = 0; k < sigma.size(); ++k) {
      if (k == j) continue;
      int p = rs.pairing(supp[0], sigma[k]);
      if (p % 2 != 0 || p > 0) return false;
    }
  }
  // (Sigma2)
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (rs.cartan(a, b) != 0) continue;
      Weight sum(n, 0);
      sum[a] = 1;
      sum[b] = 1;
      if (std::find(sigma.begin(), sigma.end(), sum) == sigma.end()) continue;
      for (const auto& s : sigma)
        if (rs.pairing(a, s) != rs.pairing(b, s)) return false;
    }
  return true;
}

// Unordered pairs of rows summing to the coroot row of alpha under the
// per-column caps of (A1).
std::vector<std::pair<std::vector<int>, std::vector<int>>> a_row_pairs(
    const SphericalSystem& shell, int alpha) {
  auto target = coroot_row(shell, alpha);
  auto sigma_pos = simple_sigma_positions(shell);
  int r = (int)shell.sigma.size();
  std::vector<int> caps(r);
  for (int j = 0; j < r; ++j) {
    auto supp = support(shell.sigma[j]);
    caps[j] = (supp.size() == 1 && shell.sigma[j][supp[0]] == 1) ? 1 : 0;
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<int> first(r, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == r) {
      std::vector<int> second(r);
      for (int t = 0; t < r; ++t) second[t] = target[t] - first[t];
      if (first < second) return;  // unordered: keep one orientation
      out.emplace_back(first, second);
      return;
    }
    int lo = target[j] - caps[j], hi = caps[j];
    if (j == sigma_pos[alpha]) lo = hi = 1;
    for (int v = lo; v <= hi; ++v) {
      first[j] = v;
      rec(j + 1);
    }
  };
  if (sigma_pos[alpha] < 0) return out;
  rec(0);
  return out;
}

// Resolves the forced sharing of rows across the per-root pairs: a slot
// whose vector pairs 1 with another simple spherical root must be the same
// color as one of that root's slots.
std::optional<std::vector<ARow>> resolve_rows(
    const SphericalSystem& shell, const std::vector<int>& simple_roots,
    const std::vector<const std::pair<std::vector<int>, std::vector<int>>*>& choice) {
  auto sigma_pos = simple_sigma_positions(shell);
  int k = (int)simple_roots.size();
  std::vector<std::vector<int>> slots;  // 2k rows
  for (int t = 0; t < k; ++t) {
    slots.push_back(choice[t]->first);
    slots.push_back(choice[t]->second);
  }
  std::vector<int> uf(2 * k);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };

  for (int s = 0; s < 2 * k; ++s) {
    for (int t2 = 0; t2 < k; ++t2) {
      if (t2 == s / 2) continue;
      int col = sigma_pos[simple_roots[t2]];
      if (slots[s][col] != 1) continue;
      int cand = -1;
      for (int u : {2 * t2, 2 * t2 + 1})
        if (slots[u] == slots[s]) cand = u;
      if (cand < 0) return std::nullopt;  // no identical partner: card A(beta) would exceed 2
      uf[find(s)] = find(cand);
    }
  }
  // the two slots of one root must stay distinct colors
  for (int t = 0; t < k; ++t)
    if (find(2 * t) == find(2 * t + 1)) return std::nullopt;

  std::vector<ARow> rows;
  std::vector<int> rep;
  for (int s = 0; s < 2 * k; ++s) {
    int root = find(s);
    if (std::find(rep.begin(), rep.end(), root) != rep.end()) continue;
    rep.push_back(root);
    rows.push_back({"D" + std::to_string(rep.size()), slots[s]});
  }
  return rows;
}

}  // namespace

std::vector<SphericalSystem> enumerate_partition(const RootSystem& rs, unsigned sp_mask,
                                                 const RankOneTable& table,
                                                 int max_sigma_height) {
  const int n = rs.rank();
  std::vector<int> sp;
  for (int i = 0; i < n; ++i)
    if (sp_mask & (1u << i)) sp.push_back(i);

  auto candidates = sigma_candidates(rs, sp, table);
  if (max_sigma_height > 0) {
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](const Weight& w) { return height(w) > max_sigma_height; }),
                     candidates.end());
  }

  std::vector<SphericalSystem> out;
  std::vector<Weight> sigma;

  auto build_systems = [&]() {
    SphericalSystem shell;
    shell.rs = rs;
    shell.sp = sp;
    shell.sigma = sigma;

    std::vector<int> simple_roots;
    auto sigma_pos = simple_sigma_positions(shell);
    for (int i = 0; i < n; ++i)
      if (sigma_pos[i] >= 0) simple_roots.push_back(i);

    if (simple_roots.empty()) {
      out.push_back(shell);
      return;
    }
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> pairs;
    for (int alpha : simple_roots) {
      pairs.push_back(a_row_pairs(shell, alpha));
      if (pairs.back().empty()) return;  // no admissible A rows
    }
    std::vector<const std::pair<std::vector<int>, std::vector<int>>*> choice(simple_roots.size());
    std::function<void(size_t)> rec = [&](size_t t) {
      if (t == simple_roots.size()) {
        auto rows = resolve_rows(shell, simple_roots, choice);
        if (!rows) return;
        SphericalSystem sys = shell;
        sys.a_rows = *rows;
        out.push_back(std::move(sys));
        return;
      }
      for (const auto& p : pairs[t]) {
        choice[t] = &p;
        rec(t + 1);
      }
    };
    rec(0);
  };

  std::function<void(size_t)> extend = [&](size_t from) {
    build_systems();
    if ((int)sigma.size() == n) return;  // independence caps the size at the rank
    for (size_t c = from; c < candidates.size(); ++c) {
      sigma.push_back(candidates[c]);
      if (independent(sigma) && sigma_axioms_ok(rs, sigma)) extend(c + 1);
      sigma.pop_back();
    }
  };
  extend(0);
  return out;
}

namespace {

bool passes_filter(const SphericalSystem& sys, const RankOneTable& table,
                   const EnumFilter& filter, int max_colors) {
  if (filter.cuspidal && *filter.cuspidal != is_cuspidal(sys)) return false;
  if (filter.primitive && *filter.primitive != is_primitive(sys, table, max_colors)) return false;
  if (filter.reductive && *filter.reductive != is_reductive_system(sys).has_value()) return false;
  if (filter.strict && *filter.strict != is_strict(sys, table)) return false;
  if (filter.spherically_closed &&
      *filter.spherically_closed != is_spherically_closed(sys, table))
    return false;
  if (filter.has_primitive_1comb &&
      *filter.has_primitive_1comb != !primitive_1combs(sys, table, max_colors).empty())
    return false;
  return true;
}

std::vector<SphericalSystem> merge_partitions(std::vector<std::vector<SphericalSystem>> parts,
                                              const RankOneTable& table, const EnumFilter& filter,
                                              int max_colors) {
  std::set<CanonicalKey> seen;
  std::vector<SphericalSystem> out;
  for (auto& part : parts)
    for (auto& sys : part) {
      if (!seen.insert(canonical_form(sys)).second) continue;
      if (passes_filter(sys, table, filter, max_colors)) out.push_back(std::move(sys));
    }
  return out;
}

}  // namespace

std::vector<SphericalSystem> enumerate_systems_serial(const RootSystem& rs,
                                                      const RankOneTable& table,
                                                      const EnumFilter& filter, int max_colors) {
  int total = 1 << rs.rank();
  std::vector<std::vector<SphericalSystem>> parts(total);
  for (int mask = 0; mask < total; ++mask)
    parts[mask] = enumerate_partition(rs, (unsigned)mask, table, filter.max_sigma_height);
  return merge_partitions(std::move(parts), table, filter, max_colors);
}

std::vector<SphericalSystem> enumerate_systems(const RootSystem& rs, const RankOneTable& table,
                                               const EnumFilter& filter, int max_colors) {
  int total = 1 << rs.rank();
  std::vector<std::vector<SphericalSystem>> parts(total);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int mask = 0; mask < total; ++mask)
    parts[mask] = enumerate_partition(rs, (unsigned)mask, table, filter.max_sigma_height);
  return merge_partitions(std::move(parts), table, filter, max_colors);
}

}  // namespace wonder
