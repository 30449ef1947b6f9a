#include "wonder/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wonder {

SphericalSystem localize(const SphericalSystem& sys, std::span<const int> subset,
                         const RankOneTable& table) {
  std::set<int> sset(subset.begin(), subset.end());
  for (int i : sset)
    if (i < 0 || i >= sys.rs.rank()) throw std::invalid_argument("localization root out of range");

  auto [sub, map] = sub_root_system(sys.rs, subset);
  SphericalSystem loc;
  loc.rs = std::move(sub);

  for (int i : sys.sp)
    if (sset.count(i)) loc.sp.push_back(map[i]);
  std::sort(loc.sp.begin(), loc.sp.end());

  std::vector<int> kept_cols;
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    auto supp = support(sys.sigma[j]);
    bool inside = std::all_of(supp.begin(), supp.end(), [&](int i) { return sset.count(i); });
    if (!inside) continue;
    Weight w(loc.rs.rank(), 0);
    for (int i : supp) w[map[i]] = sys.sigma[j][i];
    loc.sigma.push_back(std::move(w));
    kept_cols.push_back((int)j);
  }

  // A' = union of A(alpha) over the simple roots surviving in sigma
  auto sigma_pos = simple_sigma_positions(sys);
  std::vector<int> rows_kept;
  for (int i = 0; i < sys.rs.rank(); ++i) {
    if (sigma_pos[i] < 0) continue;
    bool kept = std::find(kept_cols.begin(), kept_cols.end(), sigma_pos[i]) != kept_cols.end();
    if (!kept) continue;
    for (size_t k = 0; k < sys.a_rows.size(); ++k)
      if (sys.a_rows[k].c[sigma_pos[i]] == 1 &&
          std::find(rows_kept.begin(), rows_kept.end(), (int)k) == rows_kept.end())
        rows_kept.push_back((int)k);
  }
  std::sort(rows_kept.begin(), rows_kept.end());
  for (int k : rows_kept) {
    ARow r;
    r.name = sys.a_rows[k].name;
    for (int j : kept_cols) r.c.push_back(sys.a_rows[k].c[j]);
    loc.a_rows.push_back(std::move(r));
  }

  auto rep = validate(loc, table);
  if (!rep.valid())
    throw std::logic_error("localization fails validation:\n" + rep.summary());
  return loc;
}

bool is_cuspidal(const SphericalSystem& sys) {
  return (int)support(sys.sigma).size() == sys.rs.rank();
}

namespace {

bool orthogonal_sets(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
  for (int i : a)
    for (int j : b)
      if (i == j || rs.cartan(i, j) != 0) return false;
  return true;
}

std::vector<int> sp_gain(const SphericalSystem& sys, const SphericalSystem& q) {
  std::set<int> old(sys.sp.begin(), sys.sp.end());
  std::vector<int> out;
  for (int i : q.sp)
    if (!old.count(i)) out.push_back(i);
  return out;
}

bool sigma_subset_of(const std::vector<Weight>& small, const std::vector<Weight>& big) {
  for (const auto& w : small)
    if (std::find(big.begin(), big.end(), w) == big.end()) return false;
  return true;
}

}  // namespace

std::optional<std::pair<DistinguishedSubset, DistinguishedSubset>> find_decomposition(
    const SphericalSystem& sys, const ColorSet& cs, const RankOneTable& table, int max_colors) {
  if (sys.sigma.empty()) return std::nullopt;  // vacuous at rank 0
  auto subsets = enumerate_distinguished(cs, max_colors);

  struct Data {
    std::vector<int> gain;
    std::vector<Weight> qsigma;
  };
  std::vector<std::optional<Data>> memo(subsets.size());
  auto data_of = [&](size_t k) -> const Data& {
    if (!memo[k]) {
      auto qr = quotient_by(sys, cs, subsets[k].color_indices, table);
      memo[k] = Data{sp_gain(sys, qr.quotient), qr.quotient.sigma};
    }
    return *memo[k];
  };

  for (size_t i = 0; i < subsets.size(); ++i) {
    if (subsets[i].color_indices.empty()) continue;
    for (size_t j = i + 1; j < subsets.size(); ++j) {
      if (subsets[j].color_indices.empty()) continue;
      const Data& a = data_of(i);
      const Data& b = data_of(j);
      if (!orthogonal_sets(sys.rs, a.gain, b.gain)) continue;
      // Sigma included in Sigma/D' union Sigma/D''
      bool covered = true;
      for (const auto& w : sys.sigma) {
        bool in_a = std::find(a.qsigma.begin(), a.qsigma.end(), w) != a.qsigma.end();
        bool in_b = std::find(b.qsigma.begin(), b.qsigma.end(), w) != b.qsigma.end();
        if (!in_a && !in_b) { covered = false; break; }
      }
      if (!covered) continue;

      // the union must again be distinguished, with matching double quotient
      std::vector<int> uni(subsets[i].color_indices);
      for (int c : subsets[j].color_indices)
        if (std::find(uni.begin(), uni.end(), c) == uni.end()) uni.push_back(c);
      std::sort(uni.begin(), uni.end());
      if (!is_distinguished(cs, uni))
        throw std::logic_error("decomposing pair whose union is not distinguished");
      return std::make_pair(subsets[i], subsets[j]);
    }
  }
  return std::nullopt;
}

std::vector<PositiveComb> positive_combs(const SphericalSystem& sys) {
  std::vector<PositiveComb> out;
  auto sigma_pos = simple_sigma_positions(sys);
  for (size_t k = 0; k < sys.a_rows.size(); ++k) {
    const auto& row = sys.a_rows[k].c;
    if (!std::all_of(row.begin(), row.end(), [](int v) { return v >= 0; })) continue;
    PositiveComb c;
    c.a_index = (int)k;
    for (int i = 0; i < sys.rs.rank(); ++i)
      if (sigma_pos[i] >= 0 && row[sigma_pos[i]] == 1) c.s_d.push_back(i);
    c.n = (int)c.s_d.size();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SphericalSystem> comb_split(const SphericalSystem& sys, const PositiveComb& comb,
                                        const RankOneTable& table) {
  if (comb.n <= 1) throw std::invalid_argument("comb split needs a positive n-comb with n > 1");
  auto sigma_pos = simple_sigma_positions(sys);
  std::vector<SphericalSystem> out;
  for (int alpha : comb.s_d) {
    SphericalSystem sa;
    sa.rs = sys.rs;
    sa.sp = sys.sp;
    std::vector<int> kept_cols;
    for (size_t j = 0; j < sys.sigma.size(); ++j) {
      // drop the comb's other simple roots from sigma
      bool dropped = false;
      for (int beta : comb.s_d)
        if (beta != alpha && sigma_pos[beta] == (int)j) dropped = true;
      if (dropped) continue;
      sa.sigma.push_back(sys.sigma[j]);
      kept_cols.push_back((int)j);
    }
    std::vector<int> rows_kept;
    for (int i = 0; i < sys.rs.rank(); ++i) {
      if (sigma_pos[i] < 0) continue;
      if (std::find(kept_cols.begin(), kept_cols.end(), sigma_pos[i]) == kept_cols.end()) continue;
      for (size_t k = 0; k < sys.a_rows.size(); ++k)
        if (sys.a_rows[k].c[sigma_pos[i]] == 1 &&
            std::find(rows_kept.begin(), rows_kept.end(), (int)k) == rows_kept.end())
          rows_kept.push_back((int)k);
    }
    std::sort(rows_kept.begin(), rows_kept.end());
    for (int k : rows_kept) {
      ARow r;
      r.name = sys.a_rows[k].name;
      for (int j : kept_cols) r.c.push_back(sys.a_rows[k].c[j]);
      sa.a_rows.push_back(std::move(r));
    }
    auto rep = validate(sa, table);
    if (!rep.valid()) throw std::logic_error("comb split fails validation:\n" + rep.summary());

    // the split must leave a positive 1-comb at alpha
    bool found = false;
    for (const auto& c2 : positive_combs(sa))
      if (c2.n == 1 && c2.s_d == std::vector<int>{alpha} &&
          sa.a_rows[c2.a_index].name == sys.a_rows[comb.a_index].name)
        found = true;
    if (!found) throw std::logic_error("comb split lost its 1-comb");
    out.push_back(std::move(sa));
  }
  return out;
}

bool comb_fibration_applies(const SphericalSystem& sys, const PositiveComb& comb) {
  std::set<int> nonsimple_support;
  auto sigma_pos = simple_sigma_positions(sys);
  std::vector<int> simple_cols;
  for (int i = 0; i < sys.rs.rank(); ++i)
    if (sigma_pos[i] >= 0) simple_cols.push_back(sigma_pos[i]);
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    if (std::find(simple_cols.begin(), simple_cols.end(), (int)j) != simple_cols.end()) continue;
    for (int i : support(sys.sigma[j])) nonsimple_support.insert(i);
  }
  for (int alpha : comb.s_d)
    if (nonsimple_support.count(alpha)) return false;
  return true;
}

const char* tail_kind_name(TailKind k) {
  switch (k) {
    case TailKind::B: return "b";
    case TailKind::TwoB: return "2b";
    case TailKind::C: return "c";
    case TailKind::D: return "d";
    case TailKind::AaAa: return "(aa,aa)";
    case TailKind::D3D3: return "(d3,d3)";
    case TailKind::D5D5: return "(d5,d5)";
    case TailKind::TwoATwoA: return "(2a,2a)";
  }
  return "?";
}

namespace {

// candidate tail patterns on one factor, as weights over the global indices
struct TailPattern {
  TailKind kind;
  int m;
  std::vector<Weight> weights;
};

std::vector<TailPattern> tail_patterns(const SphericalSystem& sys, const Factor& f) {
  const int n = sys.rs.rank();
  auto unit = [&](int i, int c) {
    Weight w(n, 0);
    w[i] = c;
    return w;
  };
  auto idx = [&](int bourbaki1) { return f.offset + bourbaki1 - 1; };
  std::vector<TailPattern> out;
  switch (f.type) {
    case 'B':
      for (int m = 1; m <= f.rank; ++m) {
        Weight w(n, 0), w2(n, 0);
        for (int p = f.rank - m + 1; p <= f.rank; ++p) {
          w[idx(p)] = 1;
          w2[idx(p)] = 2;
        }
        out.push_back({TailKind::B, m, {w}});
        out.push_back({TailKind::TwoB, m, {w2}});
      }
      break;
    case 'C':
      for (int m = 2; m <= f.rank; ++m) {
        Weight w(n, 0);
        w[idx(f.rank - m + 1)] = 1;
        for (int p = f.rank - m + 2; p <= f.rank - 1; ++p) w[idx(p)] = 2;
        w[idx(f.rank)] = 1;
        out.push_back({TailKind::C, m, {w}});
      }
      break;
    case 'D':
      for (int m = 2; m <= f.rank; ++m) {
        Weight w(n, 0);
        for (int p = f.rank - m + 1; p <= f.rank - 2; ++p) w[idx(p)] = 2;
        w[idx(f.rank - 1)] = 1;
        w[idx(f.rank)] = 1;
        out.push_back({TailKind::D, m, {w}});
      }
      break;
    case 'E':
      if (f.rank == 6) {
        Weight w1(n, 0), w2(n, 0);
        w1[idx(1)] = 1;
        w1[idx(6)] = 1;
        w2[idx(3)] = 1;
        w2[idx(5)] = 1;
        out.push_back({TailKind::AaAa, 0, {w1, w2}});
      } else if (f.rank == 7) {
        Weight w1(n, 0), w2(n, 0);
        w1[idx(2)] = 1;
        w1[idx(4)] = 2;
        w1[idx(5)] = 1;
        w2[idx(5)] = 1;
        w2[idx(6)] = 2;
        w2[idx(7)] = 1;
        out.push_back({TailKind::D3D3, 0, {w1, w2}});
      } else if (f.rank == 8) {
        Weight w1(n, 0), w2(n, 0);
        w1[idx(1)] = 2;
        w1[idx(2)] = 1;
        w1[idx(3)] = 2;
        w1[idx(4)] = 2;
        w1[idx(5)] = 1;
        w2[idx(2)] = 1;
        w2[idx(3)] = 1;
        w2[idx(4)] = 2;
        w2[idx(5)] = 2;
        w2[idx(6)] = 2;
        out.push_back({TailKind::D5D5, 0, {w1, w2}});
      }
      break;
    case 'F': {
      Weight w1 = unit(idx(3), 2), w2 = unit(idx(4), 2);
      out.push_back({TailKind::TwoATwoA, 0, {w1, w2}});
      break;
    }
    default:
      break;  // no tail patterns on type A factors
  }
  return out;
}

}  // namespace

std::vector<Tail> find_tails(const SphericalSystem& sys, const ColorSet& cs,
                             const RankOneTable& table, int max_colors) {
  std::vector<Tail> out;
  if (sys.sigma.empty()) return out;
  std::set<int> sp(sys.sp.begin(), sys.sp.end());
  auto sigma_pos = simple_sigma_positions(sys);

  std::optional<std::vector<DistinguishedSubset>> subsets;
  std::vector<std::optional<std::vector<Weight>>> qsigma_memo;
  auto witness_for = [&](const std::vector<Weight>& tilde) -> std::optional<DistinguishedSubset> {
    if (!subsets) {
      subsets = enumerate_distinguished(cs, max_colors);
      qsigma_memo.assign(subsets->size(), std::nullopt);
    }
    for (size_t k = 0; k < subsets->size(); ++k) {
      if (!qsigma_memo[k])
        qsigma_memo[k] = quotient_by(sys, cs, (*subsets)[k].color_indices, table).quotient.sigma;
      const auto& qs = *qsigma_memo[k];
      if (qs.size() == tilde.size() && sigma_subset_of(tilde, qs) && sigma_subset_of(qs, tilde))
        return (*subsets)[k];
    }
    return std::nullopt;
  };

  for (size_t fi = 0; fi < sys.rs.factors().size(); ++fi) {
    const Factor& f = sys.rs.factors()[fi];
    for (const auto& pat : tail_patterns(sys, f)) {
      std::vector<int> positions;
      bool all_in = true;
      for (const auto& w : pat.weights) {
        auto it = std::find(sys.sigma.begin(), sys.sigma.end(), w);
        if (it == sys.sigma.end()) { all_in = false; break; }
        positions.push_back((int)(it - sys.sigma.begin()));
      }
      if (!all_in) continue;

      if (pat.kind == TailKind::B) {
        int last = f.offset + f.rank - 1;
        if (pat.m > 1) {
          if (!sp.count(last)) continue;
        } else {
          // m = 1: the two A(alpha_n) rows must agree everywhere
          int col = sigma_pos[last];
          if (col < 0) continue;
          std::vector<const ARow*> pair;
          for (const auto& r : sys.a_rows)
            if (r.c[col] == 1) pair.push_back(&r);
          if (pair.size() != 2 || pair[0]->c != pair[1]->c) continue;
        }
      }

      auto wit = witness_for(pat.weights);
      if (!wit) continue;
      Tail t;
      t.kind = pat.kind;
      t.m = pat.m;
      t.factor = (int)fi;
      t.tilde_sigma = positions;
      t.witness = *wit;
      out.push_back(std::move(t));
    }
  }
  return out;
}

SphericalSystem strip_tail(const SphericalSystem& sys, const Tail& tail,
                           const RankOneTable& table) {
  std::vector<Weight> rest;
  for (size_t j = 0; j < sys.sigma.size(); ++j)
    if (std::find(tail.tilde_sigma.begin(), tail.tilde_sigma.end(), (int)j) ==
        tail.tilde_sigma.end())
      rest.push_back(sys.sigma[j]);
  return localize(sys, support(rest), table);
}

bool is_primitive(const SphericalSystem& sys, const RankOneTable& table, int max_colors) {
  if (!is_cuspidal(sys)) return false;
  if (!positive_combs(sys).empty()) return false;
  ColorSet cs = colors(sys);
  if (find_decomposition(sys, cs, table, max_colors)) return false;
  if (!find_tails(sys, cs, table, max_colors).empty()) return false;
  return true;
}

std::vector<PositiveComb> primitive_1combs(const SphericalSystem& sys, const RankOneTable& table,
                                           int max_colors) {
  if (!is_cuspidal(sys)) return {};
  ColorSet cs = colors(sys);
  if (find_decomposition(sys, cs, table, max_colors)) return {};
  if (!find_tails(sys, cs, table, max_colors).empty()) return {};
  std::vector<PositiveComb> out;
  for (auto& c : positive_combs(sys))
    if (c.n == 1) out.push_back(std::move(c));
  return out;
}

std::optional<std::vector<Rational>> is_reductive_system(const SphericalSystem& sys) {
  ColorSet cs = colors(sys);
  return strict_positive_image_certificate(cs.c_full, (int)sys.sigma.size());
}

bool is_strict(const SphericalSystem& sys, const RankOneTable& table) {
  for (const auto& s : sys.sigma)
    if (double_exists(sys.rs, s, sys.sp, table)) return false;
  return true;
}

bool is_spherically_closed(const SphericalSystem& sys, const RankOneTable& table) {
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    auto supp = support(sys.sigma[j]);
    bool simple = supp.size() == 1 && sys.sigma[j][supp[0]] == 1;
    if (simple) continue;
    if (double_exists(sys.rs, sys.sigma[j], sys.sp, table)) return false;
  }
  return true;
}

const char* leaf_flag_name(LeafFlag f) {
  switch (f) {
    case LeafFlag::None: return "none";
    case LeafFlag::Primitive: return "primitive";
    case LeafFlag::Primitive1Comb: return "primitive-1-comb";
    case LeafFlag::Rank0: return "rank-0";
    case LeafFlag::AtBound: return "at-bound";
  }
  return "?";
}

namespace {

std::tuple<int, int, int> reduction_measure(const SphericalSystem& sys) {
  return {sys.rs.rank(), (int)sys.sigma.size(), (int)colors(sys).colors.size()};
}

std::string subset_label(const ColorSet& cs, const std::vector<int>& idxs) {
  std::string s = "{";
  for (size_t k = 0; k < idxs.size(); ++k) {
    if (k) s += ",";
    s += cs.colors[idxs[k]].name;
  }
  return s + "}";
}

void reduce_into(ReductionNode& node, const RankOneTable& table, int max_colors,
                 std::tuple<int, int, int> parent_measure, bool have_parent) {
  const SphericalSystem& sys = node.system;
  auto measure = reduction_measure(sys);
  if (have_parent && !(measure < parent_measure)) {
    node.flag = LeafFlag::AtBound;  // termination guard, unreachable on valid input
    return;
  }

  if (sys.sigma.empty()) {
    node.flag = LeafFlag::Rank0;
    return;
  }

  auto attach = [&](std::string label, SphericalSystem child) {
    ReductionNode::Edge e;
    e.label = std::move(label);
    e.child = std::make_unique<ReductionNode>();
    e.child->system = std::move(child);
    node.children.push_back(std::move(e));
  };

  if (!is_cuspidal(sys)) {
    auto supp = support(sys.sigma);
    std::string label = "localize(";
    for (size_t k = 0; k < supp.size(); ++k) {
      if (k) label += ",";
      label += std::to_string(supp[k] + 1);
    }
    label += ")";
    attach(std::move(label), localize(sys, supp, table));
  } else {
    ColorSet cs = colors(sys);
    if (auto dec = find_decomposition(sys, cs, table, max_colors)) {
      std::string label = "decompose(" + subset_label(cs, dec->first.color_indices) + "," +
                          subset_label(cs, dec->second.color_indices) + ")";
      attach(label, quotient_by(sys, cs, dec->first.color_indices, table).quotient);
      attach(label, quotient_by(sys, cs, dec->second.color_indices, table).quotient);
    } else {
      auto combs = positive_combs(sys);
      const PositiveComb* wide = nullptr;
      for (const auto& c : combs)
        if (c.n > 1 && !wide) wide = &c;
      if (wide) {
        for (auto& child : comb_split(sys, *wide, table))
          attach("comb_split(" + sys.a_rows[wide->a_index].name + ")", std::move(child));
      } else {
        auto tails = find_tails(sys, cs, table, max_colors);
        const Tail* progress = nullptr;
        for (const auto& t : tails) {
          std::vector<Weight> rest;
          for (size_t j = 0; j < sys.sigma.size(); ++j)
            if (std::find(t.tilde_sigma.begin(), t.tilde_sigma.end(), (int)j) ==
                t.tilde_sigma.end())
              rest.push_back(sys.sigma[j]);
          if ((int)support(rest).size() < sys.rs.rank()) { progress = &t; break; }
        }
        if (progress) {
          std::string label = std::string("strip_tail(") + tail_kind_name(progress->kind);
          if (progress->m) label += "(" + std::to_string(progress->m) + ")";
          label += ")";
          attach(std::move(label), strip_tail(sys, *progress, table));
        } else if (!tails.empty()) {
          node.flag = LeafFlag::AtBound;  // tail without localization progress
          return;
        } else if (!combs.empty()) {
          node.flag = LeafFlag::Primitive1Comb;
          return;
        } else {
          node.flag = LeafFlag::Primitive;
          return;
        }
      }
    }
  }
  for (auto& e : node.children) reduce_into(*e.child, table, max_colors, measure, true);
}

}  // namespace

ReductionNode reduce(const SphericalSystem& sys, const RankOneTable& table, int max_colors) {
  ReductionNode root;
  root.system = sys;
  reduce_into(root, table, max_colors, {0, 0, 0}, false);
  return root;
}

}  // namespace wonder
