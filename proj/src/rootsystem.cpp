#include "wonder/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace wonder {

namespace {

bool rank_ok(char t, int r) {
  switch (t) {
    case 'A': return r >= 1;
    case 'B': return r >= 1;   // B1 normalized to A1
    case 'C': return r >= 1;   // C1 -> A1, C2 -> B2
    case 'D': return r >= 2;   // D2 -> A1xA1, D3 -> A3
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
  }
  return false;
}

// Fills the Bourbaki Cartan block for one simple factor, 0-based local
// indices. Only the sign structure differs between types; diagonal is 2.
void fill_factor(std::vector<int>& a, int n, int off, char type, int rank) {
  auto at = [&](int i, int j) -> int& { return a[(off + i) * n + (off + j)]; };
  auto chain = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_rank short: its row carries the -2
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      at(rank - 2, rank - 1) = -1;
      at(rank - 1, rank - 2) = -2;
      break;
    case 'C':  // alpha_rank long
      for (int i = 0; i + 2 < rank; ++i) chain(i, i + 1);
      at(rank - 2, rank - 1) = -2;
      at(rank - 1, rank - 2) = -1;
      break;
    case 'D':
      for (int i = 0; i + 3 < rank; ++i) chain(i, i + 1);
      chain(rank - 3, rank - 2);
      chain(rank - 3, rank - 1);
      break;
    case 'E':
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 3; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case 'F':
      chain(0, 1);
      at(1, 2) = -1;
      at(2, 1) = -2;
      chain(2, 3);
      break;
    case 'G':  // alpha_1 short
      at(0, 1) = -3;
      at(1, 0) = -1;
      break;
  }
}

// Expected Cartan matrix of a simple type, used to verify classifications.
std::vector<int> reference_cartan(char type, int rank) {
  std::vector<int> a(rank * rank, 0);
  for (int i = 0; i < rank; ++i) a[i * rank + i] = 2;
  fill_factor(a, rank, 0, type, rank);
  return a;
}

}  // namespace

void RootSystem::build() {
  n_ = 0;
  for (auto& f : factors_) {
    f.offset = n_;
    n_ += f.rank;
  }
  cartan_.assign(n_ * n_, 0);
  factor_of_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) cartan_[i * n_ + i] = 2;
  for (size_t k = 0; k < factors_.size(); ++k) {
    const Factor& f = factors_[k];
    fill_factor(cartan_, n_, f.offset, f.type, f.rank);
    for (int i = 0; i < f.rank; ++i) factor_of_[f.offset + i] = (int)k;
  }
  if (input_relabel_.empty()) {
    input_relabel_.resize(n_);
    for (int i = 0; i < n_; ++i) input_relabel_[i] = i;
  }
}

RootSystem RootSystem::from_factors(const std::vector<std::pair<char, int>>& fs) {
  RootSystem rs;
  for (auto [t, r] : fs) {
    if (!rank_ok(t, r))
      throw group_parse_error(std::string(1, t) + std::to_string(r) +
                              ": rank out of range for type " + std::string(1, t));
    rs.factors_.push_back({t, r, 0});
  }
  rs.build();
  return rs;
}

RootSystem RootSystem::parse(std::string_view text) {
  // grammar: TYPE RANK ("x" TYPE RANK)*, case-insensitive, optional blanks
  std::vector<std::pair<char, int>> raw;
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  if (i < text.size() && text[i] == '-' ) {
    ++i; skip();
    if (i == text.size()) return RootSystem();  // the empty group
    throw group_parse_error("malformed group spec");
  }
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) {
      if (first) throw group_parse_error("empty group spec");
      break;
    }
    if (!first) {
      char sep = (char)std::tolower((unsigned char)text[i]);
      if (sep != 'x') throw group_parse_error("expected 'x' between factors");
      ++i;
      skip();
    }
    if (i == text.size()) throw group_parse_error("trailing separator in group spec");
    char t = (char)std::toupper((unsigned char)text[i]);
    if (t < 'A' || t > 'G') throw group_parse_error(std::string("unknown type letter '") + text[i] + "'");
    ++i;
    skip();
    if (i == text.size() || !std::isdigit((unsigned char)text[i]))
      throw group_parse_error(std::string("missing rank after type ") + t);
    int r = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      r = r * 10 + (text[i] - '0');
      if (r > 64) throw group_parse_error("rank too large");
      ++i;
    }
    if (!rank_ok(t, r))
      throw group_parse_error(std::string(1, t) + std::to_string(r) +
                              ": rank out of range for type " + std::string(1, t));
    raw.emplace_back(t, r);
    first = false;
  }

  // Normalize degenerate aliases, tracking where each canonical index came
  // from in the input numbering.
  RootSystem rs;
  std::vector<int> relabel;
  int in_off = 0;
  for (auto [t, r] : raw) {
    auto push = [&](char nt, int nr, std::vector<int> local) {
      rs.factors_.push_back({nt, nr, 0});
      for (int p : local) relabel.push_back(in_off + p);
    };
    if (t == 'B' && r == 1) push('A', 1, {0});
    else if (t == 'C' && r == 1) push('A', 1, {0});
    else if (t == 'C' && r == 2) push('B', 2, {1, 0});
    else if (t == 'D' && r == 2) { push('A', 1, {0}); push('A', 1, {1}); }
    else if (t == 'D' && r == 3) push('A', 3, {1, 0, 2});
    else {
      std::vector<int> id(r);
      for (int p = 0; p < r; ++p) id[p] = p;
      push(t, r, id);
    }
    in_off += r;
  }
  rs.input_relabel_ = relabel;
  rs.build();
  return rs;
}

int RootSystem::pairing(int i, const Weight& w) const {
  if (i < 0 || i >= n_) throw std::out_of_range("simple-root index out of range");
  if ((int)w.size() != n_) throw std::invalid_argument("weight has wrong length");
  int s = 0;
  for (int j = 0; j < n_; ++j) s += cartan(i, j) * w[j];
  return s;
}

std::string RootSystem::spec_string() const {
  if (factors_.empty()) return "-";
  std::string s;
  for (size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += 'x';
    s += factors_[k].type;
    s += std::to_string(factors_[k].rank);
  }
  return s;
}

std::vector<int> support(const Weight& w) {
  std::vector<int> s;
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s.push_back((int)i);
  return s;
}

std::vector<int> support(const std::vector<Weight>& ws) {
  std::set<int> s;
  for (const auto& w : ws)
    for (int i : support(w)) s.insert(i);
  return std::vector<int>(s.begin(), s.end());
}

namespace {

struct SubDiagram {
  const RootSystem* rs;
  std::vector<int> nodes;                 // sorted
  std::vector<std::vector<int>> adj;      // positions into nodes
  int pos(int global) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), global);
    return (int)(it - nodes.begin());
  }
  int deg(int p) const { return (int)adj[p].size(); }
  int mult(int p, int q) const {
    int a = rs->cartan(nodes[p], nodes[q]), b = rs->cartan(nodes[q], nodes[p]);
    return a * b;
  }
  // true if p is the short end of the edge (p,q): the short root's row
  // carries the larger |entry|
  bool shorter(int p, int q) const {
    return rs->cartan(nodes[p], nodes[q]) < rs->cartan(nodes[q], nodes[p]);
  }
};

// Walks a path graph from the leaf `start`.
std::vector<int> walk_chain(const SubDiagram& d, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int q : d.adj[cur])
      if (q != prev) { next = q; break; }
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Arm from `fork` starting toward `first`, ordered outward.
std::vector<int> walk_arm(const SubDiagram& d, int fork, int first) {
  std::vector<int> arm{first};
  int prev = fork, cur = first;
  while (true) {
    int next = -1;
    for (int q : d.adj[cur])
      if (q != prev) { next = q; break; }
    if (next < 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

struct Classified {
  char type;
  int rank;
  std::vector<std::vector<int>> orderings;  // positions into SubDiagram::nodes
};

Classified classify_connected(const SubDiagram& d) {
  int n = (int)d.nodes.size();
  if (n == 1) return {'A', 1, {{0}}};

  int triple_p = -1, triple_q = -1, double_p = -1, double_q = -1;
  for (int p = 0; p < n; ++p)
    for (int q : d.adj[p]) {
      if (q < p) continue;
      int m = d.mult(p, q);
      if (m == 3) { triple_p = p; triple_q = q; }
      else if (m == 2) { double_p = p; double_q = q; }
    }

  if (triple_p >= 0) {
    if (n != 2) throw std::logic_error("triple edge in component of rank != 2");
    int s = d.shorter(triple_p, triple_q) ? triple_p : triple_q;
    int l = s == triple_p ? triple_q : triple_p;
    return {'G', 2, {{s, l}}};  // G2: alpha_1 short
  }

  if (double_p >= 0) {
    int s = d.shorter(double_p, double_q) ? double_p : double_q;
    int l = s == double_p ? double_q : double_p;
    if (n == 2) return {'B', 2, {{l, s}}};  // rank-2 double edge: canonical B2
    if (d.deg(s) >= 2 && d.deg(l) >= 2) {
      // double edge in the middle: F4, long side first
      if (n != 4) throw std::logic_error("interior double edge in component of rank != 4");
      auto la = walk_arm(d, s, l);  // l then the far long root
      auto sa = walk_arm(d, l, s);
      if (la.size() != 2 || sa.size() != 2) throw std::logic_error("bad F4 shape");
      return {'F', 4, {{la[1], la[0], sa[0], sa[1]}}};
    }
    if (d.deg(s) == 1) {
      // short root terminal: B_n, chain ends at the short root
      auto chain = walk_chain(d, s);
      std::reverse(chain.begin(), chain.end());
      return {'B', n, {chain}};
    }
    // long root terminal: C_n
    auto chain = walk_chain(d, l);
    std::reverse(chain.begin(), chain.end());
    return {'C', n, {chain}};
  }

  // simply laced
  int fork = -1;
  for (int p = 0; p < n; ++p) {
    if (d.deg(p) > 3) throw std::logic_error("vertex of degree > 3 in sub-diagram");
    if (d.deg(p) == 3) {
      if (fork >= 0) throw std::logic_error("two branch vertices in sub-diagram");
      fork = p;
    }
  }
  if (fork < 0) {
    // chain: A_n, both reading directions are valid orderings
    int end = -1;
    for (int p = 0; p < n && end < 0; ++p)
      if (d.deg(p) == 1) end = p;
    auto c1 = walk_chain(d, end);
    auto c2 = c1;
    std::reverse(c2.begin(), c2.end());
    if (d.nodes[c2[0]] < d.nodes[c1[0]]) std::swap(c1, c2);
    return {'A', n, {c1, c2}};
  }

  std::vector<std::vector<int>> arms;
  for (int q : d.adj[fork]) arms.push_back(walk_arm(d, fork, q));
  std::sort(arms.begin(), arms.end(),
            [&](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return d.nodes[a.back()] < d.nodes[b.back()];
            });
  size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();

  if (l1 == 1 && l2 == 1) {
    // D_n; Bourbaki: long arm read inward, fork, then the two leaves
    if (n == 4) {
      // full S3 on the three leaves
      std::vector<std::vector<int>> ords;
      int leaves[3] = {arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaves, leaves + 3,
                [&](int a, int b) { return d.nodes[a] < d.nodes[b]; });
      int idx[3] = {0, 1, 2};
      std::sort(idx, idx + 3);
      do ords.push_back({leaves[idx[0]], fork, leaves[idx[1]], leaves[idx[2]]});
      while (std::next_permutation(idx, idx + 3));
      return {'D', 4, ords};
    }
    std::vector<int> base = arms[2];
    std::reverse(base.begin(), base.end());
    base.push_back(fork);
    std::vector<int> o1 = base, o2 = base;
    o1.push_back(arms[0][0]); o1.push_back(arms[1][0]);
    o2.push_back(arms[1][0]); o2.push_back(arms[0][0]);
    return {'D', n, {o1, o2}};
  }

  if (l1 == 1 && l2 == 2) {
    // E_n; Bourbaki: alpha_2 = the length-1 arm node, (alpha_1, alpha_3) =
    // a length-2 arm outside-in, the rest along the long arm
    if (n < 6 || n > 8) throw std::logic_error("E-shaped diagram of invalid rank");
    auto make = [&](const std::vector<int>& two, const std::vector<int>& rest) {
      std::vector<int> o{two[1], arms[0][0], two[0], fork};
      for (int x : rest) o.push_back(x);
      return o;
    };
    std::vector<std::vector<int>> ords;
    ords.push_back(make(arms[1], arms[2]));
    if (l3 == 2) ords.push_back(make(arms[2], arms[1]));  // E6 flip
    return {'E', n, ords};
  }
  throw std::logic_error("sub-diagram is not of Dynkin type");
}

SubDiagram make_subdiagram(const RootSystem& rs, std::vector<int> nodes) {
  SubDiagram d;
  d.rs = &rs;
  std::sort(nodes.begin(), nodes.end());
  d.nodes = std::move(nodes);
  int m = (int)d.nodes.size();
  d.adj.assign(m, {});
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      if (rs.cartan(d.nodes[p], d.nodes[q]) != 0) {
        d.adj[p].push_back(q);
        d.adj[q].push_back(p);
      }
  return d;
}

void verify_component(const RootSystem& rs, const Component& c) {
  auto ref = reference_cartan(c.type, c.rank);
  for (int i = 0; i < c.rank; ++i)
    for (int j = 0; j < c.rank; ++j)
      if (rs.cartan(c.nodes[i], c.nodes[j]) != ref[i * c.rank + j])
        throw std::logic_error("component classification mismatch");
}

}  // namespace

std::vector<Component> components(const RootSystem& rs, std::span<const int> subset) {
  std::vector<int> nodes(subset.begin(), subset.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int i : nodes)
    if (i < 0 || i >= rs.rank()) throw std::out_of_range("subset index out of range");

  std::vector<Component> out;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t h = 0; h < comp.size(); ++h)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.cartan(comp[h], *it) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else ++it;
      }
    SubDiagram d = make_subdiagram(rs, comp);
    Classified cl = classify_connected(d);
    Component c;
    c.type = cl.type;
    c.rank = cl.rank;
    for (int p : cl.orderings[0]) c.nodes.push_back(d.nodes[p]);
    verify_component(rs, c);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.nodes.begin(), a.nodes.end()) <
           *std::min_element(b.nodes.begin(), b.nodes.end());
  });
  return out;
}

std::vector<std::vector<int>> bourbaki_orderings(const RootSystem& rs, const Component& comp) {
  SubDiagram d = make_subdiagram(rs, comp.nodes);
  Classified cl = classify_connected(d);
  std::vector<std::vector<int>> out;
  for (auto& o : cl.orderings) {
    std::vector<int> g;
    for (int p : o) g.push_back(d.nodes[p]);
    out.push_back(std::move(g));
  }
  return out;
}

std::pair<RootSystem, std::vector<int>> sub_root_system(const RootSystem& rs,
                                                        std::span<const int> subset) {
  auto comps = components(rs, subset);
  RootSystem sub;
  std::vector<int> map(rs.rank(), -1);
  std::vector<std::pair<char, int>> fs;
  for (auto& c : comps) fs.emplace_back(c.type, c.rank);
  sub = RootSystem::from_factors(fs);
  int off = 0;
  for (auto& c : comps) {
    for (int p = 0; p < c.rank; ++p) map[c.nodes[p]] = off + p;
    off += c.rank;
  }
  // sanity: the restricted Cartan matrix must agree
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (map[i] >= 0 && map[j] >= 0 && sub.cartan(map[i], map[j]) != rs.cartan(i, j))
        throw std::logic_error("sub-root-system Cartan mismatch");
  return {std::move(sub), std::move(map)};
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
  const auto& fs = rs.factors();
  size_t nf = fs.size();

  // per-factor automorphisms, as local permutations
  std::vector<std::vector<std::vector<int>>> local(nf);
  for (size_t k = 0; k < nf; ++k) {
    Component c;
    c.type = fs[k].type;
    c.rank = fs[k].rank;
    for (int i = 0; i < fs[k].rank; ++i) c.nodes.push_back(fs[k].offset + i);
    auto ords = bourbaki_orderings(rs, c);
    for (auto& o : ords) {
      std::vector<int> perm(fs[k].rank);
      for (int p = 0; p < fs[k].rank; ++p) perm[p] = o[p] - fs[k].offset;
      local[k].push_back(std::move(perm));
    }
  }

  // factor permutations preserving (type, rank)
  std::vector<int> fperm(nf);
  for (size_t k = 0; k < nf; ++k) fperm[k] = (int)k;
  std::vector<std::vector<int>> fperms;
  std::sort(fperm.begin(), fperm.end());
  do {
    bool ok = true;
    for (size_t k = 0; k < nf && ok; ++k)
      ok = fs[k].type == fs[fperm[k]].type && fs[k].rank == fs[fperm[k]].rank;
    if (ok) fperms.push_back(fperm);
  } while (std::next_permutation(fperm.begin(), fperm.end()));

  std::vector<std::vector<int>> out;
  std::vector<size_t> pick(nf, 0);
  for (const auto& fp : fperms) {
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> perm(rs.rank());
      for (size_t k = 0; k < nf; ++k) {
        const auto& l = local[k][pick[k]];
        for (int p = 0; p < fs[k].rank; ++p)
          perm[fs[k].offset + p] = fs[fp[k]].offset + l[p];
      }
      out.push_back(std::move(perm));
      size_t k = 0;
      for (; k < nf; ++k) {
        if (++pick[k] < local[k].size()) break;
        pick[k] = 0;
      }
      if (k == nf) break;
    }
  }
  return out;
}

}  // namespace wonder
