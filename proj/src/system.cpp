#include "wonder/system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wonder {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Independence: return "independence";
    case Axiom::Lattice: return "lattice";
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::Sigma1: return "Sigma1";
    case Axiom::Sigma2: return "Sigma2";
    case Axiom::S: return "S";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (int k = 0; k < kAxiomCount; ++k) {
    os << "AXIOM " << axiom_name((Axiom)k) << ": " << (verdicts[k].pass ? "PASS" : "FAIL");
    for (const auto& w : verdicts[k].witnesses) os << " [" << w << "]";
    os << "\n";
  }
  return os.str();
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s.empty() ? "()" : s;
}

std::vector<int> coroot_row(const SphericalSystem& sys, int alpha) {
  std::vector<int> row(sys.sigma.size());
  for (size_t j = 0; j < sys.sigma.size(); ++j)
    row[j] = sys.rs.pairing(alpha, sys.sigma[j]);
  return row;
}

std::vector<int> simple_sigma_positions(const SphericalSystem& sys) {
  std::vector<int> pos(sys.rs.rank(), -1);
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    auto supp = support(sys.sigma[j]);
    if (supp.size() == 1 && sys.sigma[j][supp[0]] == 1) pos[supp[0]] = (int)j;
  }
  return pos;
}

namespace {

// rank over Q by fraction-free elimination
int integer_rank(std::vector<std::vector<long long>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long a = m[r][c], b = m[i][c];
      long long g = std::gcd(std::abs(a), std::abs(b));
      long long fa = a / g, fb = b / g;
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * fa - m[r][j] * fb;
    }
    ++r;
  }
  return (int)r;
}

bool in_sigma(const SphericalSystem& sys, const Weight& w) {
  return std::find(sys.sigma.begin(), sys.sigma.end(), w) != sys.sigma.end();
}

Weight unit(int n, int i, int scale = 1) {
  Weight w(n, 0);
  w[i] = scale;
  return w;
}

}  // namespace

ValidationReport validate(const SphericalSystem& sys, const RankOneTable& table) {
  const int n = sys.rs.rank();
  ValidationReport rep;

  for (int i : sys.sp)
    if (i < 0 || i >= n) throw std::invalid_argument("sp index out of range");
  for (const auto& w : sys.sigma)
    if ((int)w.size() != n) throw std::invalid_argument("sigma entry has wrong length");
  for (const auto& r : sys.a_rows)
    if (r.c.size() != sys.sigma.size())
      throw std::invalid_argument("A row '" + r.name + "' has wrong length");
  {
    std::set<std::string> names;
    for (const auto& r : sys.a_rows)
      if (!names.insert(r.name).second)
        throw std::invalid_argument("duplicate A row name '" + r.name + "'");
  }

  // lattice: sigma in NS, nonzero
  std::vector<bool> lattice_ok(sys.sigma.size(), true);
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    bool nonneg = true;
    for (int x : sys.sigma[j]) nonneg = nonneg && x >= 0;
    if (!nonneg) {
      lattice_ok[j] = false;
      rep[Axiom::Lattice].pass = false;
      rep[Axiom::Lattice].witnesses.push_back("sigma" + std::to_string(j + 1) + " = " +
                                              weight_str(sys.sigma[j]) + " not in NS");
    }
  }

  // linear independence over Q
  {
    std::vector<std::vector<long long>> m;
    for (const auto& w : sys.sigma) m.emplace_back(w.begin(), w.end());
    if (integer_rank(m) != (int)sys.sigma.size()) {
      rep[Axiom::Independence].pass = false;
      rep[Axiom::Independence].witnesses.push_back("sigma is linearly dependent");
    }
  }

  auto sigma_pos = simple_sigma_positions(sys);
  std::vector<int> simple_roots_in_sigma;
  for (int i = 0; i < n; ++i)
    if (sigma_pos[i] >= 0) simple_roots_in_sigma.push_back(i);

  // (A1)
  for (const auto& r : sys.a_rows) {
    for (size_t j = 0; j < r.c.size(); ++j) {
      if (r.c[j] > 1) {
        rep[Axiom::A1].pass = false;
        rep[Axiom::A1].witnesses.push_back("c(" + r.name + ",sigma" + std::to_string(j + 1) +
                                           ") = " + std::to_string(r.c[j]) + " > 1");
      } else if (r.c[j] == 1) {
        auto supp = support(sys.sigma[j]);
        bool simple = supp.size() == 1 && sys.sigma[j][supp[0]] == 1;
        if (!simple) {
          rep[Axiom::A1].pass = false;
          rep[Axiom::A1].witnesses.push_back("c(" + r.name + ",sigma" + std::to_string(j + 1) +
                                             ") = 1 but sigma" + std::to_string(j + 1) +
                                             " is not a simple root");
        }
      }
    }
  }

  // (A2)
  for (int alpha : simple_roots_in_sigma) {
    int col = sigma_pos[alpha];
    std::vector<const ARow*> a_alpha;
    for (const auto& r : sys.a_rows)
      if (r.c[col] == 1) a_alpha.push_back(&r);
    if (a_alpha.size() != 2) {
      rep[Axiom::A2].pass = false;
      rep[Axiom::A2].witnesses.push_back("card A(alpha" + std::to_string(alpha + 1) + ") = " +
                                         std::to_string(a_alpha.size()));
      continue;
    }
    auto cr = coroot_row(sys, alpha);
    for (size_t j = 0; j < sys.sigma.size(); ++j) {
      if (a_alpha[0]->c[j] + a_alpha[1]->c[j] != cr[j]) {
        rep[Axiom::A2].pass = false;
        rep[Axiom::A2].witnesses.push_back(
            "A(alpha" + std::to_string(alpha + 1) + ") rows sum to " +
            std::to_string(a_alpha[0]->c[j] + a_alpha[1]->c[j]) + " != " + std::to_string(cr[j]) +
            " at sigma" + std::to_string(j + 1));
        break;
      }
    }
  }

  // (A3)
  for (const auto& r : sys.a_rows) {
    bool flagged = false;
    for (int alpha : simple_roots_in_sigma)
      flagged = flagged || r.c[sigma_pos[alpha]] == 1;
    if (!flagged) {
      rep[Axiom::A3].pass = false;
      rep[Axiom::A3].witnesses.push_back(r.name + " lies in no A(alpha)");
    }
  }

  // (Sigma1)
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    if (!lattice_ok[j]) continue;
    auto supp = support(sys.sigma[j]);
    if (supp.size() != 1 || sys.sigma[j][supp[0]] != 2) continue;
    int alpha = supp[0];
    for (size_t k = 0; k < sys.sigma.size(); ++k) {
      if (k == j || !lattice_ok[k]) continue;
      int p = sys.rs.pairing(alpha, sys.sigma[k]);
      if (p % 2 != 0) {
        rep[Axiom::Sigma1].pass = false;
        rep[Axiom::Sigma1].witnesses.push_back("<alpha" + std::to_string(alpha + 1) +
                                               "^vee, sigma" + std::to_string(k + 1) + "> = " +
                                               std::to_string(p) + " is odd");
      } else if (p > 0) {
        rep[Axiom::Sigma1].pass = false;
        rep[Axiom::Sigma1].witnesses.push_back("<alpha" + std::to_string(alpha + 1) +
                                               "^vee, sigma" + std::to_string(k + 1) + "> = " +
                                               std::to_string(p) + " > 0");
      }
    }
  }

  // (Sigma2)
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (sys.rs.cartan(a, b) != 0) continue;
      Weight sum = unit(n, a);
      sum[b] = 1;
      bool in2sigma = false;  // vacuous over NS, kept for the literal condition
      for (const auto& s : sys.sigma) {
        Weight dbl = s;
        for (auto& x : dbl) x *= 2;
        if (dbl == sum) in2sigma = true;
      }
      if (!in_sigma(sys, sum) && !in2sigma) continue;
      for (size_t k = 0; k < sys.sigma.size(); ++k) {
        if (!lattice_ok[k]) continue;
        int pa = sys.rs.pairing(a, sys.sigma[k]);
        int pb = sys.rs.pairing(b, sys.sigma[k]);
        if (pa != pb) {
          rep[Axiom::Sigma2].pass = false;
          rep[Axiom::Sigma2].witnesses.push_back(
              "alpha" + std::to_string(a + 1) + " _|_ alpha" + std::to_string(b + 1) +
              " with alpha+beta spherical but pairings differ at sigma" + std::to_string(k + 1));
          break;
        }
      }
    }

  // (S)
  for (size_t j = 0; j < sys.sigma.size(); ++j) {
    if (!lattice_ok[j]) continue;
    if (support(sys.sigma[j]).empty()) continue;  // reported by independence
    auto m = match_spherical_root(sys.rs, sys.sigma[j], table);
    if (!m) {
      rep[Axiom::S].pass = false;
      rep[Axiom::S].witnesses.push_back("sigma" + std::to_string(j + 1) +
                                        " matches no rank-one entry");
      continue;
    }
    if (!axiom_S_holds(sys.rs, sys.sigma[j], sys.sp, table)) {
      rep[Axiom::S].pass = false;
      rep[Axiom::S].witnesses.push_back("sigma" + std::to_string(j + 1) + " (entry " +
                                        m->entry->name + ") is incompatible with sp");
    }
  }

  return rep;
}

ColorSet colors(const SphericalSystem& sys) {
  const int n = sys.rs.rank();
  ColorSet cs;
  auto sigma_pos = simple_sigma_positions(sys);
  std::set<int> sp(sys.sp.begin(), sys.sp.end());

  // a-colors: the A rows themselves
  for (size_t k = 0; k < sys.a_rows.size(); ++k) {
    Color c;
    c.kind = Color::A;
    c.a_index = (int)k;
    c.name = sys.a_rows[k].name;
    cs.colors.push_back(std::move(c));
  }

  // 2a-colors: alpha with 2*alpha in Sigma
  std::vector<int> half_sigma(n, 0);
  for (int i = 0; i < n; ++i) {
    Weight dbl(n, 0);
    dbl[i] = 2;
    if (in_sigma(sys, dbl)) {
      half_sigma[i] = 1;
      Color c;
      c.kind = Color::TwoA;
      c.roots = {i};
      c.name = "2a_" + std::to_string(i + 1);
      cs.colors.push_back(std::move(c));
    }
  }

  // b-colors, merged when alpha _|_ beta and alpha+beta in Sigma
  std::vector<int> broots;
  for (int i = 0; i < n; ++i)
    if (!sp.count(i) && sigma_pos[i] < 0 && !half_sigma[i]) broots.push_back(i);
  std::vector<int> uf(n, -1);
  for (int i : broots) uf[i] = i;
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (size_t p = 0; p < broots.size(); ++p)
    for (size_t q = p + 1; q < broots.size(); ++q) {
      int a = broots[p], b = broots[q];
      if (sys.rs.cartan(a, b) != 0) continue;
      Weight sum(n, 0);
      sum[a] = 1;
      sum[b] = 1;
      if (in_sigma(sys, sum)) uf[find(a)] = find(b);
    }
  std::map<int, std::vector<int>> classes;
  for (int i : broots) classes[find(i)].push_back(i);
  for (auto& [root, members] : classes) {
    std::sort(members.begin(), members.end());
    if (members.size() > 2)
      throw std::logic_error("b-color class of size > 2 (invalid system)");
    Color c;
    c.kind = Color::B;
    c.roots = members;
    c.name = "b";
    for (int i : members) c.name += "_" + std::to_string(i + 1);
    cs.colors.push_back(std::move(c));
  }

  // delta_of
  cs.delta_of.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (sp.count(i)) continue;
    if (sigma_pos[i] >= 0) {
      for (size_t k = 0; k < sys.a_rows.size(); ++k)
        if (sys.a_rows[k].c[sigma_pos[i]] == 1) cs.delta_of[i].push_back((int)k);
    } else {
      for (size_t k = 0; k < cs.colors.size(); ++k) {
        const Color& c = cs.colors[k];
        if (c.kind == Color::A) continue;
        if (std::find(c.roots.begin(), c.roots.end(), i) != c.roots.end())
          cs.delta_of[i].push_back((int)k);
      }
    }
  }

  // full Cartan pairing
  for (const auto& c : cs.colors) {
    std::vector<int> row(sys.sigma.size());
    if (c.kind == Color::A) {
      for (size_t j = 0; j < sys.sigma.size(); ++j) row[j] = sys.a_rows[c.a_index].c[j];
    } else if (c.kind == Color::TwoA) {
      for (size_t j = 0; j < sys.sigma.size(); ++j) {
        int p = sys.rs.pairing(c.roots[0], sys.sigma[j]);
        if (p % 2 != 0) throw std::logic_error("non-integral 2a pairing (invalid system)");
        row[j] = p / 2;
      }
    } else {
      for (size_t j = 0; j < sys.sigma.size(); ++j) {
        int p = sys.rs.pairing(c.roots[0], sys.sigma[j]);
        for (size_t t = 1; t < c.roots.size(); ++t)
          if (sys.rs.pairing(c.roots[t], sys.sigma[j]) != p)
            throw std::logic_error("b-class representatives disagree (invalid system)");
        row[j] = p;
      }
    }
    cs.c_full.push_back(std::move(row));
  }
  return cs;
}

int defect(const SphericalSystem& sys) {
  return (int)colors(sys).colors.size() - (int)sys.sigma.size();
}

}  // namespace wonder
