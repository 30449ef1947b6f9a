#include "wonder/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wonder {

namespace {

// chain layout per factor: node labels with edge glyphs between them.
// The branch node of D/E factors goes on a line above its attachment.
struct FactorLayout {
  std::string branch_line;
  std::string bar_line;
  std::string chain_line;
};

std::string node_label(int global) { return "(" + std::to_string(global + 1) + ")"; }

std::string edge_glyph(const RootSystem& rs, int i, int j) {
  int a = rs.cartan(i, j), b = rs.cartan(j, i);
  int mult = a * b;
  if (mult == 1) return "---";
  // the arrow points at the short root (the one whose row carries the -2/-3)
  bool right_short = b < a;
  if (mult == 2) return right_short ? "=>=" : "=<=";
  return right_short ? "=>>=" : "=<<=";
}

FactorLayout layout_factor(const RootSystem& rs, const Factor& f) {
  FactorLayout out;
  // main chain: all roots except the branch node of D/E types
  std::vector<int> chain;
  int branch = -1, attach = -1;
  if (f.type == 'D' && f.rank >= 4) {
    for (int p = 0; p < f.rank; ++p)
      if (p != f.rank - 1) chain.push_back(f.offset + p);
    branch = f.offset + f.rank - 1;
    attach = f.offset + f.rank - 3;
  } else if (f.type == 'E') {
    chain.push_back(f.offset + 0);
    for (int p = 2; p < f.rank; ++p) chain.push_back(f.offset + p);
    branch = f.offset + 1;
    attach = f.offset + 3;
  } else {
    for (int p = 0; p < f.rank; ++p) chain.push_back(f.offset + p);
  }

  std::vector<size_t> starts;
  for (size_t k = 0; k < chain.size(); ++k) {
    starts.push_back(out.chain_line.size());
    out.chain_line += node_label(chain[k]);
    if (k + 1 < chain.size()) out.chain_line += edge_glyph(rs, chain[k], chain[k + 1]);
  }
  if (branch >= 0) {
    size_t pos = 0;
    for (size_t k = 0; k < chain.size(); ++k)
      if (chain[k] == attach) pos = starts[k];
    size_t mid = pos + 1;  // the digit of the attachment label
    out.bar_line = std::string(mid, ' ') + "|";
    out.branch_line = std::string(pos, ' ') + node_label(branch);
  }
  return out;
}

}  // namespace

std::string render_system(const SphericalSystem& sys) {
  std::ostringstream os;
  os << "group: " << sys.rs.spec_string() << "\n";
  for (const auto& f : sys.rs.factors()) {
    FactorLayout l = layout_factor(sys.rs, f);
    if (!l.branch_line.empty()) os << l.branch_line << "\n" << l.bar_line << "\n";
    os << l.chain_line << "\n";
  }
  if (sys.rs.rank() == 0) os << "(empty group)\n";

  ColorSet cs = colors(sys);
  std::set<int> sp(sys.sp.begin(), sys.sp.end());
  for (int i = 0; i < sys.rs.rank(); ++i) {
    os << "root " << i + 1 << ":";
    if (sp.count(i)) os << " p";
    std::string sig;
    for (size_t j = 0; j < sys.sigma.size(); ++j)
      if (sys.sigma[j][i] != 0) {
        if (!sig.empty()) sig += " ";
        sig += "s" + std::to_string(j + 1);
      }
    if (!sig.empty()) os << " sigma[" << sig << "]";
    std::string del;
    for (int c : cs.delta_of[i]) {
      if (!del.empty()) del += " ";
      del += cs.colors[c].name;
    }
    if (!del.empty()) os << " delta[" << del << "]";
    os << "\n";
  }
  os << "sigma:\n";
  for (size_t j = 0; j < sys.sigma.size(); ++j)
    os << "  s" << j + 1 << " = " << weight_str(sys.sigma[j]) << "\n";
  return os.str();
}

}  // namespace wonder
