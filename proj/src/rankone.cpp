#include "wonder/rankone.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wonder {

std::vector<int> RankOneEntry::coeffs(int m) const {
  switch (pattern) {
    case CoeffPattern::Ones:
      return std::vector<int>(m, 1);
    case CoeffPattern::Twos:
      return std::vector<int>(m, 2);
    case CoeffPattern::OneTwosOne: {
      std::vector<int> c(m, 2);
      c.front() = 1;
      c.back() = 1;
      return c;
    }
    case CoeffPattern::TwosOneOne: {
      std::vector<int> c(m, 2);
      c[m - 1] = 1;
      c[m - 2] = 1;
      return c;
    }
    case CoeffPattern::Explicit:
      return explicit_coeffs;
  }
  return {};
}

RankOneTable RankOneTable::builtin() {
  RankOneTable t;
  auto add = [&](std::string name, char type, int lo, int hi, CoeffPattern p) {
    RankOneEntry e;
    e.name = std::move(name);
    e.support_type = type;
    e.min_rank = lo;
    e.max_rank = hi;
    e.pattern = p;
    t.entries_.push_back(std::move(e));
  };
  auto add_free_end = [&](std::string name, char type, int lo, int hi, CoeffPattern p,
                          bool first, bool last) {
    RankOneEntry e;
    e.name = std::move(name);
    e.support_type = type;
    e.min_rank = lo;
    e.max_rank = hi;
    e.pattern = p;
    e.sp_rule.first_free = first;
    e.sp_rule.last_free = last;
    t.entries_.push_back(std::move(e));
  };
  add("a1", 'A', 1, 1, CoeffPattern::Ones);
  add("2a1", 'A', 1, 1, CoeffPattern::Twos);
  {
    RankOneEntry e;
    e.name = "aa";
    e.ortho_pair = true;
    e.min_rank = e.max_rank = 2;
    e.pattern = CoeffPattern::Ones;
    t.entries_.push_back(std::move(e));
  }
  add("a(n)", 'A', 2, 64, CoeffPattern::Ones);
  add("d3", 'A', 3, 3, CoeffPattern::OneTwosOne);
  add_free_end("b(m)", 'B', 2, 64, CoeffPattern::Ones, false, true);
  add("2b(m)", 'B', 2, 64, CoeffPattern::Twos);
  // the C2 instance coincides with b(2) and the D2/D3 instances with
  // aa/d3 under component normalization, hence the rank floors
  add_free_end("c(m)", 'C', 3, 64, CoeffPattern::OneTwosOne, true, false);
  add("d(m)", 'D', 4, 64, CoeffPattern::TwosOneOne);
  return t;
}

const RankOneEntry* RankOneTable::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::string strip(std::string s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_index_set(const std::string& body, int line) {
  // "{1,3}" or "{}"
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw table_parse_error(line, "expected {i,..} index set");
  std::vector<int> out;
  std::string inner = body.substr(1, body.size() - 2);
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = strip(tok);
    if (tok.empty()) throw table_parse_error(line, "empty index in set");
    out.push_back(std::stoi(tok));
    if (out.back() < 1) throw table_parse_error(line, "chain positions are 1-based");
  }
  return out;
}

RankOneEntry parse_entry_line(const std::string& line_text, int line) {
  std::stringstream ss(line_text);
  std::string kw, name;
  ss >> kw >> name;
  if (kw != "entry" || name.empty())
    throw table_parse_error(line, "expected: entry <name> support=... coeffs=... sp=...");
  RankOneEntry e;
  e.name = name;
  bool have_support = false, have_coeffs = false, have_sp = false;
  std::string field;
  // sp=contain:{..} avoid:{..} spans two whitespace-separated tokens
  std::vector<std::string> toks;
  while (ss >> field) toks.push_back(field);
  for (size_t i = 0; i < toks.size(); ++i) {
    const std::string& f = toks[i];
    if (f.rfind("support=", 0) == 0) {
      std::string v = f.substr(8);
      // TYPE(min..max)
      if (v.size() < 4 || v[1] != '(' || v.back() != ')')
        throw table_parse_error(line, "support must be TYPE(min..max)");
      char ty = (char)std::toupper((unsigned char)v[0]);
      if (ty < 'A' || ty > 'G') throw table_parse_error(line, "bad support type");
      std::string range = v.substr(2, v.size() - 3);
      size_t dots = range.find("..");
      if (dots == std::string::npos) throw table_parse_error(line, "support range needs '..'");
      e.support_type = ty;
      e.min_rank = std::stoi(range.substr(0, dots));
      e.max_rank = std::stoi(range.substr(dots + 2));
      if (e.min_rank < 1 || e.max_rank < e.min_rank)
        throw table_parse_error(line, "bad support rank range");
      have_support = true;
    } else if (f.rfind("coeffs=", 0) == 0) {
      std::string v = f.substr(7);
      if (v == "ones") e.pattern = CoeffPattern::Ones;
      else if (v == "twos") e.pattern = CoeffPattern::Twos;
      else if (v == "one-twos-one") e.pattern = CoeffPattern::OneTwosOne;
      else if (v == "twos-one-one") e.pattern = CoeffPattern::TwosOneOne;
      else {
        e.pattern = CoeffPattern::Explicit;
        std::stringstream cs(v);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
          tok = strip(tok);
          if (tok.empty()) throw table_parse_error(line, "empty coefficient");
          e.explicit_coeffs.push_back(std::stoi(tok));
          if (e.explicit_coeffs.back() < 0)
            throw table_parse_error(line, "coefficients must be nonnegative");
        }
        if (e.explicit_coeffs.empty()) throw table_parse_error(line, "empty coeffs");
      }
      have_coeffs = true;
    } else if (f == "sp=default") {
      e.sp_rule.use_default = true;
      have_sp = true;
    } else if (f.rfind("sp=contain:", 0) == 0) {
      e.sp_rule.use_default = false;
      e.sp_rule.contain_pos = parse_index_set(f.substr(11), line);
      if (i + 1 >= toks.size() || toks[i + 1].rfind("avoid:", 0) != 0)
        throw table_parse_error(line, "explicit sp rule needs avoid:{..}");
      e.sp_rule.avoid_pos = parse_index_set(toks[i + 1].substr(6), line);
      ++i;
      have_sp = true;
    } else {
      throw table_parse_error(line, "unknown field '" + f + "'");
    }
  }
  if (!have_support || !have_coeffs || !have_sp)
    throw table_parse_error(line, "entry needs support=, coeffs= and sp=");
  if (e.pattern == CoeffPattern::Explicit &&
      (int)e.explicit_coeffs.size() != e.min_rank)
    throw table_parse_error(line, "explicit coeffs need min==max==len");
  if (e.pattern == CoeffPattern::Explicit && e.min_rank != e.max_rank)
    throw table_parse_error(line, "explicit coeffs need a fixed rank");
  return e;
}

}  // namespace

RankOneTable RankOneTable::load(std::string_view text) {
  RankOneTable t = builtin();
  std::set<std::string> file_names;
  std::stringstream ss{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = strip(raw);
    if (raw.empty()) continue;
    RankOneEntry e = parse_entry_line(raw, line);
    if (!file_names.insert(e.name).second)
      throw table_parse_error(line, "duplicate entry name '" + e.name + "'");
    bool replaced = false;
    for (auto& b : t.entries_)
      if (b.name == e.name) {
        b = e;
        replaced = true;
        break;
      }
    if (!replaced) t.entries_.push_back(std::move(e));
  }
  return t;
}

namespace {

bool try_instantiate(const RankOneEntry& e, const std::vector<std::vector<int>>& orderings,
                     const Weight& w, std::vector<int>& chain_out) {
  int m = (int)orderings[0].size();
  auto tmpl = e.coeffs(m);
  for (const auto& ord : orderings) {
    bool ok = true;
    for (int p = 0; p < m && ok; ++p) ok = w[ord[p]] == tmpl[p];
    if (ok) {
      chain_out = ord;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<RankOneMatch> match_spherical_root(const RootSystem& rs, const Weight& w,
                                                 const RankOneTable& table) {
  auto supp = support(w);
  if (supp.empty()) return std::nullopt;
  auto comps = components(rs, supp);

  if (comps.size() == 2 && comps[0].rank == 1 && comps[1].rank == 1) {
    int i = comps[0].nodes[0], j = comps[1].nodes[0];
    if (w[i] == 1 && w[j] == 1) {
      for (const auto& e : table.entries())
        if (e.ortho_pair) return RankOneMatch{&e, {i, j}};
    }
    return std::nullopt;
  }
  if (comps.size() != 1) return std::nullopt;

  const Component& c = comps[0];
  auto ords = bourbaki_orderings(rs, c);
  for (const auto& e : table.entries()) {
    if (e.ortho_pair) continue;
    if (e.support_type != c.type) continue;
    if (c.rank < e.min_rank || c.rank > e.max_rank) continue;
    std::vector<int> chain;
    if (try_instantiate(e, ords, w, chain)) return RankOneMatch{&e, chain};
  }
  return std::nullopt;
}

std::pair<std::vector<int>, std::vector<int>> sp_rule_sets(const RootSystem& rs,
                                                           const Weight& w,
                                                           const RankOneMatch& m) {
  std::vector<int> contain, avoid;
  if (m.entry->sp_rule.use_default) {
    int free_last = m.entry->sp_rule.last_free ? m.chain.back() : -1;
    int free_first = m.entry->sp_rule.first_free ? m.chain.front() : -1;
    for (int i : support(w)) {
      if (i == free_last || i == free_first) continue;
      if (rs.pairing(i, w) == 0) contain.push_back(i);
      else avoid.push_back(i);
    }
  } else {
    for (int pos : m.entry->sp_rule.contain_pos) {
      if (pos > (int)m.chain.size()) throw std::logic_error("sp rule position beyond chain");
      contain.push_back(m.chain[pos - 1]);
    }
    for (int pos : m.entry->sp_rule.avoid_pos) {
      if (pos > (int)m.chain.size()) throw std::logic_error("sp rule position beyond chain");
      avoid.push_back(m.chain[pos - 1]);
    }
  }
  std::sort(contain.begin(), contain.end());
  std::sort(avoid.begin(), avoid.end());
  return {contain, avoid};
}

bool axiom_S_holds(const RootSystem& rs, const Weight& w, std::span<const int> sp,
                   const RankOneTable& table) {
  auto m = match_spherical_root(rs, w, table);
  if (!m) return false;
  auto [contain, avoid] = sp_rule_sets(rs, w, *m);
  std::set<int> sps(sp.begin(), sp.end());
  for (int i : contain)
    if (!sps.count(i)) return false;
  for (int i : avoid)
    if (sps.count(i)) return false;
  return true;
}

bool double_exists(const RootSystem& rs, const Weight& sigma, std::span<const int> sp,
                   const RankOneTable& table) {
  Weight dbl(sigma);
  for (auto& x : dbl) x *= 2;
  return axiom_S_holds(rs, dbl, sp, table);
}

}  // namespace wonder
