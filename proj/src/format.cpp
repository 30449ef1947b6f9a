#include "wonder/format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wonder {

std::string emit_system(const SphericalSystem& sys) {
  std::ostringstream os;
  os << "group: " << sys.rs.spec_string() << "\n";
  os << "sp: ";
  if (sys.sp.empty()) os << "-";
  else
    for (size_t k = 0; k < sys.sp.size(); ++k) {
      if (k) os << ",";
      os << sys.sp[k] + 1;
    }
  os << "\n";
  os << "sigma:\n";
  for (const auto& w : sys.sigma) {
    os << " ";
    for (int x : w) os << " " << x;
    os << "\n";
  }
  os << "A:\n";
  for (const auto& r : sys.a_rows) {
    os << "  " << r.name << ":";
    for (int x : r.c) os << " " << x;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string strip(std::string s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_ints(const std::string& s, int line) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (...) {
      throw format_error(line, "expected an integer, got '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

SphericalSystem parse_system(std::string_view text) {
  SphericalSystem sys;
  bool have_group = false, have_sp = false;
  enum class Block { None, Sigma, Arows } block = Block::None;
  std::vector<std::string> sp_tokens;

  std::stringstream ss{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = strip(raw);
    if (s.empty()) continue;

    if (s.rfind("group:", 0) == 0) {
      if (have_group) throw format_error(line, "duplicate group line");
      try {
        sys.rs = RootSystem::parse(strip(s.substr(6)));
      } catch (const group_parse_error& e) {
        throw format_error(line, e.what());
      }
      have_group = true;
      block = Block::None;
      continue;
    }
    if (s.rfind("sp:", 0) == 0) {
      if (!have_group) throw format_error(line, "sp before group");
      if (have_sp) throw format_error(line, "duplicate sp line");
      std::string v = strip(s.substr(3));
      if (v != "-") {
        std::stringstream vs(v);
        std::string tok;
        while (std::getline(vs, tok, ',')) {
          tok = strip(tok);
          int idx = 0;
          try {
            idx = std::stoi(tok);
          } catch (...) {
            throw format_error(line, "bad sp index '" + tok + "'");
          }
          if (idx < 1 || idx > sys.rs.rank()) throw format_error(line, "sp index out of range");
          sys.sp.push_back(idx - 1);
        }
      }
      std::sort(sys.sp.begin(), sys.sp.end());
      sys.sp.erase(std::unique(sys.sp.begin(), sys.sp.end()), sys.sp.end());
      have_sp = true;
      block = Block::None;
      continue;
    }
    if (s == "sigma:") {
      if (!have_group) throw format_error(line, "sigma before group");
      block = Block::Sigma;
      continue;
    }
    if (s == "A:") {
      if (!have_group) throw format_error(line, "A before group");
      block = Block::Arows;
      continue;
    }

    if (block == Block::Sigma) {
      auto vals = parse_ints(s, line);
      if ((int)vals.size() != sys.rs.rank())
        throw format_error(line, "sigma row needs " + std::to_string(sys.rs.rank()) +
                                     " integers, got " + std::to_string(vals.size()));
      sys.sigma.push_back(std::move(vals));
      continue;
    }
    if (block == Block::Arows) {
      size_t colon = s.find(':');
      if (colon == std::string::npos) throw format_error(line, "A row needs 'name: values'");
      std::string name = strip(s.substr(0, colon));
      if (name.empty() || name.find_first_of(" \t,:#") != std::string::npos)
        throw format_error(line, "bad A row name");
      auto vals = parse_ints(s.substr(colon + 1), line);
      if (vals.size() != sys.sigma.size())
        throw format_error(line, "A row needs " + std::to_string(sys.sigma.size()) +
                                     " integers, got " + std::to_string(vals.size()));
      sys.a_rows.push_back({std::move(name), std::move(vals)});
      continue;
    }
    throw format_error(line, "unexpected content '" + s + "'");
  }
  if (!have_group) throw format_error(line, "missing group line");
  if (!have_sp) throw format_error(line, "missing sp line");
  std::set<std::string> names;
  for (const auto& r : sys.a_rows)
    if (!names.insert(r.name).second) throw format_error(line, "duplicate A row name " + r.name);
  return sys;
}

}  // namespace wonder
