// wondersys: command-line driver for the spherical-system engine.
//
// Exit codes: 0 success, 1 domain-level failure (invalid system,
// non-distinguished subset), 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "wonder/enumerate.hpp"
#include "wonder/format.hpp"
#include "wonder/quotient.hpp"
#include "wonder/reduction.hpp"
#include "wonder/render.hpp"

using namespace wonder;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RankOneTable load_table_file(const std::string& path) {
  if (path.empty()) return RankOneTable::builtin();
  return RankOneTable::load(read_file(path));
}

SphericalSystem load_system(const std::string& path) {
  return parse_system(read_file(path));
}

std::vector<int> parse_color_names(const ColorSet& cs, const std::string& list) {
  std::vector<int> out;
  if (list.empty()) return out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int c = cs.find(tok);
    if (c < 0) throw std::runtime_error("unknown color '" + tok + "'");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string subset_names(const ColorSet& cs, const std::vector<int>& idxs) {
  std::string s = "{";
  for (size_t k = 0; k < idxs.size(); ++k) {
    if (k) s += ",";
    s += cs.colors[idxs[k]].name;
  }
  return s + "}";
}

int cmd_validate(const std::string& file, const RankOneTable& table) {
  auto sys = load_system(file);
  auto rep = validate(sys, table);
  std::cout << rep.summary();
  return rep.valid() ? 0 : 1;
}

int cmd_classify(const std::string& file, const RankOneTable& table, int max_colors) {
  auto sys = load_system(file);
  auto rep = validate(sys, table);
  if (!rep.valid()) {
    std::cout << rep.summary();
    return 1;
  }
  ColorSet cs = colors(sys);

  std::cout << "cuspidal: " << (is_cuspidal(sys) ? "true" : "false") << "\n";
  auto dec = find_decomposition(sys, cs, table, max_colors);
  std::cout << "decomposable: " << (dec ? "true" : "false") << "\n";

  std::string combs_str;
  for (const auto& c : positive_combs(sys)) {
    if (!combs_str.empty()) combs_str += " ";
    combs_str += sys.a_rows[c.a_index].name + "(n=" + std::to_string(c.n) + ")";
  }
  std::cout << "combs: " << (combs_str.empty() ? "-" : combs_str) << "\n";

  std::string tails_str;
  for (const auto& t : find_tails(sys, cs, table, max_colors)) {
    if (!tails_str.empty()) tails_str += " ";
    tails_str += tail_kind_name(t.kind);
    if (t.m) tails_str += "(" + std::to_string(t.m) + ")";
  }
  std::cout << "tails: " << (tails_str.empty() ? "-" : tails_str) << "\n";

  std::cout << "primitive: " << (is_primitive(sys, table, max_colors) ? "true" : "false") << "\n";
  std::string p1c;
  for (const auto& c : primitive_1combs(sys, table, max_colors)) {
    if (!p1c.empty()) p1c += " ";
    p1c += sys.a_rows[c.a_index].name;
  }
  std::cout << "primitive-1-combs: " << (p1c.empty() ? "-" : p1c) << "\n";
  std::cout << "defect: " << defect(sys) << "\n";

  auto red = is_reductive_system(sys);
  std::cout << "reductive: " << (red ? "true" : "false") << "\n";
  std::cout << "strict: " << (is_strict(sys, table) ? "true" : "false") << "\n";
  std::cout << "spherically-closed: " << (is_spherically_closed(sys, table) ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_quotients(const std::string& file, const std::string& by, bool have_by,
                  const RankOneTable& table, int max_colors) {
  auto sys = load_system(file);
  auto rep = validate(sys, table);
  if (!rep.valid()) {
    std::cout << rep.summary();
    return 1;
  }
  ColorSet cs = colors(sys);
  if (have_by) {
    std::vector<int> subset;
    try {
      subset = parse_color_names(cs, by);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    if (!is_distinguished(cs, subset)) {
      std::cout << "subset " << subset_names(cs, subset) << " is not distinguished\n";
      return 1;
    }
    auto qr = quotient_by(sys, cs, subset, table);
    std::cout << "# quotient by " << subset_names(cs, subset) << "\n";
    for (size_t j = 0; j < qr.sigma_expansion.size(); ++j) {
      std::cout << "# sigma'" << j + 1 << " =";
      bool first = true;
      for (size_t i = 0; i < qr.sigma_expansion[j].size(); ++i)
        if (qr.sigma_expansion[j][i]) {
          std::cout << (first ? " " : " + ") << qr.sigma_expansion[j][i] << "*s" << i + 1;
          first = false;
        }
      if (first) std::cout << " 0";
      std::cout << "\n";
    }
    ColorSet qcs = colors(qr.quotient);
    for (auto [oldc, newc] : qr.surviving_colors)
      std::cout << "# surviving: " << cs.colors[oldc].name << " -> " << qcs.colors[newc].name
                << "\n";
    std::cout << emit_system(qr.quotient);
    return 0;
  }
  auto subsets = enumerate_distinguished(cs, max_colors);
  std::cout << "# distinguished subsets: " << subsets.size() << "\n";
  for (const auto& d : subsets) {
    auto qr = quotient_by(sys, cs, d.color_indices, table);
    std::cout << subset_names(cs, d.color_indices) << " -> rank "
              << qr.quotient.sigma.size() << "\n";
  }
  return 0;
}

int cmd_localize(const std::string& file, const std::string& roots, const RankOneTable& table) {
  auto sys = load_system(file);
  auto rep = validate(sys, table);
  if (!rep.valid()) {
    std::cout << rep.summary();
    return 1;
  }
  std::vector<int> subset;
  std::stringstream ss(roots);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int idx = std::stoi(tok);
    if (idx < 1 || idx > sys.rs.rank()) throw std::runtime_error("root index out of range");
    subset.push_back(idx - 1);
  }
  std::cout << emit_system(localize(sys, subset, table));
  return 0;
}

int cmd_enumerate(const std::string& group, const EnumFilter& filter, const RankOneTable& table,
                  int max_colors, int jobs) {
  auto rs = RootSystem::parse(group);
  if (rs.rank() > 8) throw std::runtime_error("enumeration bound: rank up to 8");
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
  auto systems = enumerate_systems(rs, table, filter, max_colors);
  for (size_t k = 0; k < systems.size(); ++k) {
    if (k) std::cout << "\n";
    std::cout << "# canon: " << canonical_form(systems[k]).str() << "\n";
    std::cout << emit_system(systems[k]);
  }
  std::cout << "# total: " << systems.size() << "\n";
  return 0;
}

int cmd_render(const std::string& file, const RankOneTable& table) {
  auto sys = load_system(file);
  auto rep = validate(sys, table);
  if (!rep.valid()) {
    std::cout << rep.summary();
    return 1;
  }
  std::cout << render_system(sys);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wondersys: exact engine for spherical systems on Dynkin diagrams"};
  app.require_subcommand(1);

  std::string table_file;
  int max_colors = 20;
  app.add_option("--table", table_file, "rank-one table file overlay");
  app.add_option("--max-colors", max_colors, "bound for distinguished-subset scans");

  std::string file, by, roots, group;
  bool have_by = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms of a system file");
  validate_cmd->add_option("file", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "reduction-theoretic report");
  classify_cmd->add_option("file", file)->required();

  auto* quotients_cmd = app.add_subcommand("quotients", "list or compute quotients");
  quotients_cmd->add_option("file", file)->required();
  auto* by_opt = quotients_cmd->add_option("--by", by, "comma-separated color names");

  auto* localize_cmd = app.add_subcommand("localize", "restrict to a subset of simple roots");
  localize_cmd->add_option("file", file)->required();
  localize_cmd->add_option("--roots", roots, "comma-separated 1-based indices")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all systems on a group");
  enumerate_cmd->add_option("--group", group)->required();
  int jobs = 0;
  enumerate_cmd->add_option("--jobs", jobs, "worker threads for the partition scan");
  bool f_cuspidal = false, f_primitive = false, f_reductive = false, f_strict = false,
       f_sclosed = false, f_p1c = false;
  enumerate_cmd->add_flag("--cuspidal", f_cuspidal);
  enumerate_cmd->add_flag("--primitive", f_primitive);
  enumerate_cmd->add_flag("--reductive", f_reductive);
  enumerate_cmd->add_flag("--strict", f_strict);
  enumerate_cmd->add_flag("--spherically-closed", f_sclosed);
  enumerate_cmd->add_flag("--primitive-1-comb", f_p1c);
  int max_height = 0;
  enumerate_cmd->add_option("--max-height", max_height, "cap on sigma coefficient sums");

  auto* render_cmd = app.add_subcommand("render", "annotated text diagram");
  render_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
    auto table = load_table_file(table_file);
    have_by = by_opt->count() > 0;

    if (*validate_cmd) return cmd_validate(file, table);
    if (*classify_cmd) return cmd_classify(file, table, max_colors);
    if (*quotients_cmd) return cmd_quotients(file, by, have_by, table, max_colors);
    if (*localize_cmd) return cmd_localize(file, roots, table);
    if (*enumerate_cmd) {
      EnumFilter filter;
      if (f_cuspidal) filter.cuspidal = true;
      if (f_primitive) filter.primitive = true;
      if (f_reductive) filter.reductive = true;
      if (f_strict) filter.strict = true;
      if (f_sclosed) filter.spherically_closed = true;
      if (f_p1c) filter.has_primitive_1comb = true;
      filter.max_sigma_height = max_height;
      return cmd_enumerate(group, filter, table, max_colors, jobs);
    }
    if (*render_cmd) return cmd_render(file, table);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const format_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const table_parse_error& e) {
    std::cerr << "table error: " << e.what() << "\n";
    return 2;
  } catch (const group_parse_error& e) {
    std::cerr << "group error: " << e.what() << "\n";
    return 2;
  } catch (const bound_exceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
