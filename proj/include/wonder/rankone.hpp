#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wonder/rootsystem.hpp"

namespace wonder {

/// Compatibility rule between a rank-one spherical root and the parabolic
/// set. The default rule is computed from the matched weight itself:
/// must_contain = { alpha in supp : <alpha^vee, sigma> = 0 }, must_avoid =
/// the rest of the support, roots outside the support unconstrained.
/// Explicit rules (from a table file) give 1-based positions along the
/// matched Bourbaki chain.
struct SpRule {
  bool use_default = true;
  // default rule with an unconstrained chain end: the short ends of the
  // b(m)/c(m) families admit rank-1 varieties with and without the end in
  // the parabolic set
  bool first_free = false;
  bool last_free = false;
  std::vector<int> contain_pos;  // 1-based chain positions
  std::vector<int> avoid_pos;
};

enum class CoeffPattern { Ones, Twos, OneTwosOne, TwosOneOne, Explicit };

/// One family of the rank-1 spherical-root table.
struct RankOneEntry {
  std::string name;
  char support_type = 'A';
  bool ortho_pair = false;  // support is two orthogonal simple roots
  int min_rank = 1;
  int max_rank = 1;
  CoeffPattern pattern = CoeffPattern::Ones;
  std::vector<int> explicit_coeffs;
  SpRule sp_rule;

  /// Coefficients along a Bourbaki chain of the given length.
  std::vector<int> coeffs(int m) const;
};

struct table_parse_error : std::runtime_error {
  int line;
  table_parse_error(int l, const std::string& what)
      : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}
};

struct RankOneMatch {
  const RankOneEntry* entry;
  std::vector<int> chain;  // Bourbaki-ordered global indices of the support
};

class RankOneTable {
 public:
  /// The entries whose formulas the classification prints on classical
  /// supports. Exceptional supports (B3, F4, G2 families) are not built in;
  /// they are loaded from a table file.
  static RankOneTable builtin();

  /// Builtin entries merged with (and overridden by) the file entries.
  /// Line format:
  ///   entry <name> support=<TYPE>(<min>..<max>) coeffs=<list|keyword>
  ///         sp=<default | contain:{i,..} avoid:{i,..}>
  static RankOneTable load(std::string_view text);

  const std::vector<RankOneEntry>& entries() const { return entries_; }
  const RankOneEntry* find(std::string_view name) const;

 private:
  std::vector<RankOneEntry> entries_;
};

/// The unique table entry whose instantiated template on the support of w
/// equals w, with the matched chain; nullopt when none matches. Matching is
/// up to the diagram symmetry of the support component.
std::optional<RankOneMatch> match_spherical_root(const RootSystem& rs, const Weight& w,
                                                 const RankOneTable& table);

/// Axiom (S) test: w matches some entry and the entry's rule accepts sp.
bool axiom_S_holds(const RootSystem& rs, const Weight& w, std::span<const int> sp,
                   const RankOneTable& table);

/// Whether a rank-one variety with spherical root 2*sigma and the same
/// parabolic set exists, per the table.
bool double_exists(const RootSystem& rs, const Weight& sigma, std::span<const int> sp,
                   const RankOneTable& table);

/// Default-rule sets for an already matched weight: (must_contain, must_avoid)
/// as global indices.
std::pair<std::vector<int>, std::vector<int>> sp_rule_sets(const RootSystem& rs,
                                                           const Weight& w,
                                                           const RankOneMatch& m);

}  // namespace wonder
