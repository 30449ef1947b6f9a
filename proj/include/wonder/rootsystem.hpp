#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wonder {

/// Integer coefficient vector over the simple roots of the ambient group.
using Weight = std::vector<int>;

/// One simple factor of the group, occupying the global simple-root indices
/// [offset, offset+rank).
struct Factor {
  char type = 'A';  // 'A'..'G'
  int rank = 0;
  int offset = 0;
};

/// A connected sub-diagram, typed by isomorphism class. `nodes` lists the
/// global indices in Bourbaki order for that type.
struct Component {
  char type = 'A';
  int rank = 0;
  std::vector<int> nodes;
};

struct group_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A product of simple root systems with its integer Cartan matrix,
/// Bourbaki-numbered within each factor. Immutable after construction.
class RootSystem {
 public:
  RootSystem() = default;  // the empty (rank-0) group

  /// Parses "A1", "B4", "A1xC3", ... (case-insensitive, optional blanks).
  /// Degenerate Bourbaki aliases are normalized: B1/C1 -> A1, C2 -> B2,
  /// D2 -> A1xA1, D3 -> A3; the index relabeling is recorded.
  static RootSystem parse(std::string_view text);

  /// Builds directly from a normalized factor list.
  static RootSystem from_factors(const std::vector<std::pair<char, int>>& factors);

  int rank() const { return n_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// a[i][j] = <alpha_i^vee, alpha_j>, 0-based.
  int cartan(int i, int j) const { return cartan_[i * n_ + j]; }

  /// <alpha_i^vee, w> = sum_j a[i][j] w_j.
  int pairing(int i, const Weight& w) const;

  int factor_of(int i) const { return factor_of_[i]; }

  /// Canonical text form, e.g. "A1xC3"; "-" for the empty group.
  std::string spec_string() const;

  /// Maps canonical index -> index in the user's input (differs from the
  /// identity only when parse() normalized a degenerate D/B/C alias).
  const std::vector<int>& input_relabel() const { return input_relabel_; }

  bool operator==(const RootSystem& o) const {
    return factorsEqual(o);
  }

 private:
  bool factorsEqual(const RootSystem& o) const {
    if (factors_.size() != o.factors_.size()) return false;
    for (size_t k = 0; k < factors_.size(); ++k)
      if (factors_[k].type != o.factors_[k].type || factors_[k].rank != o.factors_[k].rank)
        return false;
    return true;
  }
  void build();

  std::vector<Factor> factors_;
  int n_ = 0;
  std::vector<int> cartan_;     // dense n*n
  std::vector<int> factor_of_;  // index -> factor position
  std::vector<int> input_relabel_;
};

/// Indices of the nonzero coefficients of w.
std::vector<int> support(const Weight& w);

/// Union of the supports of a set of weights.
std::vector<int> support(const std::vector<Weight>& ws);

/// Connected components of the sub-diagram induced on `subset`, each typed
/// with an explicit Bourbaki relabeling. Deterministic order (by smallest
/// global index).
std::vector<Component> components(const RootSystem& rs, std::span<const int> subset);

/// All valid Bourbaki orderings of one component: the canonical one first,
/// then its images under the diagram automorphisms of the component.
std::vector<std::vector<int>> bourbaki_orderings(const RootSystem& rs, const Component& comp);

/// Root system of the sub-diagram on S' together with the total map
/// old index -> new index (-1 outside S').
std::pair<RootSystem, std::vector<int>> sub_root_system(const RootSystem& rs,
                                                        std::span<const int> subset);

/// All index permutations of the full diagram: per-factor automorphisms
/// composed with swaps of isomorphic factors.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

}  // namespace wonder
