#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonder/reduction.hpp"
#include "wonder/system.hpp"

namespace wonder {

struct EnumFilter {
  std::optional<bool> cuspidal;
  std::optional<bool> primitive;
  std::optional<bool> reductive;
  std::optional<bool> strict;
  std::optional<bool> spherically_closed;
  std::optional<bool> has_primitive_1comb;
  int max_sigma_height = 0;  // 0: whatever the table instantiates on the group
};

/// Total-order normal form of (sp, sigma, A rows) minimized over the
/// diagram automorphism group composed with row renaming. Equal keys mean
/// isomorphic systems.
struct CanonicalKey {
  std::vector<int> data;
  bool operator<(const CanonicalKey& o) const { return data < o.data; }
  bool operator==(const CanonicalKey& o) const { return data == o.data; }
  std::string str() const;
};

CanonicalKey canonical_form(const SphericalSystem& sys);

/// All weights matching a table entry on the group that satisfy axiom (S)
/// with the given parabolic set. Deterministic order (height, then lex).
std::vector<Weight> sigma_candidates(const RootSystem& rs, std::span<const int> sp,
                                     const RankOneTable& table);

/// Every valid spherical system on the group, one per canonical key,
/// satisfying the filter. Partitioned by the choice of parabolic set;
/// partitions run in parallel under OpenMP with a deterministic merge.
std::vector<SphericalSystem> enumerate_systems(const RootSystem& rs, const RankOneTable& table,
                                               const EnumFilter& filter = {},
                                               int max_colors = 20);

/// Serial reference for the enumeration above.
std::vector<SphericalSystem> enumerate_systems_serial(const RootSystem& rs,
                                                      const RankOneTable& table,
                                                      const EnumFilter& filter = {},
                                                      int max_colors = 20);

/// One partition of the raw stream: all valid systems with the given
/// parabolic set (bitmask), before deduplication and filtering.
std::vector<SphericalSystem> enumerate_partition(const RootSystem& rs, unsigned sp_mask,
                                                 const RankOneTable& table,
                                                 int max_sigma_height = 0);

}  // namespace wonder
