#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wonder/feasibility.hpp"
#include "wonder/system.hpp"

namespace wonder {

struct bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistinguishedSubset {
  std::vector<int> color_indices;      // sorted
  std::vector<Rational> certificate;   // positive weights, one per color
};

/// Exact feasibility test: positive rational weights on the subset making
/// every Sigma-sum nonnegative. The empty subset is vacuously distinguished.
std::optional<std::vector<Rational>> is_distinguished(const ColorSet& cs,
                                                      std::span<const int> subset);

/// All distinguished subsets of the color set, by exhaustive scan in
/// ascending bitmask order. Parallel over subset ranges when OpenMP is
/// enabled; output order is independent of the thread count.
std::vector<DistinguishedSubset> enumerate_distinguished(const ColorSet& cs,
                                                         int max_colors = 20);

/// Serial reference for the scan above.
std::vector<DistinguishedSubset> enumerate_distinguished_serial(const ColorSet& cs,
                                                                int max_colors = 20);

/// Minimal generators (Hilbert basis) of { x in N^r : A x = 0 }, by
/// completion from the unit vectors. Exact integers; lexicographic order.
std::vector<std::vector<int>> monoid_basis(const std::vector<std::vector<int>>& a, int r);

struct QuotientResult {
  SphericalSystem quotient;
  std::vector<std::vector<int>> sigma_expansion;     // new sigma over old Sigma
  std::vector<std::pair<int, int>> surviving_colors; // old color -> new color
};

/// Quotient of the system by a distinguished subset: the free-monoid basis
/// killed by the subset, the induced parabolic set and A rows, validated as
/// a spherical system. Freeness is asserted by unique decomposition up to
/// three times the maximal basis height.
QuotientResult quotient_by(const SphericalSystem& sys, const ColorSet& cs,
                           std::span<const int> subset, const RankOneTable& table);

enum class DefectRelation { Higher, Constant, Lower };

struct QuotientClass {
  bool minimal = false;
  bool essential = false;
  DefectRelation defect_relation = DefectRelation::Constant;
  bool rank0 = false;
};

QuotientClass classify_quotient(const SphericalSystem& sys, const ColorSet& cs,
                                std::span<const int> subset, const RankOneTable& table);

}  // namespace wonder
