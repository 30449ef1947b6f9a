#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wonder/quotient.hpp"
#include "wonder/system.hpp"

namespace wonder {

/// Restriction of the system to the spherical roots supported in S', over
/// the sub root system. Throws on validation failure (a bug signal, never
/// expected on valid input).
SphericalSystem localize(const SphericalSystem& sys, std::span<const int> subset,
                         const RankOneTable& table);

/// supp Sigma = S.
bool is_cuspidal(const SphericalSystem& sys);

/// A pair of nonempty distinguished subsets whose induced parabolic roots
/// are orthogonal and whose quotient sigmas jointly cover Sigma; first
/// found in deterministic order. Rank-0 systems decompose vacuously and
/// return nullopt.
std::optional<std::pair<DistinguishedSubset, DistinguishedSubset>> find_decomposition(
    const SphericalSystem& sys, const ColorSet& cs, const RankOneTable& table,
    int max_colors = 20);

struct PositiveComb {
  int a_index;               // row position in sys.a_rows
  int n;                     // card S_D
  std::vector<int> s_d;      // simple spherical roots pairing to 1
};

/// Elements of A pairing nonnegatively against all of Sigma.
std::vector<PositiveComb> positive_combs(const SphericalSystem& sys);

/// The comb split along a positive n-comb (n > 1): one system per root of
/// S_D, each keeping only that root among the comb's simple roots. Each
/// result validates and carries a positive 1-comb at its root.
std::vector<SphericalSystem> comb_split(const SphericalSystem& sys, const PositiveComb& comb,
                                        const RankOneTable& table);

/// S_D does not meet the support of the non-simple spherical roots; the
/// quotient by {D} is then a projective fibration.
bool comb_fibration_applies(const SphericalSystem& sys, const PositiveComb& comb);

enum class TailKind { B, TwoB, C, D, AaAa, D3D3, D5D5, TwoATwoA };
const char* tail_kind_name(TailKind k);

struct Tail {
  TailKind kind;
  int m = 0;                      // parameter for b/2b/c/d kinds
  int factor = 0;                 // which factor of S carries the pattern
  std::vector<int> tilde_sigma;   // positions into sys.sigma
  DistinguishedSubset witness;    // Sigma/witness == tilde_sigma
};

/// All tails: boundary patterns on one connected component of S together
/// with a distinguished witness whose quotient sigma is exactly the
/// pattern.
std::vector<Tail> find_tails(const SphericalSystem& sys, const ColorSet& cs,
                             const RankOneTable& table, int max_colors = 20);

/// Localization to supp(Sigma minus the tail).
SphericalSystem strip_tail(const SphericalSystem& sys, const Tail& tail,
                           const RankOneTable& table);

/// Cuspidal, not decomposable, without positive combs and without tails.
bool is_primitive(const SphericalSystem& sys, const RankOneTable& table, int max_colors = 20);

/// The positive 1-combs of a cuspidal, indecomposable, tail-free system.
std::vector<PositiveComb> primitive_1combs(const SphericalSystem& sys, const RankOneTable& table,
                                           int max_colors = 20);

/// Nonnegative sigma weights whose pairing against every color is strictly
/// positive (the affine-open-orbit criterion); nullopt when infeasible.
std::optional<std::vector<Rational>> is_reductive_system(const SphericalSystem& sys);

/// No sigma (resp. no non-simple sigma) admits a doubled rank-one variety
/// with the same parabolic set.
bool is_strict(const SphericalSystem& sys, const RankOneTable& table);
bool is_spherically_closed(const SphericalSystem& sys, const RankOneTable& table);

enum class LeafFlag { None, Primitive, Primitive1Comb, Rank0, AtBound };
const char* leaf_flag_name(LeafFlag f);

struct ReductionNode {
  SphericalSystem system;
  LeafFlag flag = LeafFlag::None;
  struct Edge {
    std::string label;
    std::unique_ptr<ReductionNode> child;
  };
  std::vector<Edge> children;

  void leaves(std::vector<const ReductionNode*>& out) const {
    if (children.empty()) out.push_back(this);
    for (const auto& e : children) e.child->leaves(out);
  }
};

/// The full reduction pipeline: localize to supp Sigma, decompose, split
/// combs of size > 1, strip tails, in that priority order, until every
/// leaf is primitive, carries a primitive 1-comb, or has empty sigma.
ReductionNode reduce(const SphericalSystem& sys, const RankOneTable& table,
                     int max_colors = 20);

}  // namespace wonder
