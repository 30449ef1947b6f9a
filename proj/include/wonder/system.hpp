#pragma once

#include <array>
#include <string>
#include <vector>

#include "wonder/rankone.hpp"
#include "wonder/rootsystem.hpp"

namespace wonder {

/// One row of the A-pairing: a color moved by some simple spherical root,
/// with its integer pairings against Sigma (positionally indexed).
struct ARow {
  std::string name;
  std::vector<int> c;
};

/// The central object: the triple (sp, sigma, A) over a root system.
/// sp is kept sorted; sigma and the A rows keep their input order.
struct SphericalSystem {
  RootSystem rs;
  std::vector<int> sp;
  std::vector<Weight> sigma;
  std::vector<ARow> a_rows;

  bool operator==(const SphericalSystem& o) const {
    if (!(rs == o.rs) || sp != o.sp || sigma != o.sigma) return false;
    if (a_rows.size() != o.a_rows.size()) return false;
    for (size_t k = 0; k < a_rows.size(); ++k)
      if (a_rows[k].name != o.a_rows[k].name || a_rows[k].c != o.a_rows[k].c) return false;
    return true;
  }
};

enum class Axiom { Independence, Lattice, A1, A2, A3, Sigma1, Sigma2, S };
constexpr int kAxiomCount = 8;
const char* axiom_name(Axiom a);

struct ValidationReport {
  struct Verdict {
    bool pass = true;
    std::vector<std::string> witnesses;
  };
  std::array<Verdict, kAxiomCount> verdicts;

  Verdict& operator[](Axiom a) { return verdicts[(int)a]; }
  const Verdict& operator[](Axiom a) const { return verdicts[(int)a]; }
  bool valid() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
  std::string summary() const;
};

/// Checks the defining axioms and returns per-axiom verdicts with failure
/// witnesses. Sigma entries outside the root lattice are reported under
/// Lattice and excluded from the downstream per-root checks.
ValidationReport validate(const SphericalSystem& sys, const RankOneTable& table);

/// A color of the system. a-colors reference their A row; 2a-colors carry
/// the simple root alpha with 2*alpha spherical; b-colors carry an
/// equivalence class of one or two simple roots.
struct Color {
  enum Kind { A, TwoA, B } kind = B;
  int a_index = -1;
  std::vector<int> roots;
  std::string name;
};

struct ColorSet {
  std::vector<Color> colors;
  std::vector<std::vector<int>> delta_of;  // per simple root: color indices
  std::vector<std::vector<int>> c_full;    // colors x sigma

  int find(std::string_view name) const {
    for (size_t k = 0; k < colors.size(); ++k)
      if (colors[k].name == name) return (int)k;
    return -1;
  }
};

/// Derives the full color set with the full Cartan pairing. Precondition:
/// sys validates; structural contradictions (a b-class of size > 2, a
/// non-integral 2a-row, disagreeing b-class representatives) throw.
ColorSet colors(const SphericalSystem& sys);

/// card Delta - card Sigma.
int defect(const SphericalSystem& sys);

/// Pairing row of one simple root against all of sigma.
std::vector<int> coroot_row(const SphericalSystem& sys, int alpha);

/// Positions in sigma equal to a simple root (-1 when not simple); the
/// inverse map root -> sigma position.
std::vector<int> simple_sigma_positions(const SphericalSystem& sys);

std::string weight_str(const Weight& w);

}  // namespace wonder
