#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqconic/pencil.hpp"

namespace eqconic {

/// An invariant pencil mu*f + lambda*g together with the group acting on it.
struct PencilCase {
  int number = 0;  ///< 1..9 in the D8 list, 0 otherwise
  std::string group_name;
  Conic f;
  Conic g;
  ProjectiveRep rep;
  /// Preferred labelling b1..b4 of the base locus, when one is fixed in advance.
  std::vector<ProjPoint> labels;

  std::string label() const { return "mu*(" + f.to_string() + ") + lambda*(" + g.to_string() + ")"; }
};

struct PencilAnalysis {
  bool invariant = false;
  std::array<Rational, 4> cubic;
  std::vector<NodalMember> members;  ///< empty when every member is singular
  BaseLocus locus;
  std::vector<ProjPoint> base;       ///< labelled b1..b4, general pencils only
  std::vector<Pairing> pairings;     ///< pairing of each member, general pencils only
  std::optional<SigmaConfig> sigma;
  std::optional<VerificationReport> report;

  bool general() const { return std::holds_alternative<std::vector<ProjPoint>>(locus); }
};

/// Base locus, nodal members, induced point action and the verification of
/// the weighted count. Throws InputError if `labels` disagree with the base locus.
PencilAnalysis analyze(const PencilCase& pencil);

struct D8Suite {
  int a;
  int b;
  Rational c;
  Rational d;
  PermGroup group;  ///< <(1234),(13)>
  Mat3 rotation;    ///< the order-4 matrix, image of (1234)
  Mat3 reflection;  ///< the order-2 matrix, image of (13)
  Mat6 sym2_rotation;
  Mat6 sym2_reflection;
  /// RREF bases of the common eigenspaces of the two Sym^2 matrices.
  std::vector<Conic> invariant_lines;
  /// Basis of the 2-dimensional invariant subspace on which the rotation squares to -1.
  std::vector<Conic> invariant_plane;
  std::vector<PencilCase> cases;  ///< the nine candidate pencils
};

/// Throws InputError unless a, b are +-1 and c, d are nonzero.
D8Suite d8_case_suite(int a, int b, const Rational& c, const Rational& d);

/// The Klein four-group {(),(12)(34),(13)(24),(14)(23)} acting on P^2 through
/// integer matrices, with the pencil through the orbit of [1:2:3].
PencilCase klein_counterexample();

/// The point [1:2:3] used to build the Klein base locus.
ProjPoint klein_seed_point();

}  // namespace eqconic
