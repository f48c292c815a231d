#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "eqconic/nodal.hpp"
#include "eqconic/projective.hpp"

namespace eqconic {

/// A parameter t = [mu:lambda] of the pencil mu*f + lambda*g, first nonzero entry 1.
struct PencilParameter {
  Rational mu;
  Rational lambda;
  /// "[1:-1]".
  std::string to_string() const;
  friend bool operator==(const PencilParameter&, const PencilParameter&) = default;
};

/// Coefficients k with det(mu*A + lambda*B) = sum_j k[j] mu^(3-j) lambda^j.
std::array<Rational, 4> determinant_cubic(const Conic& f, const Conic& g);

struct NodalMember {
  PencilParameter t;
  Conic conic;       ///< mu*f + lambda*g
  int multiplicity;  ///< as a root of the determinant cubic
  std::size_t rank;  ///< rank of the symmetric matrix, 1 or 2
};

/// Singular members of the pencil spanned by f and g, ordered by parameter.
/// Throws DegeneratePencil when the cubic vanishes identically and
/// IrrationalNodalParameter when it has fewer than three rational roots.
std::vector<NodalMember> nodal_members(const Conic& f, const Conic& g);

struct LinePair {
  Line first;
  Line second;
};
struct DoubleLine {
  Line line;
};
using Degeneration = std::variant<LinePair, DoubleLine>;

/// Splits a singular conic into lines, adjoining at most one square root.
/// Throws InputError for a nonsingular conic, ScopeError if the lines need a
/// second quadratic extension.
Degeneration factor_degenerate(const Conic& c);

/// The (one or two) points where a line meets a conic; throws InputError if
/// the line lies on the conic.
std::vector<ProjPoint> line_conic_intersection(const Line& line, const Conic& c);

enum class NotGeneralReason { CommonComponent, RepeatedBasePoint, ThreeCollinear };
std::string to_string(NotGeneralReason reason);

struct NotGeneral {
  NotGeneralReason reason;
};

/// Four base points sorted canonically, or the reason the pencil is not general.
using BaseLocus = std::variant<std::vector<ProjPoint>, NotGeneral>;

BaseLocus base_locus(const Conic& f, const Conic& g);

/// The two conics spanning the pencil through four points (RREF kernel basis).
/// Throws InputError unless the conditions have a 2-dimensional solution space.
std::array<Conic, 2> pencil_through(const std::array<ProjPoint, 4>& points);

/// True if both lists of conics span the same coefficient space.
bool same_span(const std::vector<Conic>& a, const std::vector<Conic>& b);

/// A homomorphism from a permutation group to PGL(3), one matrix per element
/// acting on points by p -> M p.
class ProjectiveRep {
 public:
  /// Extends generator images to the whole group; throws InputError if two
  /// words for the same element give matrices that differ by more than a scalar.
  static ProjectiveRep from_generators(const PermGroup& group, const std::vector<Permutation>& generators,
                                       const std::vector<Mat3>& matrices);
  /// `matrices[i]` for group.elements()[i]; checked to be multiplicative up to scalars.
  static ProjectiveRep from_elements(const PermGroup& group, std::vector<Mat3> matrices);

  const PermGroup& group() const { return group_; }
  const Mat3& matrix(const Permutation& g) const { return matrices_[group_.index_of(g)]; }
  const std::vector<Mat3>& matrices() const { return matrices_; }
  /// sym2 of the contragredient, i.e. the action on conics.
  Mat6 form_action(const Permutation& g) const;

 private:
  ProjectiveRep(PermGroup group, std::vector<Mat3> matrices)
      : group_(std::move(group)), matrices_(std::move(matrices)) {}
  PermGroup group_;
  std::vector<Mat3> matrices_;
};

/// True if every `actions[i]` maps span{f, g} into itself.
bool pencil_invariant(const std::vector<Mat6>& actions, const Conic& f, const Conic& g);
bool pencil_invariant(const ProjectiveRep& rep, const Conic& f, const Conic& g);

/// The point permutations induced on labelled base points b1..b4 = base[0..3].
/// Throws InputError if some g.b_i is not a base point.
SigmaConfig induced_sigma(const ProjectiveRep& rep, const std::vector<ProjPoint>& base);

/// For each nodal member, the pairing of base points given by its two lines.
/// Throws InputError unless the members biject with the three pairings.
std::vector<Pairing> member_pairings(const std::vector<ProjPoint>& base, const std::vector<NodalMember>& members);

}  // namespace eqconic
