#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "eqconic/burnside.hpp"

namespace eqconic {

/// One of the three ways to split four base points b1..b4 into two pairs:
/// index 0 = 12|34, 1 = 13|24, 2 = 14|23. A pairing stands for the nodal
/// conic L_ij u L_kl and its two branches {L_ij, L_kl}.
class Pairing {
 public:
  using Block = std::array<int, 2>;  ///< 0-based point labels, ascending

  constexpr Pairing() = default;
  explicit Pairing(int index);

  static std::array<Pairing, 3> all() { return {Pairing(0), Pairing(1), Pairing(2)}; }
  /// The pairing containing the block {p, q}.
  static Pairing containing(int p, int q);

  int index() const { return index_; }
  /// Blocks in ascending order; the first always contains point 0.
  std::array<Block, 2> blocks() const;
  /// Image under a permutation of the four point labels.
  Pairing image(const Permutation& point_perm) const;
  /// "12|34".
  std::string to_string() const;

  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  int index_ = 0;
};

/// A four-point G-set [Sigma] = {b1, b2, b3, b4}, given as a homomorphism from
/// G to S4 on the point labels (a kernel is allowed).
class SigmaConfig {
 public:
  /// `images[i]` is the point permutation of group.elements()[i]. Throws
  /// InputError unless this is a homomorphism into S4.
  SigmaConfig(PermGroup group, std::vector<Permutation> images);

  /// Concrete realization of a multiset of subgroup classes (orbit types);
  /// orbits are laid out in the given order, points inside an orbit follow
  /// the canonical coset numbering. Total size must be 4.
  static SigmaConfig realize(const RingPtr& ring, const std::vector<std::size_t>& orbit_classes);

  const PermGroup& group() const { return group_; }
  const RingPtr& ring() const { return ring_; }
  const Permutation& point_action(const Permutation& g) const { return images_[group_.index_of(g)]; }
  const std::vector<Permutation>& images() const { return images_; }
  /// [Sigma] in A(G); genuine, of cardinality 4.
  const BurnsideElement& decomposition() const { return decomposition_; }
  ConcreteGSet as_gset() const;

  /// Same G-set with labels renamed by `relabel` (b_i becomes b_{relabel(i)}).
  SigmaConfig relabeled(const Permutation& relabel) const;

 private:
  PermGroup group_;
  RingPtr ring_;
  std::vector<Permutation> images_;
  BurnsideElement decomposition_;
};

/// One SigmaConfig per isomorphism class of four-point G-sets, in canonical
/// order: by coefficient of {*} descending, then by the coefficient vector
/// read from the top class down, descending.
std::vector<SigmaConfig> enumerate_sigma_configs(const PermGroup& group);

/// g . t for the action induced on pairings.
Pairing act_on_pairing(const SigmaConfig& sigma, const Permutation& g, Pairing t);

/// One orbit of nodal conics, carrying the data of its G-weight.
struct NodalOrbitReport {
  Pairing representative;          ///< least pairing of the orbit
  std::vector<Pairing> orbit;      ///< sorted
  PermGroup stabilizer;            ///< H = stab(representative)
  BurnsideElement branch_set;      ///< the two branches as an element of A(H)
  BurnsideElement weight;          ///< inf_H^G([branches] - {*}) in A(G)
};

/// G-weight of the orbit through `t`, computed from `t` itself.
BurnsideElement orbit_weight(const SigmaConfig& sigma, Pairing t);

std::vector<NodalOrbitReport> nodal_orbit_reports(const SigmaConfig& sigma);

struct TableRow {
  std::string subgroup;
  Coeff lhs;
  Coeff rhs;
};

/// Outcome of checking  sum of orbit weights == [Sigma] - {*}  in A(G).
struct VerificationReport {
  std::string group_name;
  SigmaConfig sigma;
  std::vector<NodalOrbitReport> orbits;
  BurnsideElement lhs;
  BurnsideElement rhs;
  bool equal = false;
  std::vector<TableRow> table;  ///< one row per subgroup class, canonical order
};

VerificationReport verify(const SigmaConfig& sigma, std::string group_name = {});

/// verify() for every configuration of enumerate_sigma_configs(group).
std::vector<VerificationReport> verify_all(const PermGroup& group, const std::string& group_name = {});

/// The table expanded to one row per subgroup (conjugates repeated with the
/// marks of their class), labelled by each subgroup's own generators.
std::vector<TableRow> subgroup_rows(const VerificationReport& report);

}  // namespace eqconic
