#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eqconic/permgroup.hpp"

namespace eqconic {

using Coeff = std::int64_t;

/// M[h][k] = |(G/H_h)^{K_k}| over subgroup classes in canonical order.
/// Lower triangular: nonzero entries need K_k subconjugate to H_h.
struct TableOfMarks {
  std::vector<std::vector<Coeff>> marks;

  std::size_t size() const { return marks.size(); }
  Coeff at(std::size_t h, std::size_t k) const { return marks[h][k]; }
};

TableOfMarks table_of_marks(const PermGroup& group, const std::vector<SubgroupClass>& classes);

/// Subgroup classes, their names and the table of marks of one ambient group.
/// Shared read-only between all elements of A(G); obtain through `of`.
class BurnsideRing {
 public:
  /// Cached per group (keyed by element list); thread safe.
  static std::shared_ptr<const BurnsideRing> of(const PermGroup& group);

  const PermGroup& group() const { return group_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const TableOfMarks& table() const { return table_; }
  std::size_t rank() const { return classes_.size(); }

  std::size_t trivial_class() const { return 0; }
  std::size_t top_class() const { return classes_.size() - 1; }

  /// Index of the class containing `subgroup`; throws InputError for a
  /// group that is not a subgroup of the ambient group.
  std::size_t class_of(const PermGroup& subgroup) const;

  /// Table label: "1=<()>", "Z2=<(12)(34)>", ..., "G" for the ambient group.
  const std::string& class_name(std::size_t index) const { return names_[index]; }

  /// Label used inside [G/...]: "<()>", "<(12)(34)>", "G".
  const std::string& class_term(std::size_t index) const { return terms_[index]; }

  /// Label of the ambient group itself, e.g. "D8=<(1234),(13)>".
  std::string ambient_name() const;

 private:
  explicit BurnsideRing(const PermGroup& group);

  PermGroup group_;
  std::vector<SubgroupClass> classes_;
  TableOfMarks table_;
  std::vector<std::string> names_;
  std::vector<std::string> terms_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

/// A virtual G-set: integer coefficients on the basis [G/H] over subgroup classes.
class BurnsideElement {
 public:
  BurnsideElement(RingPtr ring, std::vector<Coeff> coeffs);

  static BurnsideElement zero(RingPtr ring);
  /// [G/H] for the class with the given index.
  static BurnsideElement basis(RingPtr ring, std::size_t class_index);
  /// {*} = [G/G].
  static BurnsideElement point(RingPtr ring);
  /// [G] = [G/1].
  static BurnsideElement regular(RingPtr ring);
  /// The element with the given marks; throws NonIntegralMarks when the
  /// triangular solve leaves the integers.
  static BurnsideElement from_marks(RingPtr ring, const std::vector<Coeff>& marks);

  const RingPtr& ring() const { return ring_; }
  const BurnsideRing& context() const { return *ring_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t class_index) const { return coeffs_[class_index]; }

  /// Number of K-fixed points for K in the class `class_index`.
  Coeff mark(std::size_t class_index) const;
  std::vector<Coeff> mark_vector() const;
  Coeff cardinality() const { return mark(ring_->trivial_class()); }
  bool is_genuine() const;

  /// "2*[G/<()>] - 1*[G/G]", or "0".
  std::string to_string() const;

  BurnsideElement operator-() const;
  friend BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y);
  friend BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y);
  /// Cartesian product, computed in mark space.
  friend BurnsideElement operator*(const BurnsideElement& x, const BurnsideElement& y);
  friend BurnsideElement operator*(Coeff n, const BurnsideElement& x);

  /// Coefficient equality (same ambient group required).
  friend bool operator==(const BurnsideElement& x, const BurnsideElement& y);

 private:
  RingPtr ring_;
  std::vector<Coeff> coeffs_;
};

/// Marks of x at class `class_index`; the free form of BurnsideElement::mark.
Coeff marks(const BurnsideElement& x, std::size_t class_index);

struct MarkWitness {
  std::size_t class_index;
  Coeff lhs;
  Coeff rhs;
};

struct MarkComparison {
  bool equal = false;
  std::vector<MarkWitness> witnesses;  ///< classes where the marks differ
};

/// Equality decided by comparing marks on every subgroup class.
MarkComparison compare_marks(const BurnsideElement& x, const BurnsideElement& y);

/// A finite G-set given by its full action table act[g][x] (g indexes
/// group.elements()). Action axioms are verified on construction.
class ConcreteGSet {
 public:
  ConcreteGSet(PermGroup group, std::size_t size, std::vector<std::vector<std::size_t>> table);

  static ConcreteGSet from_action(const PermGroup& group, std::size_t size,
                                  const std::function<std::size_t(const Permutation&, std::size_t)>& act);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  std::size_t act(std::size_t element_index, std::size_t point) const {
    return table_[element_index][point];
  }
  std::size_t act(const Permutation& g, std::size_t point) const {
    return table_[group_.index_of(g)][point];
  }
  /// Literal count of points fixed by every element of `subgroup`.
  std::size_t fixed_points(const PermGroup& subgroup) const;

 private:
  PermGroup group_;
  std::size_t size_;
  std::vector<std::vector<std::size_t>> table_;
};

/// Left cosets gH, numbered by their least element; coset 0 is H itself.
struct CosetSpace {
  std::vector<std::vector<Permutation>> cosets;  ///< each sorted
  ConcreteGSet set;
};
CosetSpace coset_space(const PermGroup& group, const PermGroup& subgroup);

ConcreteGSet disjoint_union(const ConcreteGSet& a, const ConcreteGSet& b);
/// Points (i, j) numbered i * |b| + j, diagonal action.
ConcreteGSet cartesian_product(const ConcreteGSet& a, const ConcreteGSet& b);

/// Orbit decomposition of a concrete G-set as an element of A(G).
BurnsideElement decompose(const ConcreteGSet& set);

/// Inflation from A(H) to A(G): [H/K] -> [G/K]. `x` must live over a
/// subgroup H of `ring`'s group.
BurnsideElement inflate(const RingPtr& ring, const BurnsideElement& x);

}  // namespace eqconic
