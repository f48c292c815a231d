#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eqconic/error.hpp"
#include "eqconic/permutation.hpp"

namespace eqconic {

/// A finite group of permutations of {0..degree-1}, held as the full sorted
/// element list. Everything here is desk scale (subgroups of S_n, n <= 8).
class PermGroup {
 public:
  /// Closure of `generators`; an empty list gives the trivial group.
  static PermGroup generate(std::span<const Permutation> generators, int degree);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  /// Wraps an element list after checking it contains the identity and is
  /// closed under products and inverses.
  static PermGroup from_elements(std::vector<Permutation> elements, int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& identity() const { return elements_.front(); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }
  /// Position of `p` in elements(); throws InputError if absent.
  std::size_t index_of(const Permutation& p) const;

  bool is_subgroup_of(const PermGroup& other) const;

  /// g H g^-1.
  PermGroup conjugate_by(const Permutation& g) const;

  /// Lexicographically least generating set of minimum size.
  std::vector<Permutation> minimal_generators() const;

  /// "<(12),(34)>", "<()>" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup(int degree, std::vector<Permutation> elements, std::vector<Permutation> generators)
      : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

/// Canonical order on subgroups: order ascending, then element lists lexicographically.
bool subgroup_less(const PermGroup& a, const PermGroup& b);

/// A conjugacy class of subgroups of a fixed ambient group.
struct SubgroupClass {
  PermGroup representative;        ///< least member under subgroup_less
  std::vector<PermGroup> members;  ///< all conjugates, sorted by subgroup_less
  std::size_t index = 0;           ///< position in the canonical class list
};

/// Every subgroup of `group`, sorted by subgroup_less.
std::vector<PermGroup> all_subgroups(const PermGroup& group);

/// Conjugacy classes of subgroups, sorted by their representatives.
/// Precondition: |group| <= 48.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& group);

/// Short isomorphism-type name for small groups ("1", "Z2", "Z2xZ2", "S3", "D8", "A4", ...),
/// decided by order and element-order statistics. Falls back to "G<order>".
std::string abstract_type(const PermGroup& group);

/// Result of orbit_and_stabilizer.
template <class X>
struct OrbitStabilizer {
  std::vector<X> orbit;  ///< sorted
  PermGroup stabilizer;
};

/// Orbit of `x` and its stabilizer under `act(g, x)`. The action axioms are
/// checked on x: identity acts trivially and act(g*h, x) == act(g, act(h, x))
/// for all g, h. A violation throws InputError.
template <class X, class Action>
OrbitStabilizer<X> orbit_and_stabilizer(const PermGroup& group, Action&& act, const X& x) {
  const auto& elements = group.elements();
  if (!(act(group.identity(), x) == x)) throw InputError("identity does not act trivially");
  std::vector<X> images;
  images.reserve(elements.size());
  for (const auto& g : elements) images.push_back(act(g, x));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (!(act(elements[i] * elements[j], x) == act(elements[i], images[j])))
        throw InputError("map is not a left group action");

  std::vector<Permutation> stab;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (images[i] == x) stab.push_back(elements[i]);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return {std::move(images), PermGroup::from_elements(std::move(stab), group.degree())};
}

}  // namespace eqconic
