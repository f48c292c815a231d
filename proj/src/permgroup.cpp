#include "eqconic/permgroup.hpp"

#include <map>
#include <set>

namespace eqconic {

PermGroup PermGroup::generate(std::span<const Permutation> generators, int degree) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                       ", expected " + std::to_string(degree));

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return PermGroup(degree, {seen.begin(), seen.end()}, {generators.begin(), generators.end()});
}

PermGroup PermGroup::trivial(int degree) { return generate({}, degree); }

PermGroup PermGroup::symmetric(int degree) {
  if (degree <= 1) return trivial(degree);
  std::vector<int> cycle(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
  std::vector<int> transposition(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) transposition[static_cast<std::size_t>(i)] = i;
  std::swap(transposition[0], transposition[1]);
  const std::vector<Permutation> gens{Permutation(cycle), Permutation(transposition)};
  return generate(gens, degree);
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements, int degree) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity() || elements.front().degree() != degree)
    throw InputError("element list does not contain the identity of the right degree");
  for (const auto& a : elements) {
    if (a.degree() != degree) throw InputError("element degree mismatch");
    if (!std::binary_search(elements.begin(), elements.end(), a.inverse()))
      throw InputError("element list not closed under inverses");
    for (const auto& b : elements)
      if (!std::binary_search(elements.begin(), elements.end(), a * b))
        throw InputError("element list not closed under products");
  }
  PermGroup group(degree, std::move(elements), {});
  group.generators_ = group.minimal_generators();
  return group;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw InputError(p.to_string() + " is not an element of " + to_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

PermGroup PermGroup::conjugate_by(const Permutation& g) const {
  const auto g_inv = g.inverse();
  std::vector<Permutation> conj;
  conj.reserve(elements_.size());
  for (const auto& h : elements_) conj.push_back(g * h * g_inv);
  std::sort(conj.begin(), conj.end());
  std::vector<Permutation> gens;
  for (const auto& h : generators_) gens.push_back(g * h * g_inv);
  return PermGroup(degree_, std::move(conj), std::move(gens));
}

std::vector<Permutation> PermGroup::minimal_generators() const {
  if (order() == 1) return {};
  // Candidate generating sets of increasing size, in lexicographic order of
  // the non-identity elements. Subgroups of S_n for n <= 8 need few generators.
  std::vector<Permutation> candidates(elements_.begin() + 1, elements_.end());
  for (std::size_t size = 1; size <= candidates.size(); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Permutation> gens;
      for (auto i : pick) gens.push_back(candidates[i]);
      if (generate(gens, degree_).order() == order()) return gens;
      // next combination
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == candidates.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return candidates;
}

std::string PermGroup::to_string() const {
  const auto gens = order() == 1 ? std::vector<Permutation>{} : minimal_generators();
  if (gens.empty()) return "<()>";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].to_string();
  }
  return out + ">";
}

bool subgroup_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<PermGroup> all_subgroups(const PermGroup& group) {
  if (group.order() > 48) throw ScopeError("subgroup enumeration is limited to |G| <= 48");
  const int degree = group.degree();
  std::map<std::vector<Permutation>, PermGroup> found;
  auto add = [&](const PermGroup& h) { return found.emplace(h.elements(), h).second; };

  std::vector<PermGroup> cyclic;
  for (const auto& g : group.elements()) {
    const std::vector<Permutation> gens{g};
    auto h = PermGroup::generate(gens, degree);
    if (add(h)) cyclic.push_back(h);
  }
  // Joins with cyclic subgroups until nothing new appears.
  std::vector<PermGroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (const auto& h : frontier)
      for (const auto& c : cyclic) {
        if (c.is_subgroup_of(h)) continue;
        std::vector<Permutation> gens = h.generators();
        gens.insert(gens.end(), c.generators().begin(), c.generators().end());
        auto joined = PermGroup::generate(gens, degree);
        if (add(joined)) next.push_back(joined);
      }
    frontier = std::move(next);
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [_, h] : found) result.push_back(PermGroup::from_elements(h.elements(), degree));
  std::sort(result.begin(), result.end(), subgroup_less);
  return result;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& group) {
  const auto subgroups = all_subgroups(group);
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<SubgroupClass> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<PermGroup> members;
    for (const auto& g : group.elements()) {
      auto conj = subgroups[i].conjugate_by(g);
      auto it = std::lower_bound(subgroups.begin(), subgroups.end(), conj, subgroup_less);
      const auto j = static_cast<std::size_t>(it - subgroups.begin());
      if (!assigned[j]) {
        assigned[j] = true;
        members.push_back(subgroups[j]);
      }
    }
    std::sort(members.begin(), members.end(), subgroup_less);
    classes.push_back(SubgroupClass{members.front(), std::move(members), 0});
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return subgroup_less(a.representative, b.representative);
  });
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].index = i;
  return classes;
}

std::string abstract_type(const PermGroup& group) {
  const auto n = group.order();
  std::map<int, int> orders;
  bool abelian = true;
  for (const auto& a : group.elements()) {
    ++orders[a.order()];
    for (const auto& b : group.elements())
      if (!(a * b == b * a)) abelian = false;
  }
  const int max_order = orders.rbegin()->first;
  if (n == 1) return "1";
  if (max_order == static_cast<int>(n)) return "Z" + std::to_string(n);
  if (abelian) {
    if (n == 4) return "Z2xZ2";
    if (n == 8 && max_order == 4) return "Z4xZ2";
    if (n == 8) return "Z2xZ2xZ2";
  } else {
    if (n == 6) return "S3";
    if (n == 8) return orders[2] == 5 ? "D8" : "Q8";
    if (n == 12 && orders[2] == 3 && orders[3] == 8) return "A4";
    if (n == 12) return "D12";
    if (n == 24 && orders[4] == 6 && orders[3] == 8) return "S4";
  }
  return "G" + std::to_string(n);
}

}  // namespace eqconic
