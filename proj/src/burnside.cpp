#include "eqconic/burnside.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace eqconic {

namespace {

void require_same_ring(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.ring() != y.ring() && !(x.context().group() == y.context().group()))
    throw InputError("Burnside elements over different ambient groups");
}

// True when g^-1 K g is contained in H.
bool conjugate_inside(const Permutation& g, const PermGroup& k, const PermGroup& h) {
  const auto g_inv = g.inverse();
  for (const auto& x : k.elements())
    if (!h.contains(g_inv * x * g)) return false;
  return true;
}

}  // namespace

TableOfMarks table_of_marks(const PermGroup& group, const std::vector<SubgroupClass>& classes) {
  TableOfMarks table;
  table.marks.assign(classes.size(), std::vector<Coeff>(classes.size(), 0));
  for (std::size_t h = 0; h < classes.size(); ++h) {
    const auto& big = classes[h].representative;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& small = classes[k].representative;
      if (big.order() % small.order() != 0) continue;
      Coeff count = 0;
      for (const auto& g : group.elements())
        if (conjugate_inside(g, small, big)) ++count;
      table.marks[h][k] = count / static_cast<Coeff>(big.order());
    }
  }
  return table;
}

BurnsideRing::BurnsideRing(const PermGroup& group)
    : group_(group), classes_(subgroup_classes(group)), table_(table_of_marks(group, classes_)) {
  for (const auto& cls : classes_) {
    const bool top = cls.index + 1 == classes_.size();
    if (top) {
      names_.push_back("G");
      terms_.push_back("G");
    } else {
      const auto generated = cls.representative.to_string();
      names_.push_back(abstract_type(cls.representative) + "=" + generated);
      terms_.push_back(generated);
    }
  }
}

std::shared_ptr<const BurnsideRing> BurnsideRing::of(const PermGroup& group) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<Permutation>>, std::shared_ptr<const BurnsideRing>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(group.degree(), group.elements());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const BurnsideRing> ring(new BurnsideRing(group));
  cache.emplace(std::move(key), ring);
  return ring;
}

std::size_t BurnsideRing::class_of(const PermGroup& subgroup) const {
  if (!subgroup.is_subgroup_of(group_))
    throw InputError(subgroup.to_string() + " is not a subgroup of " + group_.to_string());
  for (const auto& cls : classes_) {
    if (cls.representative.order() != subgroup.order()) continue;
    for (const auto& member : cls.members)
      if (member == subgroup) return cls.index;
  }
  throw InputError("subgroup " + subgroup.to_string() + " missing from the class list");
}

std::string BurnsideRing::ambient_name() const {
  return abstract_type(group_) + "=" + group_.to_string();
}

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<Coeff> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw InputError("Burnside element without a ring");
  if (coeffs_.size() != ring_->rank()) throw InputError("coefficient vector has the wrong length");
}

BurnsideElement BurnsideElement::zero(RingPtr ring) {
  const auto n = ring->rank();
  return BurnsideElement(std::move(ring), std::vector<Coeff>(n, 0));
}

BurnsideElement BurnsideElement::basis(RingPtr ring, std::size_t class_index) {
  auto x = zero(std::move(ring));
  if (class_index >= x.coeffs_.size()) throw InputError("subgroup class index out of range");
  x.coeffs_[class_index] = 1;
  return x;
}

BurnsideElement BurnsideElement::point(RingPtr ring) {
  const auto top = ring->top_class();
  return basis(std::move(ring), top);
}

BurnsideElement BurnsideElement::regular(RingPtr ring) { return basis(std::move(ring), 0); }

BurnsideElement BurnsideElement::from_marks(RingPtr ring, const std::vector<Coeff>& marks) {
  const auto& table = ring->table();
  const auto n = table.size();
  if (marks.size() != n) throw InputError("mark vector has the wrong length");
  // marks[k] = sum_{h >= k} c[h] * M[h][k]; solve from the top class down.
  std::vector<Coeff> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    Coeff rest = marks[k];
    for (std::size_t h = k + 1; h < n; ++h) rest -= c[h] * table.at(h, k);
    const Coeff diag = table.at(k, k);
    if (rest % diag != 0)
      throw NonIntegralMarks("mark vector is not in the image of the mark homomorphism (class " +
                             ring->class_name(k) + ")");
    c[k] = rest / diag;
  }
  return BurnsideElement(std::move(ring), std::move(c));
}

Coeff BurnsideElement::mark(std::size_t class_index) const {
  if (class_index >= coeffs_.size()) throw InputError("subgroup class index out of range");
  Coeff total = 0;
  for (std::size_t h = 0; h < coeffs_.size(); ++h) total += coeffs_[h] * ring_->table().at(h, class_index);
  return total;
}

std::vector<Coeff> BurnsideElement::mark_vector() const {
  std::vector<Coeff> out(coeffs_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mark(k);
  return out;
}

bool BurnsideElement::is_genuine() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

std::string BurnsideElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Coeff c = coeffs_[i];
    if (c == 0) continue;
    const Coeff magnitude = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += std::to_string(magnitude) + "*[G/" + ring_->class_term(i) + "]";
  }
  return out.empty() ? "0" : out;
}

BurnsideElement BurnsideElement::operator-() const {
  auto out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y) {
  require_same_ring(x, y);
  auto out = x;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += y.coeffs_[i];
  return out;
}

BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y) { return x + (-y); }

BurnsideElement operator*(const BurnsideElement& x, const BurnsideElement& y) {
  require_same_ring(x, y);
  auto mx = x.mark_vector();
  const auto my = y.mark_vector();
  for (std::size_t k = 0; k < mx.size(); ++k) mx[k] *= my[k];
  return BurnsideElement::from_marks(x.ring_, mx);
}

BurnsideElement operator*(Coeff n, const BurnsideElement& x) {
  auto out = x;
  for (auto& c : out.coeffs_) c *= n;
  return out;
}

bool operator==(const BurnsideElement& x, const BurnsideElement& y) {
  require_same_ring(x, y);
  return x.coeffs_ == y.coeffs_;
}

Coeff marks(const BurnsideElement& x, std::size_t class_index) { return x.mark(class_index); }

MarkComparison compare_marks(const BurnsideElement& x, const BurnsideElement& y) {
  require_same_ring(x, y);
  MarkComparison result;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Coeff a = x.mark(k);
    const Coeff b = y.mark(k);
    if (a != b) result.witnesses.push_back({k, a, b});
  }
  result.equal = result.witnesses.empty();
  return result;
}

ConcreteGSet::ConcreteGSet(PermGroup group, std::size_t size, std::vector<std::vector<std::size_t>> table)
    : group_(std::move(group)), size_(size), table_(std::move(table)) {
  const auto& elements = group_.elements();
  if (table_.size() != elements.size()) throw InputError("action table needs one row per group element");
  for (const auto& row : table_) {
    if (row.size() != size_) throw InputError("action table row has the wrong length");
    std::vector<bool> hit(size_, false);
    for (auto y : row) {
      if (y >= size_ || hit[y]) throw InputError("group element does not act bijectively");
      hit[y] = true;
    }
  }
  for (std::size_t x = 0; x < size_; ++x)
    if (table_[0][x] != x) throw InputError("identity does not act trivially");
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const auto ij = group_.index_of(elements[i] * elements[j]);
      for (std::size_t x = 0; x < size_; ++x)
        if (table_[ij][x] != table_[i][table_[j][x]]) throw InputError("map is not a left group action");
    }
}

ConcreteGSet ConcreteGSet::from_action(const PermGroup& group, std::size_t size,
                                       const std::function<std::size_t(const Permutation&, std::size_t)>& act) {
  std::vector<std::vector<std::size_t>> table;
  table.reserve(group.order());
  for (const auto& g : group.elements()) {
    std::vector<std::size_t> row(size);
    for (std::size_t x = 0; x < size; ++x) row[x] = act(g, x);
    table.push_back(std::move(row));
  }
  return ConcreteGSet(group, size, std::move(table));
}

std::size_t ConcreteGSet::fixed_points(const PermGroup& subgroup) const {
  std::vector<std::size_t> rows;
  for (const auto& k : subgroup.elements()) rows.push_back(group_.index_of(k));
  std::size_t count = 0;
  for (std::size_t x = 0; x < size_; ++x)
    if (std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return table_[r][x] == x; })) ++count;
  return count;
}

CosetSpace coset_space(const PermGroup& group, const PermGroup& subgroup) {
  if (!subgroup.is_subgroup_of(group))
    throw InputError(subgroup.to_string() + " is not a subgroup of " + group.to_string());
  std::vector<std::vector<Permutation>> cosets;
  std::map<Permutation, std::size_t> owner;
  for (const auto& g : group.elements()) {
    if (owner.count(g)) continue;
    std::vector<Permutation> coset;
    for (const auto& h : subgroup.elements()) coset.push_back(g * h);
    std::sort(coset.begin(), coset.end());
    for (const auto& x : coset) owner[x] = cosets.size();
    cosets.push_back(std::move(coset));
  }
  // Elements are visited in sorted order, so cosets are numbered by least element.
  auto set = ConcreteGSet::from_action(group, cosets.size(), [&](const Permutation& g, std::size_t i) {
    return owner.at(g * cosets[i].front());
  });
  return {std::move(cosets), std::move(set)};
}

ConcreteGSet disjoint_union(const ConcreteGSet& a, const ConcreteGSet& b) {
  if (!(a.group() == b.group())) throw InputError("disjoint union over different groups");
  const auto n = a.size();
  return ConcreteGSet::from_action(a.group(), n + b.size(), [&](const Permutation& g, std::size_t x) {
    return x < n ? a.act(g, x) : n + b.act(g, x - n);
  });
}

ConcreteGSet cartesian_product(const ConcreteGSet& a, const ConcreteGSet& b) {
  if (!(a.group() == b.group())) throw InputError("product over different groups");
  const auto m = b.size();
  return ConcreteGSet::from_action(a.group(), a.size() * m, [&](const Permutation& g, std::size_t x) {
    return a.act(g, x / m) * m + b.act(g, x % m);
  });
}

BurnsideElement decompose(const ConcreteGSet& set) {
  auto ring = BurnsideRing::of(set.group());
  std::vector<Coeff> coeffs(ring->rank(), 0);
  std::vector<bool> seen(set.size(), false);
  for (std::size_t x = 0; x < set.size(); ++x) {
    if (seen[x]) continue;
    auto os = orbit_and_stabilizer(
        set.group(), [&](const Permutation& g, std::size_t p) { return set.act(g, p); }, x);
    for (auto y : os.orbit) seen[y] = true;
    ++coeffs[ring->class_of(os.stabilizer)];
  }
  return BurnsideElement(ring, std::move(coeffs));
}

BurnsideElement inflate(const RingPtr& ring, const BurnsideElement& x) {
  const auto& sub = x.context();
  if (!sub.group().is_subgroup_of(ring->group()))
    throw InputError(sub.group().to_string() + " is not a subgroup of " + ring->group().to_string());
  std::vector<Coeff> coeffs(ring->rank(), 0);
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    if (x.coeff(i) == 0) continue;
    coeffs[ring->class_of(sub.classes()[i].representative)] += x.coeff(i);
  }
  return BurnsideElement(ring, std::move(coeffs));
}

}  // namespace eqconic
