#include "eqconic/nodal.hpp"

#include <algorithm>

namespace eqconic {

namespace {

constexpr std::array<std::array<Pairing::Block, 2>, 3> kBlocks{{
    {{{0, 1}, {2, 3}}},
    {{{0, 2}, {1, 3}}},
    {{{0, 3}, {1, 2}}},
}};

std::vector<Permutation> check_images(const PermGroup& group, std::vector<Permutation> images) {
  if (images.size() != group.order()) throw InputError("point action needs one image per group element");
  for (const auto& p : images)
    if (p.degree() != 4) throw InputError("point action must land in S4");
  const auto& elements = group.elements();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (!(images[group.index_of(elements[i] * elements[j])] == images[i] * images[j]))
        throw InputError("point action is not a homomorphism");
  return images;
}

// The two blocks of t as a set acted on by the stabilizer of t.
BurnsideElement branch_set_of(const SigmaConfig& sigma, const PermGroup& stab, Pairing t) {
  const auto blocks = t.blocks();
  const auto branches = ConcreteGSet::from_action(stab, 2, [&](const Permutation& h, std::size_t i) {
    const auto& perm = sigma.point_action(h);
    Pairing::Block moved{perm(blocks[i][0]), perm(blocks[i][1])};
    std::sort(moved.begin(), moved.end());
    return moved == blocks[0] ? std::size_t{0} : std::size_t{1};
  });
  return decompose(branches);
}

BurnsideElement weight_from_branches(const SigmaConfig& sigma, const BurnsideElement& branch_set) {
  return inflate(sigma.ring(), branch_set - BurnsideElement::point(branch_set.ring()));
}

BurnsideElement decompose_images(const PermGroup& group, const std::vector<Permutation>& images) {
  return decompose(ConcreteGSet::from_action(
      group, 4, [&](const Permutation& g, std::size_t x) {
        return static_cast<std::size_t>(images[group.index_of(g)](static_cast<int>(x)));
      }));
}

}  // namespace

Pairing::Pairing(int index) : index_(index) {
  if (index < 0 || index > 2) throw InputError("pairing index must be 0, 1 or 2");
}

Pairing Pairing::containing(int p, int q) {
  if (p == q || p < 0 || q < 0 || p > 3 || q > 3) throw InputError("block needs two distinct points of 0..3");
  const int lo = std::min(p, q);
  const int hi = std::max(p, q);
  for (int i = 0; i < 3; ++i)
    for (const auto& block : kBlocks[static_cast<std::size_t>(i)])
      if (block[0] == lo && block[1] == hi) return Pairing(i);
  throw InputError("unreachable block");
}

std::array<Pairing::Block, 2> Pairing::blocks() const { return kBlocks[static_cast<std::size_t>(index_)]; }

Pairing Pairing::image(const Permutation& point_perm) const {
  const auto block = blocks()[0];
  return containing(point_perm(block[0]), point_perm(block[1]));
}

std::string Pairing::to_string() const {
  std::string out;
  const auto b = blocks();
  out += static_cast<char>('1' + b[0][0]);
  out += static_cast<char>('1' + b[0][1]);
  out += '|';
  out += static_cast<char>('1' + b[1][0]);
  out += static_cast<char>('1' + b[1][1]);
  return out;
}

SigmaConfig::SigmaConfig(PermGroup group, std::vector<Permutation> images)
    : group_(std::move(group)),
      ring_(BurnsideRing::of(group_)),
      images_(check_images(group_, std::move(images))),
      decomposition_(decompose_images(group_, images_)) {}

SigmaConfig SigmaConfig::realize(const RingPtr& ring, const std::vector<std::size_t>& orbit_classes) {
  const auto& group = ring->group();
  std::vector<std::vector<int>> images(group.order(), std::vector<int>(4, -1));
  int offset = 0;
  for (auto c : orbit_classes) {
    if (c >= ring->rank()) throw InputError("subgroup class index out of range");
    const auto cosets = coset_space(group, ring->classes()[c].representative);
    const int size = static_cast<int>(cosets.set.size());
    if (offset + size > 4) throw InputError("orbit types add up to more than four points");
    for (std::size_t g = 0; g < group.order(); ++g)
      for (int x = 0; x < size; ++x)
        images[g][static_cast<std::size_t>(offset + x)] =
            offset + static_cast<int>(cosets.set.act(g, static_cast<std::size_t>(x)));
    offset += size;
  }
  if (offset != 4) throw InputError("orbit types must add up to exactly four points");
  std::vector<Permutation> perms;
  perms.reserve(images.size());
  for (auto& row : images) perms.emplace_back(std::move(row));
  return SigmaConfig(group, std::move(perms));
}

ConcreteGSet SigmaConfig::as_gset() const {
  return ConcreteGSet::from_action(group_, 4, [&](const Permutation& g, std::size_t x) {
    return static_cast<std::size_t>(point_action(g)(static_cast<int>(x)));
  });
}

SigmaConfig SigmaConfig::relabeled(const Permutation& relabel) const {
  const auto inv = relabel.inverse();
  std::vector<Permutation> images;
  images.reserve(images_.size());
  for (const auto& p : images_) images.push_back(relabel * p * inv);
  return SigmaConfig(group_, std::move(images));
}

std::vector<SigmaConfig> enumerate_sigma_configs(const PermGroup& group) {
  const auto ring = BurnsideRing::of(group);
  std::vector<std::size_t> sizes;
  for (const auto& cls : ring->classes()) sizes.push_back(group.order() / cls.representative.order());

  // Multisets of class indices, listed non-increasing, with orbit sizes summing to 4.
  std::vector<std::vector<std::size_t>> multisets;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t max_class, std::size_t remaining) -> void {
    if (remaining == 0) {
      multisets.push_back(current);
      return;
    }
    for (std::size_t c = max_class + 1; c-- > 0;) {
      if (sizes[c] > remaining) continue;
      current.push_back(c);
      self(self, c, remaining - sizes[c]);
      current.pop_back();
    }
  };
  extend(extend, ring->rank() - 1, 4);

  std::vector<SigmaConfig> configs;
  for (const auto& m : multisets) configs.push_back(SigmaConfig::realize(ring, m));
  std::sort(configs.begin(), configs.end(), [](const SigmaConfig& a, const SigmaConfig& b) {
    const auto& ca = a.decomposition().coeffs();
    const auto& cb = b.decomposition().coeffs();
    return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend(),
                                        [](Coeff x, Coeff y) { return x > y; });
  });
  return configs;
}

Pairing act_on_pairing(const SigmaConfig& sigma, const Permutation& g, Pairing t) {
  return t.image(sigma.point_action(g));
}

BurnsideElement orbit_weight(const SigmaConfig& sigma, Pairing t) {
  auto os = orbit_and_stabilizer(
      sigma.group(), [&](const Permutation& g, Pairing p) { return act_on_pairing(sigma, g, p); }, t);
  return weight_from_branches(sigma, branch_set_of(sigma, os.stabilizer, t));
}

std::vector<NodalOrbitReport> nodal_orbit_reports(const SigmaConfig& sigma) {
  const auto& group = sigma.group();
  std::vector<NodalOrbitReport> reports;
  std::vector<bool> covered(3, false);
  for (auto t : Pairing::all()) {
    if (covered[static_cast<std::size_t>(t.index())]) continue;
    auto os = orbit_and_stabilizer(
        group, [&](const Permutation& g, Pairing p) { return act_on_pairing(sigma, g, p); }, t);
    for (auto p : os.orbit) covered[static_cast<std::size_t>(p.index())] = true;

    auto branch_set = branch_set_of(sigma, os.stabilizer, t);
    auto weight = weight_from_branches(sigma, branch_set);
    reports.push_back(NodalOrbitReport{t, std::move(os.orbit), std::move(os.stabilizer),
                                       std::move(branch_set), std::move(weight)});
  }
  return reports;
}

VerificationReport verify(const SigmaConfig& sigma, std::string group_name) {
  const auto& ring = sigma.ring();
  auto orbits = nodal_orbit_reports(sigma);
  auto lhs = BurnsideElement::zero(ring);
  for (const auto& orbit : orbits) lhs = lhs + orbit.weight;
  auto rhs = sigma.decomposition() - BurnsideElement::point(ring);
  const auto cmp = compare_marks(lhs, rhs);

  std::vector<TableRow> table;
  const auto lm = lhs.mark_vector();
  const auto rm = rhs.mark_vector();
  for (std::size_t k = 0; k < ring->rank(); ++k) table.push_back({ring->class_term(k), lm[k], rm[k]});

  if (group_name.empty()) group_name = ring->ambient_name();
  return VerificationReport{std::move(group_name), sigma,          std::move(orbits), std::move(lhs),
                            std::move(rhs),        cmp.equal, std::move(table)};
}

std::vector<VerificationReport> verify_all(const PermGroup& group, const std::string& group_name) {
  std::vector<VerificationReport> reports;
  for (const auto& sigma : enumerate_sigma_configs(group)) reports.push_back(verify(sigma, group_name));
  return reports;
}

std::vector<TableRow> subgroup_rows(const VerificationReport& report) {
  const auto& ring = report.sigma.ring();
  std::vector<TableRow> rows;
  for (const auto& cls : ring->classes()) {
    const auto& row = report.table[cls.index];
    for (const auto& member : cls.members) {
      const bool top = cls.index == ring->top_class();
      rows.push_back({top ? std::string("G") : member.to_string(), row.lhs, row.rhs});
    }
  }
  return rows;
}

}  // namespace eqconic
