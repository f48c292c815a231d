#include <doctest.h>

#include "eqconic/presets.hpp"
#include "oracles.hpp"

using namespace eqconic;

namespace {

PermGroup gen4(std::initializer_list<const char*> gens) {
  std::vector<Permutation> v;
  for (auto g : gens) v.push_back(Permutation::parse(g, 4));
  return PermGroup::generate(v, 4);
}

SigmaConfig config(const std::string& group, const std::string& sigma) {
  const auto g = parse_group(group).group;
  return realize_sigma(parse_sigma(sigma, BurnsideRing::of(g)));
}

BurnsideElement element(const RingPtr& ring, const std::string& spec) {
  // "+"-separated terms {*}, [G] and [G/<gens>]
  BurnsideElement out = BurnsideElement::zero(ring);
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = std::min(spec.find(" + ", start), spec.size());
    const auto term = spec.substr(start, end - start);
    if (term == "{*}") {
      out = out + BurnsideElement::point(ring);
    } else if (term == "[G]") {
      out = out + BurnsideElement::regular(ring);
    } else {
      const auto gens = term.substr(3, term.size() - 4);
      out = out + BurnsideElement::basis(ring, ring->class_of(PermGroup::generate(parse_generator_list(gens, 4), 4)));
    }
    start = end + 3;
  }
  return out;
}

}  // namespace

TEST_SUITE("nodal") {
  TEST_CASE("pairings") {
    CHECK(Pairing(0).to_string() == "12|34");
    CHECK(Pairing(1).to_string() == "13|24");
    CHECK(Pairing(2).to_string() == "14|23");
    CHECK(Pairing::containing(3, 1) == Pairing(1));
    CHECK(Pairing::containing(2, 1) == Pairing(2));
    const auto swap34 = Permutation::parse("(34)", 4);
    CHECK(Pairing(1).image(swap34) == Pairing(2));
    CHECK(Pairing(0).image(swap34) == Pairing(0));
  }

  TEST_CASE("four-point configurations per group") {
    auto count = [](const char* name) { return enumerate_sigma_configs(parse_group(name).group).size(); };
    CHECK(count("trivial") == 1);
    CHECK(count("Z2") == 3);
    CHECK(count("Z3") == 2);
    CHECK(count("S4") == 5);
    for (const auto& preset : group_presets())
      for (const auto& s : enumerate_sigma_configs(parse_group(preset.name).group)) {
        CHECK(s.decomposition().cardinality() == 4);
        CHECK(s.decomposition().is_genuine());
      }
  }

  TEST_CASE("sigma configurations are homomorphisms") {
    const auto z2 = gen4({"(12)"});
    const auto id = Permutation::identity(4);
    CHECK_NOTHROW(SigmaConfig(z2, {id, Permutation::parse("(34)", 4)}));
    CHECK_THROWS_AS(SigmaConfig(z2, {id, Permutation::parse("(234)", 4)}), InputError);
    CHECK_THROWS_AS(SigmaConfig(z2, {id}), InputError);
  }

  TEST_CASE("induced action on pairings") {
    const auto s = config("Z2", "2{*} + [G]");
    const auto g = Permutation::parse("(12)", 4);
    CHECK(act_on_pairing(s, g, Pairing(1)) == Pairing(2));
    CHECK(act_on_pairing(s, g, Pairing(0)) == Pairing(0));
    const auto t = config("S3", "{*} + [G/<(12)>]");
    const auto c = Permutation::parse("(123)", 4);
    CHECK(act_on_pairing(t, c, Pairing(0)) != Pairing(0));
    CHECK(act_on_pairing(t, c, act_on_pairing(t, c, act_on_pairing(t, c, Pairing(0)))) == Pairing(0));
  }

  TEST_CASE("orbit reports for small groups") {
    const auto trivial = nodal_orbit_reports(config("trivial", "4*"));
    CHECK(trivial.size() == 3);
    for (const auto& o : trivial) CHECK(o.weight == BurnsideElement::point(o.weight.ring()));

    const auto z2 = nodal_orbit_reports(config("Z2", "2{*} + [G]"));
    REQUIRE(z2.size() == 2);
    CHECK(z2[0].orbit == std::vector<Pairing>{Pairing(0)});
    CHECK(z2[1].orbit == std::vector<Pairing>{Pairing(1), Pairing(2)});
    CHECK(z2[1].stabilizer.order() == 1);
    CHECK(z2[1].weight == BurnsideElement::regular(z2[1].weight.ring()));
  }

  TEST_CASE("Z2 weighted sums") {
    const auto ring = BurnsideRing::of(parse_group("Z2").group);
    const auto pt = BurnsideElement::point(ring);
    const auto reg = BurnsideElement::regular(ring);
    const auto a = verify(config("Z2", "4*"));
    const auto b = verify(config("Z2", "2[G]"));
    const auto c = verify(config("Z2", "2* + [G]"));
    CHECK(a.lhs == 3 * pt);
    CHECK(b.lhs == 2 * reg - pt);
    CHECK(c.lhs == reg + pt);
    CHECK((a.equal && b.equal && c.equal));
  }

  TEST_CASE("S3 configuration with a three-point orbit") {
    const auto r = verify(config("S3", "{*} + [G/<(12)>]"));
    const auto ring = r.lhs.ring();
    CHECK(r.orbits.size() == 1);
    CHECK(r.lhs == BurnsideElement::basis(ring, ring->class_of(gen4({"(12)"}))));
    CHECK(r.equal);
  }

  TEST_CASE("A4 acting through its quotient of order three") {
    const auto r = verify(config("A4", "[G/A3]"));
    const auto ring = r.lhs.ring();
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].orbit.size() == 3);
    CHECK(r.orbits[0].weight == element(ring, "[G/<(14)(23)>]") - element(ring, "[G/<(12)(34),(13)(24)>]"));
    // classes: 1, Z2, Z3, V4, A4
    std::vector<Coeff> lhs, rhs;
    for (const auto& row : r.table) {
      lhs.push_back(row.lhs);
      rhs.push_back(row.rhs);
    }
    CHECK(lhs == std::vector<Coeff>{3, -1, 0, -3, 0});
    CHECK(rhs == std::vector<Coeff>{3, -1, 0, -1, -1});
    CHECK_FALSE(r.equal);
  }

  TEST_CASE("regular action of a Klein group") {
    const auto r = verify(config("Z2xZ2", "[G]"));
    CHECK_FALSE(r.equal);
    std::vector<Coeff> lhs;
    for (const auto& row : r.table) lhs.push_back(row.lhs);
    CHECK(lhs == std::vector<Coeff>{3, -1, -1, -1, -3});
    CHECK_FALSE(verify(config("V'", "[G]")).equal);
  }

  TEST_CASE("tables agree with direct fixed-point counting") {
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      for (const auto& r : verify_all(g, preset.name)) {
        const auto ring = r.lhs.ring();
        REQUIRE(r.table.size() == ring->rank());
        for (const auto& cls : ring->classes()) {
          CHECK(r.table[cls.index].lhs == oracle::lhs_marks(r.sigma, cls.representative));
          CHECK(r.table[cls.index].rhs == oracle::rhs_marks(r.sigma, cls.representative));
        }
        CHECK(r.equal == (r.lhs == r.rhs));
        CHECK(r.rhs == r.sigma.decomposition() - BurnsideElement::point(ring));
      }
    }
  }

  TEST_CASE("three singular conics for every configuration") {
    for (const auto& preset : group_presets())
      for (const auto& r : verify_all(parse_group(preset.name).group))
        CHECK(r.lhs.cardinality() == 3);
  }

  TEST_CASE("orbits partition the pairings and satisfy orbit-stabilizer") {
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      for (const auto& s : enumerate_sigma_configs(g)) {
        std::size_t covered = 0;
        for (const auto& o : nodal_orbit_reports(s)) {
          covered += o.orbit.size();
          CHECK(o.orbit.size() * o.stabilizer.order() == g.order());
          CHECK(o.branch_set.cardinality() == 2);
          CHECK(o.branch_set.is_genuine());
        }
        CHECK(covered == 3);
      }
    }
  }

  TEST_CASE("weights do not depend on the orbit representative") {
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      for (const auto& s : enumerate_sigma_configs(g))
        for (const auto& o : nodal_orbit_reports(s))
          for (const auto& t : o.orbit) CHECK(orbit_weight(s, t) == o.weight);
    }
  }

  TEST_CASE("verification is invariant under relabeling the points") {
    const auto s4 = PermGroup::symmetric(4);
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      for (const auto& s : enumerate_sigma_configs(g)) {
        const auto base = verify(s);
        for (const auto& relabel : s4.elements()) {
          const auto r = verify(s.relabeled(relabel));
          CHECK(r.lhs == base.lhs);
          CHECK(r.rhs == base.rhs);
        }
      }
    }
  }

  TEST_CASE("per-subgroup rows repeat class values") {
    const auto r = verify(config("D8", "[G/<(24)>]"));
    const auto rows = subgroup_rows(r);
    CHECK(rows.size() == 10);
    CHECK(rows.front().subgroup == "<()>");
    CHECK(rows.back().subgroup == "G");
  }

  TEST_CASE("sigma parsing") {
    const auto ring = BurnsideRing::of(parse_group("Z2").group);
    CHECK(parse_sigma("4*", ring) == 4 * BurnsideElement::point(ring));
    CHECK(parse_sigma("2{*}+[G]", ring) == parse_sigma("2* + [G/<()>]", ring));
    CHECK(parse_sigma("2*[G]", ring) == 2 * BurnsideElement::regular(ring));
    CHECK_THROWS_AS(parse_sigma("3*", ring), InputError);
    CHECK_THROWS_AS(parse_sigma("[G/<(123)>] + 3*", ring), InputError);
    CHECK_THROWS_WITH_AS(parse_sigma("4x", ring), doctest::Contains("4x"), InputError);
  }

  TEST_CASE("group parsing") {
    CHECK(parse_group("A3").group == parse_group("Z3").group);
    CHECK(parse_group("<(12),(34)>").group == parse_group("V'").group);
    CHECK(parse_group("D8").group.order() == 8);
    CHECK_THROWS_WITH_AS(parse_group("Q8"), doctest::Contains("Q8"), InputError);
    CHECK_THROWS_AS(parse_group("<(15)>"), InputError);
  }
}
