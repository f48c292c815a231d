#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqconic/presets.hpp"
#include "oracles.hpp"

using namespace eqconic;

namespace {

Permutation p4(const char* text) { return Permutation::parse(text, 4); }

PermGroup gen4(std::initializer_list<const char*> gens) {
  std::vector<Permutation> v;
  for (auto g : gens) v.push_back(p4(g));
  return PermGroup::generate(v, 4);
}

}  // namespace

TEST_SUITE("permgroup") {
  TEST_CASE("cycle notation round trips") {
    CHECK(p4("()").is_identity());
    CHECK(p4("(12)(34)").to_string() == "(12)(34)");
    CHECK(p4("(1 2)(3 4)") == p4("(12)(34)"));
    CHECK(p4("(1,2)(3,4)") == p4("(12)(34)"));
    CHECK(p4("(1234)").order() == 4);
    CHECK_THROWS_AS(p4("(15)"), InputError);
    CHECK_THROWS_AS(p4("(12"), InputError);
    CHECK_THROWS_AS(p4("(121)"), InputError);
  }

  TEST_CASE("composition applies the right factor first") {
    CHECK(p4("(12)") * p4("(23)") == p4("(123)"));
    CHECK(p4("(23)") * p4("(12)") == p4("(132)"));
  }

  TEST_CASE("inverses in S4") {
    const auto s4 = PermGroup::symmetric(4);
    for (const auto& g : s4.elements()) {
      CHECK((g * g.inverse()).is_identity());
      CHECK(g.inverse().inverse() == g);
    }
  }

  TEST_CASE("generated orders") {
    CHECK(gen4({}).order() == 1);
    CHECK(gen4({"(12)", "(123)"}).order() == 6);
    CHECK(gen4({"(1234)", "(13)"}).order() == 8);
    CHECK(gen4({"(123)", "(12)(34)"}).order() == 12);
    CHECK(gen4({"(1234)", "(12)"}).order() == 24);
    CHECK(gen4({"(12)", "(34)"}).order() == 4);
  }

  TEST_CASE("subgroups of S4 agree with the subset-closure oracle") {
    const auto s4 = PermGroup::symmetric(4);
    const auto expected = oracle::subgroups_by_subsets(s4);
    CHECK(expected.size() == 30);
    std::vector<std::vector<Permutation>> got;
    for (const auto& h : all_subgroups(s4)) got.push_back(h.elements());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }

  TEST_CASE("subgroup lattices of every preset agree with the oracle") {
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      std::vector<std::vector<Permutation>> got;
      for (const auto& h : all_subgroups(g)) got.push_back(h.elements());
      std::sort(got.begin(), got.end());
      CHECK_MESSAGE(got == oracle::subgroups_by_subsets(g), preset.name);
    }
  }

  TEST_CASE("conjugacy classes of subgroups of S4") {
    const auto s4 = PermGroup::symmetric(4);
    const auto classes = subgroup_classes(s4);
    CHECK(classes.size() == 11);
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.members.size();
      CHECK(s4.order() % cls.representative.order() == 0);
      CHECK(cls.members.front() == cls.representative);
      std::set<std::vector<Permutation>> conjugates;
      for (const auto& g : s4.elements()) conjugates.insert(cls.representative.conjugate_by(g).elements());
      std::set<std::vector<Permutation>> members;
      for (const auto& m : cls.members) members.insert(m.elements());
      CHECK(conjugates == members);
    }
    CHECK(total == 30);
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
      CHECK(classes[i].representative.order() <= classes[i + 1].representative.order());
  }

  TEST_CASE("classes in D8 keep the two reflection types apart") {
    const auto d8 = gen4({"(1234)", "(13)"});
    const auto classes = subgroup_classes(d8);
    CHECK(classes.size() == 8);
    auto class_of = [&](const PermGroup& h) {
      for (const auto& cls : classes)
        for (const auto& m : cls.members)
          if (m == h) return cls.index;
      return classes.size();
    };
    CHECK(class_of(gen4({"(13)"})) == class_of(gen4({"(24)"})));
    CHECK(class_of(gen4({"(13)"})) != class_of(gen4({"(14)(23)"})));
    CHECK(class_of(gen4({"(12)(34)"})) == class_of(gen4({"(14)(23)"})));
    CHECK(class_of(gen4({"(13)(24)"})) != class_of(gen4({"(12)(34)"})));
  }

  TEST_CASE("classes do not depend on the chosen generators") {
    const auto a = subgroup_classes(gen4({"(1234)", "(12)"}));
    const auto b = subgroup_classes(gen4({"(12)", "(23)", "(34)"}));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].representative == b[i].representative);
      CHECK(a[i].members.size() == b[i].members.size());
    }
  }

  TEST_CASE("abstract types") {
    CHECK(abstract_type(gen4({})) == "1");
    CHECK(abstract_type(gen4({"(12)(34)"})) == "Z2");
    CHECK(abstract_type(gen4({"(12)", "(34)"})) == "Z2xZ2");
    CHECK(abstract_type(gen4({"(1234)"})) == "Z4");
    CHECK(abstract_type(gen4({"(123)", "(12)"})) == "S3");
    CHECK(abstract_type(gen4({"(1234)", "(13)"})) == "D8");
    CHECK(abstract_type(gen4({"(123)", "(12)(34)"})) == "A4");
    CHECK(abstract_type(PermGroup::symmetric(4)) == "S4");
  }

  TEST_CASE("orbit and stabilizer of a point") {
    const auto s4 = PermGroup::symmetric(4);
    const auto os = orbit_and_stabilizer(s4, [](const Permutation& g, int x) { return g(x); }, 0);
    CHECK(os.orbit == std::vector<int>{0, 1, 2, 3});
    CHECK(os.stabilizer.order() == 6);
    CHECK(os.orbit.size() * os.stabilizer.order() == s4.order());
  }

  TEST_CASE("orbit-stabilizer on subsets for every preset") {
    for (const auto& preset : group_presets()) {
      const auto g = parse_group(preset.name).group;
      for (int mask = 0; mask < 16; ++mask) {
        auto act = [](const Permutation& p, int m) {
          int out = 0;
          for (int i = 0; i < 4; ++i)
            if (m >> i & 1) out |= 1 << p(i);
          return out;
        };
        const auto os = orbit_and_stabilizer(g, act, mask);
        CHECK(os.orbit.size() * os.stabilizer.order() == g.order());
        CHECK(os.stabilizer.is_subgroup_of(g));
      }
    }
  }

  TEST_CASE("a map that is not a left action is rejected") {
    const auto s3 = gen4({"(123)", "(12)"});
    auto right = [](const Permutation& g, int x) { return g.inverse()(x); };
    CHECK_THROWS_AS(orbit_and_stabilizer(s3, right, 0), InputError);
  }

  TEST_CASE("from_elements rejects non-subgroups") {
    CHECK_THROWS_AS(PermGroup::from_elements({p4("()"), p4("(12)"), p4("(34)")}, 4), InputError);
  }
}
