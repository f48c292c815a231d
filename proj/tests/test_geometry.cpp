#include <doctest.h>

#include <random>

#include "eqconic/counterexamples.hpp"
#include "eqconic/presets.hpp"

using namespace eqconic;

namespace {

Permutation p4(const char* text) { return Permutation::parse(text, 4); }

QuadExt rt(long long m) { return QuadExt::sqrt_of(Rational(m)); }

bool on_both(const PencilCase& pc, const ProjPoint& p) {
  return pc.f.evaluate(p).is_zero() && pc.g.evaluate(p).is_zero();
}

Mat3 random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  while (true) {
    Mat3 m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    if (!m.determinant().is_zero()) return m;
  }
}

const std::vector<std::pair<int, int>> kSigns{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("quadratic extension arithmetic") {
    const auto s = rt(-2);
    CHECK(s * s == QuadExt(-2));
    CHECK(rt(-8) == QuadExt(0, 2, -2));
    CHECK(rt(9) == QuadExt(3));
    CHECK(rt(-8).to_string() == "2*sqrt(-2)");
    CHECK(s.to_string() == "sqrt(-2)");
    CHECK((1 + 2 * s).to_string() == "1 + 2*sqrt(-2)");
    CHECK((-rt(-1)).to_string() == "-sqrt(-1)");
    CHECK(QuadExt(Rational(-1) / 2).to_string() == "-1/2");
    CHECK((1 + s) * (1 - s) == QuadExt(3));
    CHECK((1 + s).norm() == 3);
    CHECK(((2 + s) / (1 + s)) * (1 + s) == 2 + s);
    CHECK_THROWS_AS(s + rt(3), FieldMismatch);
    CHECK_NOTHROW(s + QuadExt(5));
    CHECK_THROWS_AS(s.to_rational(), ScopeError);
    CHECK(QuadExt(4).sqrt() == QuadExt(2));
    CHECK(QuadExt(-2).sqrt() == s);
  }

  TEST_CASE("field axioms on random elements of Q(sqrt(-2))") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> d(-5, 5);
    auto draw = [&] { return QuadExt(Rational(d(rng)), Rational(d(rng)), -2); };
    for (int i = 0; i < 200; ++i) {
      const auto x = draw(), y = draw(), z = draw();
      CHECK(x + y == y + x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x * y).norm() == x.norm() * y.norm());
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }

  TEST_CASE("squarefree split") {
    const auto a = squarefree_split(Rational(-8));
    CHECK(a.radicand == -2);
    CHECK(a.root == 2);
    const auto b = squarefree_split(Rational(9) / 2);
    CHECK(b.radicand * b.root * b.root == Rational(9) / 2);
    CHECK(squarefree_split(Rational(0)).radicand == 0);
  }

  TEST_CASE("exact linear algebra") {
    const Mat3 m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(m.determinant() == QuadExt(18));
    CHECK(m * m.inverse() == Mat3::identity(3));
    const Mat3 singular{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(singular.rank() == 2);
    const auto k = singular.kernel();
    REQUIRE(k.size() == 1);
    CHECK(singular * k[0] == Vec{0, 0, 0});
    CHECK_THROWS_AS(singular.inverse(), InputError);
    CHECK(projectively_equal(m * QuadExt(-3), m));
    CHECK_FALSE(projectively_equal(m, Mat3::identity(3)));
  }

  TEST_CASE("conic parsing") {
    CHECK(parse_conic("X^2 - Y^2").to_string() == "X^2 - Y^2");
    CHECK(parse_conic("XY") == parse_conic("X*Y"));
    CHECK(parse_conic("2*X*Y") == parse_conic("(X+Y)^2 - X^2 - Y^2"));
    CHECK(parse_conic("c*(X^2+Y^2) + d*Z^2", {{"c", 1}, {"d", 2}}).to_string() == "X^2 + Y^2 + 2*Z^2");
    CHECK(parse_conic("1/2*X^2").coeffs()[0] == QuadExt(Rational(1) / 2));
    CHECK_THROWS_WITH_AS(parse_conic("X^2 + W^2"), doctest::Contains("W"), InputError);
    CHECK_THROWS_AS(parse_conic("X^3"), InputError);
    CHECK_THROWS_AS(parse_conic("X + Y"), InputError);
    CHECK_THROWS_AS(parse_conic("X^2 +"), InputError);
  }

  TEST_CASE("conic matrix and evaluation") {
    const auto c = parse_conic("X^2 + 2*YZ - 4*XY");
    const auto m = c.matrix();
    CHECK(m(0, 1) == QuadExt(-2));
    CHECK(m(1, 2) == QuadExt(1));
    const Vec p{1, 2, 3};
    CHECK(c.evaluate(p) == QuadExt(1 + 12 - 8));
  }

  TEST_CASE("sym2 is multiplicative") {
    std::mt19937 rng(23);
    CHECK(sym2(Mat3::identity(3)) == Mat6::identity(6));
    for (int i = 0; i < 40; ++i) {
      const auto a = random_matrix(rng);
      const auto b = random_matrix(rng);
      CHECK(sym2(a * b) == sym2(a) * sym2(b));
    }
    CHECK_THROWS_AS(sym2(Mat3(3, 3)), InputError);
  }

  TEST_CASE("sym2 maps forms by substitution") {
    std::mt19937 rng(29);
    for (int i = 0; i < 10; ++i) {
      const auto m = random_matrix(rng);
      const auto c = parse_conic("X^2 - 3*YZ + 2*XZ + Z^2");
      const Conic image(sym2(m) * c.vec());
      // column j of m is the image of the j-th variable, so image(p) = c(m^T p)
      const Vec p{1, -2, 5};
      CHECK(image.evaluate(p) == c.evaluate(m.transpose() * p));
    }
  }

  TEST_CASE("points and lines") {
    const ProjPoint p(2, 4, 6);
    CHECK(p.to_string() == "[1:2:3]");
    CHECK(ProjPoint(0, 3, 0).to_string() == "[0:1:0]");
    CHECK(ProjPoint(1, 1, rt(-2)).to_string() == "[1:1:sqrt(-2)]");
    CHECK_THROWS_AS(ProjPoint(0, 0, 0), InputError);
    const auto l = Line::through(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
    CHECK(l == Line(0, 0, 1));
    CHECK(l.to_string() == "Z");
    CHECK(intersect(Line(1, 0, 0), Line(0, 1, 0)) == ProjPoint(0, 0, 1));
    CHECK(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0)));
    CHECK_FALSE(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)));
  }

  TEST_CASE("factoring singular conics") {
    const auto pair = std::get<LinePair>(factor_degenerate(parse_conic("X^2 - Y^2")));
    CHECK(Conic::product(pair.first, pair.second) == parse_conic("X^2 - Y^2"));
    const auto c = parse_conic("2*X^2 + Z^2");
    const auto q = std::get<LinePair>(factor_degenerate(c));
    CHECK(q.first.to_string().find("sqrt(-2)") != std::string::npos);
    CHECK(projectively_equal(Conic::product(q.first, q.second).matrix(), c.matrix()));
    const auto dbl = std::get<DoubleLine>(factor_degenerate(parse_conic("Z^2")));
    CHECK(dbl.line == Line(0, 0, 1));
    const auto e = parse_conic("(X + Y - Z)*(2*X - Y + 3*Z)");
    const auto r = std::get<LinePair>(factor_degenerate(e));
    CHECK(projectively_equal(Conic::product(r.first, r.second).matrix(), e.matrix()));
    CHECK_THROWS_AS(factor_degenerate(parse_conic("X^2 + Y^2 + Z^2")), InputError);
  }

  TEST_CASE("line meets conic") {
    const auto pts = line_conic_intersection(Line(0, 0, 1), parse_conic("X^2 - Y^2 + Z^2"));
    CHECK(pts.size() == 2);
    for (const auto& p : pts) CHECK(parse_conic("X^2 - Y^2 + Z^2").evaluate(p).is_zero());
    CHECK_THROWS_AS(line_conic_intersection(Line(1, -1, 0), parse_conic("X^2 - Y^2")), InputError);
  }

  TEST_CASE("determinant cubic and singular members") {
    const auto f = parse_conic("Z^2");
    const auto g = parse_conic("XY");
    const auto k = determinant_cubic(f, g);
    CHECK(k == std::array<Rational, 4>{0, 0, Rational(-1) / 4, 0});
    const auto members = nodal_members(f, g);
    REQUIRE(members.size() == 2);
    CHECK(members[0].t == PencilParameter{0, 1});
    CHECK(members[1].t == PencilParameter{1, 0});
    CHECK(members[1].multiplicity == 2);
    CHECK(members[1].rank == 1);
    CHECK_THROWS_AS(nodal_members(parse_conic("XY"), parse_conic("XZ")), DegeneratePencil);
    CHECK_THROWS_AS(nodal_members(parse_conic("X^2 + Y^2 + Z^2"), parse_conic("X^2 + 2*XY")),
                    IrrationalNodalParameter);
    CHECK_THROWS_AS(nodal_members(parse_conic("XY"), parse_conic("2*XY")), InputError);
  }

  TEST_CASE("cubic evaluates the determinant") {
    const auto f = parse_conic("X^2 + 3*YZ - XY");
    const auto g = parse_conic("Y^2 - Z^2 + 2*XZ");
    const auto k = determinant_cubic(f, g);
    for (int mu = -2; mu <= 2; ++mu)
      for (int la = -2; la <= 2; ++la) {
        const auto det = (f * QuadExt(mu) + g * QuadExt(la)).matrix().determinant();
        const Rational expected = k[0] * mu * mu * mu + k[1] * mu * mu * la + k[2] * mu * la * la + k[3] * la * la * la;
        CHECK(det == QuadExt(expected));
      }
  }

  TEST_CASE("base locus of a general pencil") {
    const auto locus = base_locus(parse_conic("X^2 - Z^2"), parse_conic("Y^2 - Z^2"));
    const auto pts = std::get<std::vector<ProjPoint>>(locus);
    CHECK(pts.size() == 4);
    for (const auto& p : pts) CHECK(p.coords()[0] == QuadExt(1));
    const auto [f, g] = pencil_through({pts[0], pts[1], pts[2], pts[3]});
    CHECK(same_span({f, g}, {parse_conic("X^2 - Z^2"), parse_conic("Y^2 - Z^2")}));
  }

  TEST_CASE("non-general pencils") {
    auto reason = [](const char* f, const char* g) {
      return std::get<NotGeneral>(base_locus(parse_conic(f), parse_conic(g))).reason;
    };
    CHECK(reason("XY", "XZ") == NotGeneralReason::CommonComponent);
    CHECK(reason("Z^2", "XY") == NotGeneralReason::RepeatedBasePoint);
    CHECK(reason("X^2 - Y^2", "Z^2") == NotGeneralReason::RepeatedBasePoint);
  }

  TEST_CASE("D8 representation") {
    for (const auto& [a, b] : kSigns) {
      const auto suite = d8_case_suite(a, b, 1, 1);
      CHECK(suite.sym2_rotation == Mat6{{0, 1, 0, 0, 0, 0},
                                        {1, 0, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0},
                                        {0, 0, 0, 0, a, 0},
                                        {0, 0, 0, -a, 0, 0},
                                        {0, 0, 0, 0, 0, -1}});
      CHECK(suite.sym2_reflection == Mat6{{1, 0, 0, 0, 0, 0},
                                          {0, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, -b, 0, 0},
                                          {0, 0, 0, 0, b, 0},
                                          {0, 0, 0, 0, 0, -1}});
      const auto r = suite.rotation, s = suite.reflection;
      CHECK(projectively_equal(r * r * r * r, Mat3::identity(3)));
      CHECK(projectively_equal(s * s, Mat3::identity(3)));
      CHECK(projectively_equal(s * r * s.inverse(), r.inverse()));
      CHECK(sym2(r * s) == suite.sym2_rotation * suite.sym2_reflection);
      CHECK(suite.cases.size() == 9);
      CHECK(suite.invariant_lines.size() == 4);
      CHECK(same_span(suite.invariant_plane, {parse_conic("YZ"), parse_conic("XZ")}));
      for (const auto& pc : suite.cases) {
        CHECK(pencil_invariant(pc.rep, pc.f, pc.g));
        CHECK(analyze(pc).general() == (pc.number >= 8));
      }
    }
    CHECK_THROWS_AS(d8_case_suite(2, 1, 1, 1), InputError);
    CHECK_THROWS_AS(d8_case_suite(1, 1, 0, 1), InputError);
  }

  TEST_CASE("D8 case 8 action on base points") {
    const auto suite = d8_case_suite(1, 1, 1, 1);
    const auto& pc = suite.cases[7];
    const auto an = analyze(pc);
    REQUIRE(an.general());
    const auto s = rt(-2);
    CHECK(an.base[0] == ProjPoint(1, 1, s));
    for (const auto& p : an.base) CHECK(on_both(pc, p));
    const std::vector<std::pair<const char*, int>> table{
        {"()", 0},          {"(14)(23)", 0}, {"(13)", 1}, {"(1432)", 1},
        {"(13)(24)", 2},    {"(12)(34)", 2}, {"(1234)", 3}, {"(24)", 3}};
    for (const auto& [g, target] : table) CHECK(an.sigma->point_action(p4(g))(0) == target);
    CHECK(an.sigma->decomposition() ==
          BurnsideElement::basis(an.sigma->ring(), an.sigma->ring()->class_of(PermGroup::generate(
                                                       std::vector<Permutation>{p4("(14)(23)")}, 4))));
    CHECK_FALSE(an.report->equal);
  }

  TEST_CASE("D8 case 9 lives over Q(i)") {
    const auto suite = d8_case_suite(1, 1, 1, 1);
    const auto& pc = suite.cases[8];
    const auto an = analyze(pc);
    REQUIRE(an.general());
    const auto i = rt(-1);
    const std::vector<ProjPoint> expected_points{ProjPoint(0, 1, i), ProjPoint(0, 1, -i), ProjPoint(1, 0, i),
                                                 ProjPoint(1, 0, -i)};
    for (const auto& p : expected_points) CHECK(std::find(an.base.begin(), an.base.end(), p) != an.base.end());
    for (const auto& p : an.base) CHECK(on_both(pc, p));
    CHECK(an.sigma->decomposition() ==
          BurnsideElement::basis(an.sigma->ring(),
                                 an.sigma->ring()->class_of(PermGroup::generate(std::vector<Permutation>{p4("(24)")}, 4))));
    CHECK_FALSE(an.report->equal);
  }

  TEST_CASE("D8 general cases with other parameters") {
    for (const auto& [a, b] : kSigns)
      for (const auto& [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {-3, 2}, {2, -1}}) {
        const auto suite = d8_case_suite(a, b, c, d);
        for (int n : {8, 9}) {
          const auto& pc = suite.cases[static_cast<std::size_t>(n - 1)];
          const auto an = analyze(pc);
          REQUIRE(an.general());
          for (const auto& p : an.base) CHECK(on_both(pc, p));
          const auto [f, g] = pencil_through({an.base[0], an.base[1], an.base[2], an.base[3]});
          CHECK(same_span({f, g}, {pc.f, pc.g}));
          CHECK(an.report->lhs.cardinality() == 3);
        }
      }
  }

  TEST_CASE("Klein pencil") {
    const auto pc = klein_counterexample();
    CHECK(pc.rep.matrix(p4("(14)(23)")) == Mat3{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}});
    CHECK(pc.rep.matrix(p4("()")) == Mat3::identity(3));
    for (const auto& g : pc.rep.group().elements())
      for (const auto& h : pc.rep.group().elements())
        CHECK(projectively_equal(pc.rep.matrix(g) * pc.rep.matrix(h), pc.rep.matrix(g * h)));
    const std::vector<ProjPoint> orbit{ProjPoint(1, 2, 3), ProjPoint(1, 2, -1), ProjPoint(1, -2, -1),
                                       ProjPoint(-3, -2, -1)};
    CHECK(pc.labels == orbit);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k) CHECK_FALSE(collinear(orbit[i], orbit[j], orbit[k]));
    const auto an = analyze(pc);
    REQUIRE(an.general());
    CHECK(an.invariant);
    for (const auto& p : an.base) CHECK(on_both(pc, p));
    CHECK(an.sigma->decomposition() == BurnsideElement::regular(an.sigma->ring()));
    CHECK_FALSE(an.report->equal);
    std::vector<Pairing> sorted = an.pairings;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Pairing>{Pairing(0), Pairing(1), Pairing(2)});
    for (std::size_t i = 0; i < an.members.size(); ++i) {
      const auto lines = std::get<LinePair>(factor_degenerate(an.members[i].conic));
      for (const auto& block : an.pairings[i].blocks()) {
        const auto& p = an.base[static_cast<std::size_t>(block[0])];
        const auto& q = an.base[static_cast<std::size_t>(block[1])];
        CHECK(((lines.first.contains(p) && lines.first.contains(q)) ||
               (lines.second.contains(p) && lines.second.contains(q))));
      }
    }
  }

  TEST_CASE("invariance test rejects a non-invariant span") {
    const auto suite = d8_case_suite(1, 1, 1, 1);
    CHECK_FALSE(pencil_invariant(suite.cases[0].rep, parse_conic("X^2"), parse_conic("YZ")));
    CHECK(pencil_invariant(suite.cases[0].rep, parse_conic("Z^2"), parse_conic("XY")));
  }

  TEST_CASE("projective representations reject inconsistent data") {
    const auto z2 = PermGroup::generate(std::vector<Permutation>{p4("(12)")}, 4);
    const Mat3 m{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(ProjectiveRep::from_generators(z2, {p4("(12)")}, {m}), InputError);
    const Mat3 flip{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK_NOTHROW(ProjectiveRep::from_generators(z2, {p4("(12)")}, {flip}));
  }
}
