#include "eqconic/counterexamples.hpp"

#include <algorithm>
#include <set>

#include "eqconic/error.hpp"

namespace eqconic {

namespace {

std::vector<ProjPoint> sorted(std::vector<ProjPoint> points) {
  std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
  return points;
}

// Common eigenspaces of two commuting-enough operators, one per eigenvalue pair.
std::vector<std::vector<Vec>> common_eigenspaces(const Mat6& s, const Mat6& t) {
  std::vector<std::vector<Vec>> spaces;
  const Mat6 id = Mat6::identity(6);
  for (int ls : {1, -1})
    for (int lt : {1, -1}) {
      const Mat6 a = s - id * QuadExt(ls);
      const Mat6 b = t - id * QuadExt(lt);
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < 6; ++i) {
        rows.push_back(a.row(i));
        rows.push_back(b.row(i));
      }
      auto kernel = Matrix::from_rows(rows).kernel();
      if (!kernel.empty()) spaces.push_back(span_basis(kernel));
    }
  return spaces;
}

bool same_conic_set(std::vector<Conic> a, std::vector<Conic> b) {
  auto less = [](const Conic& x, const Conic& y) {
    for (std::size_t i = 0; i < 6; ++i) {
      const auto c = canonical_compare(x.coeffs()[i], y.coeffs()[i]);
      if (c != 0) return c < 0;
    }
    return false;
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

PencilAnalysis analyze(const PencilCase& pencil) {
  PencilAnalysis out;
  out.invariant = pencil_invariant(pencil.rep, pencil.f, pencil.g);
  out.cubic = determinant_cubic(pencil.f, pencil.g);
  try {
    out.members = nodal_members(pencil.f, pencil.g);
  } catch (const DegeneratePencil&) {
  }
  out.locus = base_locus(pencil.f, pencil.g);
  if (!out.general()) return out;

  const auto& found = std::get<std::vector<ProjPoint>>(out.locus);
  if (pencil.labels.empty()) {
    out.base = found;
  } else {
    if (sorted(pencil.labels) != found) throw InputError("labelled points are not the base locus of the pencil");
    out.base = pencil.labels;
  }
  out.pairings = member_pairings(out.base, out.members);
  out.sigma = induced_sigma(pencil.rep, out.base);
  out.report = verify(*out.sigma, pencil.group_name);
  return out;
}

D8Suite d8_case_suite(int a, int b, const Rational& c, const Rational& d) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw InputError("a and b must be 1 or -1");
  if (c == 0 || d == 0) throw InputError("c and d must be nonzero");

  const auto group = PermGroup::generate(
      std::vector<Permutation>{Permutation::parse("(1234)", 4), Permutation::parse("(13)", 4)}, 4);
  // On the linear forms x, y, z: column j is the image of the j-th form.
  const Mat3 rotation{{0, -1, 0}, {1, 0, 0}, {0, 0, a}};
  const Mat3 reflection{{1, 0, 0}, {0, -1, 0}, {0, 0, b}};
  const Mat6 sr = sym2(rotation);
  const Mat6 ss = sym2(reflection);

  std::vector<Conic> lines;
  for (const auto& space : common_eigenspaces(sr, ss))
    for (const auto& v : space) lines.push_back(Conic(v));
  const std::vector<Conic> expected{parse_conic("Z^2"), parse_conic("XY"), parse_conic("X^2 - Y^2"),
                                    parse_conic("X^2 + Y^2")};
  if (!same_conic_set(lines, expected)) throw std::logic_error("unexpected common eigenspaces");

  std::vector<Conic> plane;
  for (const auto& v : (sr * sr + Mat6::identity(6)).kernel()) plane.push_back(Conic(v));
  if (plane.size() != 2 || !same_span(plane, {parse_conic("YZ"), parse_conic("XZ")}))
    throw std::logic_error("unexpected invariant plane");

  // Points transform by the contragredient of the action on forms.
  const auto rep = ProjectiveRep::from_generators(
      group, {Permutation::parse("(1234)", 4), Permutation::parse("(13)", 4)},
      {contragredient(rotation), contragredient(reflection)});

  const std::map<std::string, Rational> params{{"c", c}, {"d", d}};
  const Conic z2 = parse_conic("Z^2");
  const Conic xy = parse_conic("XY");
  const Conic minus = parse_conic("X^2 - Y^2");
  const Conic plus = parse_conic("X^2 + Y^2");
  const Conic mixed = parse_conic("c*(X^2+Y^2) + d*Z^2", params);
  const std::vector<std::pair<Conic, Conic>> spans{
      {parse_conic("YZ"), parse_conic("XZ")}, {z2, minus}, {z2, plus}, {z2, xy}, {minus, plus},
      {minus, xy},       {plus, xy},         {minus, mixed}, {xy, mixed}};

  std::vector<PencilCase> cases;
  for (std::size_t i = 0; i < spans.size(); ++i)
    cases.push_back(PencilCase{static_cast<int>(i + 1), "D8", spans[i].first, spans[i].second, rep, {}});
  // b1 = [1:1:s], b2 = [1:-1:s], b3 = [1:1:-s], b4 = [1:-1:-s] with s^2 = -2c/d
  const QuadExt s = QuadExt::sqrt_of(Rational(-2) * c / d);
  cases[7].labels = {ProjPoint(1, 1, s), ProjPoint(1, -1, s), ProjPoint(1, 1, -s), ProjPoint(1, -1, -s)};

  return D8Suite{a, b, c, d, group, rotation, reflection, sr, ss, std::move(lines), std::move(plane), std::move(cases)};
}

ProjPoint klein_seed_point() { return ProjPoint(1, 2, 3); }

PencilCase klein_counterexample() {
  const auto group = PermGroup::generate(
      std::vector<Permutation>{Permutation::parse("(12)(34)", 4), Permutation::parse("(13)(24)", 4)}, 4);
  const std::vector<std::pair<std::string, Mat3>> printed{
      {"()", Mat3::identity(3)},
      {"(12)(34)", Mat3{{-1, 1, 0}, {0, 1, 0}, {0, 1, -1}}},
      {"(13)(24)", Mat3{{0, -1, 1}, {0, -1, 0}, {1, -1, 0}}},
      {"(14)(23)", Mat3{{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}},
  };
  std::vector<Mat3> matrices(group.order());
  std::vector<ProjPoint> labels;
  for (const auto& [cycle, m] : printed) {
    matrices[group.index_of(Permutation::parse(cycle, 4))] = m;
    labels.push_back(apply(m, klein_seed_point()));
  }
  auto rep = ProjectiveRep::from_elements(group, std::move(matrices));
  const auto [f, g] = pencil_through({labels[0], labels[1], labels[2], labels[3]});
  return PencilCase{0, "Z2xZ2", f, g, std::move(rep), std::move(labels)};
}

}  // namespace eqconic
