#include "eqconic/pencil.hpp"

#include <algorithm>
#include <set>

#include "eqconic/error.hpp"

namespace eqconic {

namespace {

using Poly = std::vector<Rational>;  // ascending powers

Rational eval(const Poly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// p / (t - r), assuming p(r) == 0.
Poly deflate(const Poly& p, const Rational& r) {
  Poly q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw ScopeError("determinant cubic coefficients too large for the rational root search");
  const auto v = n.convert_to<std::int64_t>();
  std::vector<BigInt> out;
  for (std::int64_t d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  return out;
}

// Rational roots with multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(Poly p) {
  std::vector<std::pair<Rational, int>> roots;
  trim(p);
  int zero_mult = 0;
  while (!p.empty() && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
  if (p.size() <= 1) return roots;

  BigInt lcm = 1;
  for (const auto& c : p) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  std::vector<BigInt> ints;
  for (const auto& c : p) ints.push_back(boost::multiprecision::numerator(Rational(c * lcm)));

  std::set<Rational> candidates;
  for (const auto& a : divisors(ints.front()))
    for (const auto& b : divisors(ints.back())) {
      candidates.insert(Rational(a, b));
      candidates.insert(Rational(-a, b));
    }
  for (const auto& r : candidates) {
    int mult = 0;
    while (p.size() > 1 && eval(p, r) == 0) {
      p = deflate(p, r);
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool proportional(const Conic& a, const Conic& b) {
  return Matrix::from_rows({a.vec(), b.vec()}).rank() < 2;
}

Vec monomials(const ProjPoint& p) {
  const auto& c = p.coords();
  return {c[0] * c[0], c[1] * c[1], c[2] * c[2], c[1] * c[2], c[0] * c[2], c[0] * c[1]};
}

bool line_on_conic(const Line& l, const Conic& c) {
  const auto pts = l.points();
  const Vec mid{pts[0].coords()[0] + pts[1].coords()[0], pts[0].coords()[1] + pts[1].coords()[1],
                pts[0].coords()[2] + pts[1].coords()[2]};
  return c.evaluate(pts[0]).is_zero() && c.evaluate(pts[1]).is_zero() && c.evaluate(mid).is_zero();
}

}  // namespace

std::string PencilParameter::to_string() const { return "[" + mu.str() + ":" + lambda.str() + "]"; }

std::array<Rational, 4> determinant_cubic(const Conic& f, const Conic& g) {
  const Mat3 a = f.matrix();
  const Mat3 b = g.matrix();
  auto p = [&](long long mu, long long lambda) {
    return (a * QuadExt(mu) + b * QuadExt(lambda)).determinant().to_rational();
  };
  const Rational k0 = p(1, 0);
  const Rational k3 = p(0, 1);
  const Rational plus = p(1, 1) - k0 - k3;    // k1 + k2
  const Rational minus = p(1, -1) - k0 + k3;  // k2 - k1
  return {k0, (plus - minus) / 2, (plus + minus) / 2, k3};
}

std::vector<NodalMember> nodal_members(const Conic& f, const Conic& g) {
  if (proportional(f, g)) throw InputError("the two conics are proportional and do not span a pencil");
  const auto k = determinant_cubic(f, g);
  if (k[0] == 0 && k[1] == 0 && k[2] == 0 && k[3] == 0)
    throw DegeneratePencil("determinant cubic vanishes identically: every member is singular");

  // t = [1:s] gives sum k[j] s^j; [0:1] accounts for the missing degree.
  Poly q{k[0], k[1], k[2], k[3]};
  trim(q);
  std::vector<std::pair<PencilParameter, int>> params;
  const int at_infinity = 3 - static_cast<int>(q.size() - 1);
  if (at_infinity) params.push_back({PencilParameter{0, 1}, at_infinity});
  int found = at_infinity;
  for (const auto& [s, mult] : rational_roots(q)) {
    params.push_back({PencilParameter{1, s}, mult});
    found += mult;
  }
  if (found < 3) throw IrrationalNodalParameter("determinant cubic has a root that is not rational");

  std::vector<NodalMember> members;
  for (const auto& [t, mult] : params) {
    Conic c = f * QuadExt(t.mu) + g * QuadExt(t.lambda);
    const auto rank = c.matrix().rank();
    members.push_back(NodalMember{t, std::move(c), mult, rank});
  }
  return members;
}

std::vector<ProjPoint> line_conic_intersection(const Line& line, const Conic& c) {
  const auto pts = line.points();
  const Vec p = pts[0].vec();
  const Vec q = pts[1].vec();
  const Vec sum{p[0] + q[0], p[1] + q[1], p[2] + q[2]};
  const QuadExt a = c.evaluate(p);
  const QuadExt cc = c.evaluate(q);
  const QuadExt b = c.evaluate(sum) - a - cc;
  if (a.is_zero() && b.is_zero() && cc.is_zero()) throw InputError("line " + line.to_string() + " lies on the conic");

  auto combine = [&](const QuadExt& s, const QuadExt& u) {
    return ProjPoint(Vec{s * p[0] + u * q[0], s * p[1] + u * q[1], s * p[2] + u * q[2]});
  };
  std::vector<ProjPoint> out;
  if (a.is_zero()) {
    out.push_back(combine(1, 0));
    if (!b.is_zero()) out.push_back(combine(cc, -b));
  } else {
    const QuadExt disc = b * b - QuadExt(4) * a * cc;
    const auto root = disc.sqrt();
    if (!root) throw ScopeError("square root of " + disc.to_string() + " needs a second quadratic extension");
    // a s^2 + b s u + c u^2 with u = 1
    const QuadExt two_a = QuadExt(2) * a;
    out.push_back(combine((-b + *root) / two_a, 1));
    if (!root->is_zero()) out.push_back(combine((-b - *root) / two_a, 1));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
  return out;
}

Degeneration factor_degenerate(const Conic& c) {
  if (c.is_zero()) throw InputError("zero conic");
  const Mat3 a = c.matrix();
  const auto rank = a.rank();
  if (rank == 3) throw InputError("conic " + c.to_string() + " is nonsingular");
  if (rank == 1) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vec row = a.row(i);
      if (std::any_of(row.begin(), row.end(), [](const QuadExt& x) { return !x.is_zero(); }))
        return DoubleLine{Line(row)};
    }
  }
  const ProjPoint vertex(a.kernel().front());
  std::size_t i = 0;
  while (vertex.coords()[i].is_zero()) ++i;
  Vec axis(3);
  axis[i] = 1;
  const auto hits = line_conic_intersection(Line(axis), c);
  if (hits.size() != 2) throw InputError("conic " + c.to_string() + " does not split into two lines");
  Line l1 = Line::through(vertex, hits[0]);
  Line l2 = Line::through(vertex, hits[1]);
  if (canonical_less(l2, l1)) std::swap(l1, l2);
  return LinePair{std::move(l1), std::move(l2)};
}

std::string to_string(NotGeneralReason reason) {
  switch (reason) {
    case NotGeneralReason::CommonComponent: return "common component";
    case NotGeneralReason::RepeatedBasePoint: return "repeated base point";
    case NotGeneralReason::ThreeCollinear: return "three collinear";
  }
  return "unknown";
}

BaseLocus base_locus(const Conic& f, const Conic& g) {
  std::vector<NodalMember> members;
  try {
    members = nodal_members(f, g);
  } catch (const DegeneratePencil&) {
    // Every member is singular: either a shared line or a singular base point.
    const auto deg = factor_degenerate(f);
    std::vector<Line> lines;
    if (const auto* pair = std::get_if<LinePair>(&deg)) {
      lines = {pair->first, pair->second};
    } else {
      lines = {std::get<DoubleLine>(deg).line};
    }
    for (const auto& l : lines)
      if (line_on_conic(l, g)) return NotGeneral{NotGeneralReason::CommonComponent};
    return NotGeneral{NotGeneralReason::RepeatedBasePoint};
  }
  for (const auto& m : members)
    if (m.multiplicity > 1 || m.rank < 2) return NotGeneral{NotGeneralReason::RepeatedBasePoint};

  std::string last_error;
  for (const auto& m : members) {
    try {
      const auto deg = factor_degenerate(m.conic);
      const auto& pair = std::get<LinePair>(deg);
      const Conic& other = proportional(m.conic, f) ? g : f;
      if (line_on_conic(pair.first, other) || line_on_conic(pair.second, other))
        return NotGeneral{NotGeneralReason::CommonComponent};
      std::vector<ProjPoint> points = line_conic_intersection(pair.first, other);
      for (auto& p : line_conic_intersection(pair.second, other)) points.push_back(std::move(p));
      std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
      points.erase(std::unique(points.begin(), points.end()), points.end());
      if (points.size() < 4) return NotGeneral{NotGeneralReason::RepeatedBasePoint};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
          for (std::size_t k = j + 1; k < 4; ++k)
            if (collinear(points[i], points[j], points[k])) return NotGeneral{NotGeneralReason::ThreeCollinear};
      for (const auto& p : points)
        if (!f.evaluate(p).is_zero() || !g.evaluate(p).is_zero())
          throw std::logic_error("base point " + p.to_string() + " is not on both conics");
      return points;
    } catch (const ScopeError& e) {
      last_error = e.what();
    }
  }
  throw ScopeError("no singular member yields the base locus within one quadratic extension: " + last_error);
}

std::array<Conic, 2> pencil_through(const std::array<ProjPoint, 4>& points) {
  std::vector<Vec> rows;
  for (const auto& p : points) rows.push_back(monomials(p));
  const auto kernel = Matrix::from_rows(rows).kernel();
  if (kernel.size() != 2)
    throw InputError("four points impose " + std::to_string(6 - kernel.size()) + " conditions on conics, expected 4");
  const auto basis = span_basis(kernel);
  return {Conic(basis[0]), Conic(basis[1])};
}

bool same_span(const std::vector<Conic>& a, const std::vector<Conic>& b) {
  std::vector<Vec> va;
  std::vector<Vec> vb;
  for (const auto& c : a) va.push_back(c.vec());
  for (const auto& c : b) vb.push_back(c.vec());
  return span_basis(va) == span_basis(vb);
}

ProjectiveRep ProjectiveRep::from_generators(const PermGroup& group, const std::vector<Permutation>& generators,
                                             const std::vector<Mat3>& matrices) {
  if (generators.size() != matrices.size()) throw InputError("one matrix per generator is required");
  for (const auto& m : matrices)
    if (m.rows() != 3 || m.cols() != 3 || m.determinant().is_zero())
      throw InputError("generator matrices must be invertible 3x3");
  std::vector<std::optional<Mat3>> table(group.order());
  table[0] = Mat3::identity(3);
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto y = group.index_of(generators[i] * group.elements()[x]);
        Mat3 m = matrices[i] * *table[x];
        if (!table[y]) {
          table[y] = std::move(m);
          next.push_back(y);
        } else if (!projectively_equal(*table[y], m)) {
          throw InputError("generator matrices violate a relation of the group at " +
                           group.elements()[y].to_string());
        }
      }
    frontier = std::move(next);
  }
  std::vector<Mat3> mats;
  for (auto& m : table) {
    if (!m) throw InputError("generators do not generate the group");
    mats.push_back(std::move(*m));
  }
  return ProjectiveRep(group, std::move(mats));
}

ProjectiveRep ProjectiveRep::from_elements(const PermGroup& group, std::vector<Mat3> matrices) {
  if (matrices.size() != group.order()) throw InputError("one matrix per group element is required");
  const auto& el = group.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j)
      if (!projectively_equal(matrices[group.index_of(el[i] * el[j])], matrices[i] * matrices[j]))
        throw InputError("matrices are not multiplicative up to scalars at " + el[i].to_string() + " * " +
                         el[j].to_string());
  return ProjectiveRep(group, std::move(matrices));
}

Mat6 ProjectiveRep::form_action(const Permutation& g) const { return sym2(contragredient(matrix(g))); }

bool pencil_invariant(const std::vector<Mat6>& actions, const Conic& f, const Conic& g) {
  for (const auto& s : actions) {
    const auto m = Matrix::from_rows({f.vec(), g.vec(), s * f.vec(), s * g.vec()});
    if (m.rank() != 2) return false;
  }
  return true;
}

bool pencil_invariant(const ProjectiveRep& rep, const Conic& f, const Conic& g) {
  std::vector<Mat6> actions;
  for (const auto& e : rep.group().elements()) actions.push_back(rep.form_action(e));
  return pencil_invariant(actions, f, g);
}

SigmaConfig induced_sigma(const ProjectiveRep& rep, const std::vector<ProjPoint>& base) {
  if (base.size() != 4) throw InputError("a base locus has four points");
  std::vector<Permutation> images;
  for (const auto& g : rep.group().elements()) {
    std::vector<int> img(4);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto moved = apply(rep.matrix(g), base[i]);
      const auto it = std::find(base.begin(), base.end(), moved);
      if (it == base.end())
        throw InputError(g.to_string() + " maps " + base[i].to_string() + " to " + moved.to_string() +
                         ", outside the base locus");
      img[i] = static_cast<int>(it - base.begin());
    }
    images.emplace_back(std::move(img));
  }
  return SigmaConfig(rep.group(), std::move(images));
}

std::vector<Pairing> member_pairings(const std::vector<ProjPoint>& base, const std::vector<NodalMember>& members) {
  if (base.size() != 4) throw InputError("a base locus has four points");
  std::vector<Pairing> out;
  std::set<int> seen;
  for (const auto& m : members) {
    const auto deg = factor_degenerate(m.conic);
    const auto* pair = std::get_if<LinePair>(&deg);
    if (!pair) throw InputError("member " + m.conic.to_string() + " is a double line");
    std::vector<int> on_first;
    std::vector<int> on_second;
    for (int i = 0; i < 4; ++i) {
      if (pair->first.contains(base[static_cast<std::size_t>(i)])) on_first.push_back(i);
      if (pair->second.contains(base[static_cast<std::size_t>(i)])) on_second.push_back(i);
    }
    if (on_first.size() != 2 || on_second.size() != 2)
      throw InputError("lines of " + m.conic.to_string() + " do not each contain two base points");
    const Pairing p = Pairing::containing(on_first[0], on_first[1]);
    if (!(Pairing::containing(on_second[0], on_second[1]) == p))
      throw InputError("lines of " + m.conic.to_string() + " do not partition the base points");
    if (!seen.insert(p.index()).second) throw InputError("two members give the same pairing");
    out.push_back(p);
  }
  if (out.size() != 3) throw InputError("expected three nodal members");
  return out;
}

}  // namespace eqconic
