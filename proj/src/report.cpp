#include "eqconic/report.hpp"

namespace eqconic {

namespace {

std::string join_pairings(const std::vector<Pairing>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + p.to_string();
  return out;
}

Json point_json(const ProjPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords()) coords.push_back(c.to_string());
  return coords;
}

std::string cubic_to_string(const std::array<Rational, 4>& k) {
  static constexpr std::array<const char*, 4> monomials{"mu^3", "mu^2*lambda", "mu*lambda^2", "lambda^3"};
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (k[i] == 0) continue;
    const bool neg = k[i] < 0;
    const Rational mag = neg ? Rational(-k[i]) : k[i];
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += (mag == 1 ? "" : mag.str() + "*") + monomials[i];
  }
  return out.empty() ? "0" : out;
}

std::string point_action_summary(const SigmaConfig& sigma) {
  std::string out;
  for (const auto& g : sigma.group().generators()) {
    if (!out.empty()) out += ", ";
    out += g.to_string() + " -> " + sigma.point_action(g).to_string();
  }
  return out.empty() ? "trivial" : out;
}

}  // namespace

Json to_json(const BurnsideElement& x) {
  Json coeffs = Json::array();
  const auto& ring = x.context();
  for (std::size_t k = 0; k < ring.rank(); ++k) coeffs.push_back({{"class", ring.class_name(k)}, {"n", x.coeff(k)}});
  return {{"ambient", ring.ambient_name()}, {"coeffs", std::move(coeffs)}};
}

Json table_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"class", r.subgroup}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return out;
}

Json to_json(const VerificationReport& report) {
  Json orbits = Json::array();
  for (const auto& o : report.orbits) {
    Json members = Json::array();
    for (const auto& p : o.orbit) members.push_back(p.to_string());
    orbits.push_back({{"representative", o.representative.to_string()},
                      {"orbit", std::move(members)},
                      {"stabilizer", o.stabilizer.to_string()},
                      {"branch_set", to_json(o.branch_set)},
                      {"weight", to_json(o.weight)}});
  }
  return {{"group", report.group_name},          {"sigma", to_json(report.sigma.decomposition())},
          {"orbits", std::move(orbits)},         {"lhs", to_json(report.lhs)},
          {"rhs", to_json(report.rhs)},          {"equal", report.equal},
          {"table", table_json(report.table)}};
}

Json marks_json(const BurnsideRing& ring) {
  Json classes = Json::array();
  for (const auto& cls : ring.classes()) {
    Json members = Json::array();
    for (const auto& m : cls.members) members.push_back(m.to_string());
    classes.push_back({{"index", cls.index},
                       {"class", ring.class_name(cls.index)},
                       {"order", cls.representative.order()},
                       {"members", std::move(members)}});
  }
  return {{"group", ring.ambient_name()}, {"classes", std::move(classes)}, {"marks", ring.table().marks}};
}

Json to_json(const PencilCase& pencil, const PencilAnalysis& analysis) {
  Json members = Json::array();
  for (std::size_t i = 0; i < analysis.members.size(); ++i) {
    const auto& m = analysis.members[i];
    Json entry{{"t", m.t.to_string()},
               {"conic", m.conic.to_string()},
               {"multiplicity", m.multiplicity},
               {"rank", m.rank}};
    if (analysis.general()) {
      entry["lines"] = degeneration_to_string(factor_degenerate(m.conic));
      entry["pairing"] = analysis.pairings[i].to_string();
    }
    members.push_back(std::move(entry));
  }
  Json cubic = Json::array();
  for (const auto& k : analysis.cubic) cubic.push_back(k.str());
  Json out{{"case", pencil.number},
           {"group", pencil.group_name},
           {"f", pencil.f.to_string()},
           {"g", pencil.g.to_string()},
           {"invariant", analysis.invariant},
           {"determinant_cubic", std::move(cubic)},
           {"nodal_members", std::move(members)},
           {"general", analysis.general()}};
  if (!analysis.general()) {
    out["not_general"] = to_string(std::get<NotGeneral>(analysis.locus).reason);
    return out;
  }
  Json base = Json::array();
  for (const auto& p : analysis.base) base.push_back(point_json(p));
  out["base_locus"] = std::move(base);
  out["no_three_collinear"] = true;
  Json action = Json::array();
  for (const auto& g : analysis.sigma->group().elements())
    action.push_back({{"element", g.to_string()}, {"points", analysis.sigma->point_action(g).to_string()}});
  out["point_action"] = std::move(action);
  out["report"] = to_json(*analysis.report);
  out["subgroup_table"] = table_json(subgroup_rows(*analysis.report));
  return out;
}

void write_table(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "K <= G | LHS^K | RHS^K\n";
  for (const auto& r : rows) out << r.subgroup << " | " << r.lhs << " | " << r.rhs << "\n";
}

void write_text(std::ostream& out, const VerificationReport& report) {
  out << "group: " << report.group_name << " = " << report.sigma.group().to_string() << "\n";
  out << "sigma: " << report.sigma.decomposition().to_string() << "\n";
  out << "point action: " << point_action_summary(report.sigma) << "\n";
  for (const auto& o : report.orbits) {
    out << "orbit of " << o.representative.to_string() << ": {" << join_pairings(o.orbit) << "}, stabilizer "
        << o.stabilizer.to_string() << ", branches " << o.branch_set.to_string() << " in A(H), weight "
        << o.weight.to_string() << "\n";
  }
  out << "lhs: " << report.lhs.to_string() << "\n";
  out << "rhs: " << report.rhs.to_string() << "\n";
  write_table(out, report.table);
  out << "equal: " << (report.equal ? "true" : "false") << ", lhs = " << report.lhs.to_string() << "\n";
}

void write_marks(std::ostream& out, const BurnsideRing& ring) {
  out << "table of marks of " << ring.ambient_name() << "\n";
  for (const auto& cls : ring.classes())
    out << "  [" << cls.index << "] " << ring.class_name(cls.index) << ", order " << cls.representative.order()
        << ", " << cls.members.size() << (cls.members.size() == 1 ? " conjugate" : " conjugates") << "\n";
  out << "H \\ K";
  for (std::size_t k = 0; k < ring.rank(); ++k) out << " | " << k;
  out << "\n";
  for (std::size_t h = 0; h < ring.rank(); ++h) {
    out << h;
    for (std::size_t k = 0; k < ring.rank(); ++k) out << " | " << ring.table().at(h, k);
    out << "\n";
  }
}

void write_text(std::ostream& out, const PencilCase& pencil, const PencilAnalysis& analysis) {
  if (pencil.number) out << "case " << pencil.number << ": ";
  out << "pencil " << pencil.label() << "\n";
  out << "group: " << pencil.group_name << " = " << pencil.rep.group().to_string() << "\n";
  out << "invariant: " << (analysis.invariant ? "true" : "false") << "\n";
  out << "determinant cubic: " << cubic_to_string(analysis.cubic) << "\n";
  for (std::size_t i = 0; i < analysis.members.size(); ++i) {
    const auto& m = analysis.members[i];
    out << "singular member t = " << m.t.to_string() << ": " << m.conic.to_string();
    if (m.multiplicity > 1) out << " (multiplicity " << m.multiplicity << ")";
    if (analysis.general())
      out << " = " << degeneration_to_string(factor_degenerate(m.conic)) << ", pairing "
          << analysis.pairings[i].to_string();
    out << "\n";
  }
  if (!analysis.general()) {
    out << "not general: " << to_string(std::get<NotGeneral>(analysis.locus).reason) << "\n";
    return;
  }
  out << "base locus:";
  for (std::size_t i = 0; i < analysis.base.size(); ++i)
    out << (i ? "," : "") << " b" << i + 1 << " = " << analysis.base[i].to_string();
  out << "\nno three collinear: true\n";
  write_text(out, *analysis.report);
  out << "per subgroup:\n";
  write_table(out, subgroup_rows(*analysis.report));
}

std::string degeneration_to_string(const Degeneration& d) {
  if (const auto* pair = std::get_if<LinePair>(&d))
    return "(" + pair->first.to_string() + ")*(" + pair->second.to_string() + ")";
  return "(" + std::get<DoubleLine>(d).line.to_string() + ")^2";
}

}  // namespace eqconic
