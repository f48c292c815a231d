#include "eqconic/cli.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "eqconic/error.hpp"
#include "eqconic/presets.hpp"
#include "eqconic/report.hpp"

namespace eqconic {

namespace {

const std::set<std::string> kCommands{"verify-all", "verify", "counterexample", "marks", "theorem-sweep", "pencil"};

struct D8Params {
  int a;
  int b;
  Rational c;
  Rational d;
};

int parse_sign(const std::string& text, const char* name) {
  if (text == "1" || text == "+1") return 1;
  if (text == "-1") return -1;
  throw InputError(std::string("--") + name + " must be 1 or -1, got '" + text + "'");
}

D8Params parse_d8(const RunConfig& config) {
  D8Params p{parse_sign(config.a, "a"), parse_sign(config.b, "b"), parse_rational(config.c), parse_rational(config.d)};
  if (p.c == 0) throw InputError("--c must be nonzero");
  if (p.d == 0) throw InputError("--d must be nonzero");
  if (config.case_number < 0 || config.case_number > 9) throw InputError("--case must be between 1 and 9");
  return p;
}

void validate(const RunConfig& config) {
  if (!kCommands.count(config.command)) throw InputError("unknown command '" + config.command + "'");
  if (config.format != "text" && config.format != "json")
    throw InputError("--format must be text or json, got '" + config.format + "'");
  if ((config.command == "verify-all" || config.command == "verify" || config.command == "marks") &&
      config.group.empty())
    throw InputError("--group is required for " + config.command);
  if (config.command == "verify" && config.sigma.empty()) throw InputError("--sigma is required for verify");
  if (config.command == "counterexample") {
    if (config.target != "klein" && config.target != "d8")
      throw InputError("counterexample target must be klein or d8, got '" + config.target + "'");
    if (config.target == "d8") parse_d8(config);
  }
  if (config.command == "pencil") {
    if (config.f.empty() || config.g.empty()) throw InputError("--f and --g are required for pencil");
    parse_rational(config.c);
    parse_rational(config.d);
  }
}

std::string witnesses(const VerificationReport& r) {
  std::string out;
  for (const auto& row : r.table)
    if (row.lhs != row.rhs)
      out += (out.empty() ? "" : "; ") + row.subgroup + " " + std::to_string(row.lhs) + "/" + std::to_string(row.rhs);
  return out;
}

int cmd_verify_all(const RunConfig& config, std::ostream& out) {
  const auto named = parse_group(config.group);
  const auto reports = verify_all(named.group, named.name);
  bool all_equal = true;
  for (const auto& r : reports) all_equal = all_equal && r.equal;
  if (config.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    out << Json{{"group", named.name}, {"reports", std::move(list)}, {"all_equal", all_equal}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      out << "== configuration " << i + 1 << " of " << reports.size() << "\n";
      write_text(out, reports[i]);
    }
    out << "all equal: " << (all_equal ? "true" : "false") << "\n";
  }
  return all_equal ? kExpected : kUnexpected;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto named = parse_group(config.group);
  const auto ring = BurnsideRing::of(named.group);
  const auto report = verify(realize_sigma(parse_sigma(config.sigma, ring)), named.name);
  if (config.format == "json")
    out << to_json(report).dump(2) << "\n";
  else
    write_text(out, report);
  return report.equal ? kExpected : kUnexpected;
}

int cmd_marks(const RunConfig& config, std::ostream& out) {
  const auto named = parse_group(config.group);
  const auto ring = BurnsideRing::of(named.group);
  if (config.format == "json")
    out << marks_json(*ring).dump(2) << "\n";
  else
    write_marks(out, *ring);
  return kExpected;
}

int cmd_klein(const RunConfig& config, std::ostream& out) {
  const auto pencil = klein_counterexample();
  const auto analysis = analyze(pencil);
  const bool observed = analysis.general() && !analysis.report->equal;
  if (config.format == "json") {
    Json j = to_json(pencil, analysis);
    j["expected_inequality_observed"] = observed;
    out << j.dump(2) << "\n";
  } else {
    out << "seed point p = " << klein_seed_point().to_string() << ", b_i = g_i . p\n";
    for (const auto& g : pencil.rep.group().elements())
      out << "matrix of " << g.to_string() << ": " << pencil.rep.matrix(g).to_string() << "\n";
    write_text(out, pencil, analysis);
    out << "expected inequality observed: " << (observed ? "true" : "false") << "\n";
  }
  return observed ? kExpected : kUnexpected;
}

bool d8_case_as_expected(const PencilCase& pc, const PencilAnalysis& an) {
  if (pc.number <= 7) return !an.general();
  return an.general() && !an.report->equal;
}

int cmd_d8(const RunConfig& config, std::ostream& out) {
  const auto p = parse_d8(config);
  const auto suite = d8_case_suite(p.a, p.b, p.c, p.d);
  std::vector<std::pair<const PencilCase*, PencilAnalysis>> results;
  for (const auto& pc : suite.cases)
    if (config.case_number == 0 || pc.number == config.case_number) results.emplace_back(&pc, analyze(pc));
  bool expected = true;
  for (const auto& [pc, an] : results) expected = expected && d8_case_as_expected(*pc, an);

  if (config.format == "json") {
    auto matrix_json = [](const Matrix& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : m.row(i)) row.push_back(x.to_string());
        rows.push_back(std::move(row));
      }
      return rows;
    };
    Json lines = Json::array();
    for (const auto& c : suite.invariant_lines) lines.push_back(c.to_string());
    Json plane = Json::array();
    for (const auto& c : suite.invariant_plane) plane.push_back(c.to_string());
    Json cases = Json::array();
    for (const auto& [pc, an] : results) {
      Json j = to_json(*pc, an);
      j["as_expected"] = d8_case_as_expected(*pc, an);
      cases.push_back(std::move(j));
    }
    out << Json{{"a", p.a},
                {"b", p.b},
                {"c", p.c.str()},
                {"d", p.d.str()},
                {"rotation", matrix_json(suite.rotation)},
                {"reflection", matrix_json(suite.reflection)},
                {"sym2_rotation", matrix_json(suite.sym2_rotation)},
                {"sym2_reflection", matrix_json(suite.sym2_reflection)},
                {"invariant_lines", std::move(lines)},
                {"invariant_plane", std::move(plane)},
                {"cases", std::move(cases)},
                {"expected_outcome_observed", expected}}
                   .dump(2)
            << "\n";
  } else {
    out << "a = " << p.a << ", b = " << p.b << ", c = " << p.c.str() << ", d = " << p.d.str() << "\n";
    out << "(1234) -> " << suite.rotation.to_string() << "\n";
    out << "(13) -> " << suite.reflection.to_string() << "\n";
    out << "Sym2 of (1234): " << suite.sym2_rotation.to_string() << "\n";
    out << "Sym2 of (13): " << suite.sym2_reflection.to_string() << "\n";
    out << "invariant lines:";
    for (const auto& c : suite.invariant_lines) out << " " << c.to_string() << ";";
    out << "\ninvariant plane:";
    for (const auto& c : suite.invariant_plane) out << " " << c.to_string() << ";";
    out << "\n";
    for (const auto& [pc, an] : results) {
      out << "\n";
      write_text(out, *pc, an);
    }
    out << "expected outcome observed: " << (expected ? "true" : "false") << "\n";
  }
  return expected ? kExpected : kUnexpected;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const auto cells = theorem_sweep();
  const bool ok = sweep_matches_scope(cells);
  std::map<std::string, std::pair<int, int>> tally;
  std::vector<std::string> order;
  for (const auto& c : cells) {
    if (!tally.count(c.group)) order.push_back(c.group);
    auto& t = tally[c.group];
    (c.report.equal ? t.first : t.second)++;
  }
  if (config.format == "json") {
    Json results = Json::array();
    for (const auto& c : cells)
      results.push_back({{"group", c.group},
                         {"type", c.type},
                         {"sigma", c.report.sigma.decomposition().to_string()},
                         {"equal", c.report.equal},
                         {"lhs", c.report.lhs.to_string()},
                         {"rhs", c.report.rhs.to_string()},
                         {"table", table_json(c.report.table)}});
    Json summary = Json::array();
    for (const auto& g : order) summary.push_back({{"group", g}, {"equal", tally[g].first}, {"unequal", tally[g].second}});
    out << Json{{"results", std::move(results)}, {"summary", std::move(summary)}, {"matches_scope", ok}}.dump(2)
        << "\n";
  } else {
    out << "group | type | sigma | equal | witnesses (K lhs/rhs)\n";
    for (const auto& c : cells)
      out << c.group << " | " << c.type << " | " << c.report.sigma.decomposition().to_string() << " | "
          << (c.report.equal ? "true" : "false") << " | " << witnesses(c.report) << "\n";
    out << "\ngroup | configs | equal | unequal\n";
    for (const auto& g : order)
      out << g << " | " << tally[g].first + tally[g].second << " | " << tally[g].first << " | " << tally[g].second
          << "\n";
    out << "failures confined to Z2xZ2 and D8 types: " << (ok ? "true" : "false") << "\n";
  }
  return ok ? kExpected : kUnexpected;
}

int cmd_pencil(const RunConfig& config, std::ostream& out) {
  const std::map<std::string, Rational> params{{"c", parse_rational(config.c)}, {"d", parse_rational(config.d)}};
  const auto f = parse_conic(config.f, params);
  const auto g = parse_conic(config.g, params);
  const auto trivial = PermGroup::trivial(4);
  auto rep = ProjectiveRep::from_elements(trivial, {Mat3::identity(3)});
  const PencilCase pc{0, "trivial", f, g, std::move(rep), {}};
  const auto analysis = analyze(pc);
  if (config.format == "json")
    out << to_json(pc, analysis).dump(2) << "\n";
  else
    write_text(out, pc, analysis);
  return kExpected;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.command == "verify-all") return cmd_verify_all(config, out);
  if (config.command == "verify") return cmd_verify(config, out);
  if (config.command == "marks") return cmd_marks(config, out);
  if (config.command == "theorem-sweep") return cmd_sweep(config, out);
  if (config.command == "pencil") return cmd_pencil(config, out);
  return config.target == "klein" ? cmd_klein(config, out) : cmd_d8(config, out);
}

}  // namespace

std::vector<SweepCell> theorem_sweep() {
  std::vector<SweepCell> cells;
  for (const auto& preset : group_presets()) {
    const auto named = parse_group(preset.name);
    const auto type = abstract_type(named.group);
    for (auto& r : verify_all(named.group, named.name)) cells.push_back({named.name, type, std::move(r)});
  }
  return cells;
}

bool sweep_matches_scope(const std::vector<SweepCell>& cells) {
  bool klein_fails = false;
  bool d8_fails = false;
  for (const auto& c : cells) {
    if (c.report.equal) continue;
    if (c.type != "Z2xZ2" && c.type != "D8") return false;
    klein_fails = klein_fails || c.group == "Z2xZ2";
    d8_fails = d8_fails || c.group == "D8";
  }
  return klein_fails && d8_fails;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    std::ostringstream buffer;
    const int code = dispatch(config, buffer);
    if (config.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.output);
      if (!file) throw InputError("cannot open output file '" + config.output + "'");
      file << buffer.str();
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ScopeError& e) {
    err << "out of scope: " << e.what() << "\n";
  } catch (const DegeneratePencil& e) {
    err << "degenerate pencil: " << e.what() << "\n";
  }
  return kInvalid;
}

}  // namespace eqconic
