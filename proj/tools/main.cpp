#include <iostream>

#include <CLI11.hpp>

#include "eqconic/cli.hpp"

int main(int argc, char** argv) {
  eqconic::RunConfig config;
  CLI::App app{"Burnside-ring counts of nodal conics in group-invariant pencils"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", config.output, "write the report to this file");
  };

  auto* verify_all = app.add_subcommand("verify-all", "verify every four-point configuration of a group");
  verify_all->add_option("-g,--group", config.group, "preset name or generator list")->required();
  common(verify_all);

  auto* verify = app.add_subcommand("verify", "verify one configuration");
  verify->add_option("-g,--group", config.group, "preset name or generator list")->required();
  verify->add_option("-s,--sigma", config.sigma, "orbit types, e.g. \"2*+[G]\"")->required();
  common(verify);

  auto* counter = app.add_subcommand("counterexample", "reproduce the Klein or D8 counterexample");
  counter->require_subcommand(1);
  auto* klein = counter->add_subcommand("klein", "Klein four-group acting through the standard representation");
  common(klein);
  auto* d8 = counter->add_subcommand("d8", "D8 acting on conics through Sym^2");
  d8->add_option("--a", config.a, "trace of the character on the rotation, 1 or -1");
  d8->add_option("--b", config.b, "trace of the character on the reflection, 1 or -1");
  d8->add_option("--c", config.c, "rational c in c*(X^2+Y^2) + d*Z^2");
  d8->add_option("--d", config.d, "rational d in c*(X^2+Y^2) + d*Z^2");
  d8->add_option("--case", config.case_number, "pencil number 1..9 (default: all)");
  common(d8);

  auto* marks = app.add_subcommand("marks", "print the table of marks");
  marks->add_option("-g,--group", config.group, "preset name or generator list")->required();
  common(marks);

  auto* sweep = app.add_subcommand("theorem-sweep", "verify every configuration of every subgroup class of S4");
  common(sweep);

  auto* pencil = app.add_subcommand("pencil", "base locus and singular members of a pencil");
  pencil->add_option("--f", config.f, "first conic, e.g. \"X^2 - Y^2\"")->required();
  pencil->add_option("--g", config.g, "second conic, e.g. \"c*(X^2+Y^2) + d*Z^2\"")->required();
  pencil->add_option("--c", config.c, "value substituted for c");
  pencil->add_option("--d", config.d, "value substituted for d");
  common(pencil);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eqconic::kInvalid;
  }

  for (auto* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) config.target = inner->get_name();
  }
  return eqconic::run(config, std::cout, std::cerr);
}
