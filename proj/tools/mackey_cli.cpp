#include <iostream>

#include "CLI11.hpp"
#include "mackey/suite.hpp"

int main(int argc, char** argv) {
  using namespace mackey;
  CLI::App app{"mackey: checks for twisted group rings, Mackey functors and induction theorems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  SuiteConfig cfg;
  bool family_given = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "builtin group name (C<n>, D<n>, S3, S4, A4, Q8, V4) or a JSON file");
    sub->add_option("--ring", cfg.ring, "Z, Z[i], Z[C3], ZxZ-swap, Z^n-perm, or a JSON ring file");
    sub->add_option("--seed", cfg.seed, "sampler seed");
    sub->add_option("--samples", cfg.samples, "random samples per check")->check(CLI::Range(1, 100000));
    sub->add_option("--family", cfg.family, "H | Hp:<p> | E | Ep:<p> | FC | proper | all")->each([&](const std::string&) { family_given = true; });
    sub->add_option("--coeff", cfg.coeff, "Z | Zp:<p> | Q | Z-half");
    sub->add_option("--functor", cfg.functor, "fixed_point | burnside | torsion (dress)");
    sub->add_option("--fixture", cfg.fixture, "JSON fixture (axioms: Mackey functor, twisted: morphism pair)");
    sub->add_option("--max-order", cfg.max_subgroup_order, "skip subgroups above this order");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "text | structured")->check(CLI::IsMember({"text", "structured", "json"}));
    sub->add_flag("--timing", cfg.timing, "include wall time in the report");
  };
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"group", "subgroup lattice, classes and orbit counting"},
      {"families", "hyperelementary, elementary and cyclic families"},
      {"axioms", "the seven Mackey axioms on sampled morphisms, or a functor fixture"},
      {"frobenius", "both Frobenius laws and bifunctoriality of Theta"},
      {"dress", "Green functor laws, the unit certificate and the induction isomorphism"},
      {"artin", "table of marks and the Artin induction solver"},
      {"twisted", "composition laws, twists and natural isomorphism witnesses"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const Report rep = run_suite(cfg, family_given);
    emit_report(rep, cfg.format, cfg.out);
    return rep.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
