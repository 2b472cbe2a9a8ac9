#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "emf/corpus.hpp"
#include "emf/report.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

int run_command(const std::string& command, const std::string& path, const std::string& method,
                std::optional<unsigned> cutoff, std::optional<unsigned> precision) {
  emf::ProblemInstance inst = emf::parse_instance(path);
  if (cutoff) inst.cutoff = cutoff;
  if (precision) inst.precision = *precision;
  emf::InstanceContext ctx = emf::build_context(inst);

  emf::Json report;
  if (command == "validate")
    report = emf::report_validate(inst, ctx);
  else if (command == "milnor")
    report = emf::report_milnor(ctx);
  else if (command == "residue")
    report = emf::report_residue(ctx);
  else if (command == "chern")
    report = emf::report_chern(ctx);
  else if (command == "euler")
    report = emf::report_euler(inst, ctx, method);
  else if (command == "positivity")
    report = emf::report_positivity(inst, ctx);
  else if (command == "conjd")
    report = emf::report_conjd(ctx);
  std::cout << emf::render_report(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant matrix factorization pairing calculator"};
  app.require_subcommand(1);

  std::string path, method = "both", family, out_path;
  std::optional<unsigned> cutoff, precision;
  unsigned nvars = 2, n = 2, a = 1, k = 4;
  std::string group = "trivial";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", path, "instance JSON file")->required();
    sub->add_option("--cutoff", cutoff, "total-degree cutoff for the filtered morphism complex");
    sub->add_option("--precision", precision, "starting bits for sign certification");
  };
  const std::pair<const char*, const char*> simple[] = {
      {"validate", "check all instance invariants and report the sector layout"},
      {"milnor", "Milnor algebras of the potential restricted to each fixed locus"},
      {"residue", "Grothendieck residue functionals and their Gram matrices"},
      {"chern", "sector Chern characters, both trace routes, and the dual sign law"},
      {"positivity", "certified signs of the odd-sector polarization values"},
      {"conjd", "Euler-pairing Gram matrix, its radical, and the Chern kernel"}};
  for (const auto& [name, desc] : simple) add_common(app.add_subcommand(name, desc));
  CLI::App* euler = app.add_subcommand(
      "euler", "Euler pairings by Riemann-Roch and/or the morphism-complex oracle");
  add_common(euler);
  euler->add_option("--method", method, "hrr | oracle | both")
      ->check(CLI::IsMember({"hrr", "oracle", "both"}));

  CLI::App* gen = app.add_subcommand("generate", "write a corpus instance file");
  gen->add_option("output", out_path, "output instance path")->required();
  gen->add_option("--family", family, "corpus family")
      ->required()
      ->check(CLI::IsMember(emf::corpus_families()));
  gen->add_option("--nvars", nvars, "quadric: number of variables (2 or 4)");
  gen->add_option("--n", n, "an_suspended: exponent parameter");
  gen->add_option("--a", a, "an_suspended: factor split");
  gen->add_option("--k", k, "d4: Milnor number (4..6)");
  gen->add_option("--group", group, "an_suspended: trivial | mu | z2");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub->get_name() == "generate") {
      emf::Json params{{"nvars", nvars}, {"n", n}, {"a", a}, {"k", k}, {"group", group}};
      emf::ProblemInstance inst = emf::generate_corpus(family, params);
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitValidation;
      }
      out << emf::serialize_instance(inst).dump(2) << "\n";
      return 0;
    }
    return run_command(sub->get_name(), path, method, cutoff, precision);
  } catch (const emf::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const emf::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const emf::computation_error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
}
