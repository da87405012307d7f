#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace trusslab;

int main(int argc, char** argv) {
  CLI::App app{"Finite heaps, trusses and modules over trusses: validation, morphisms, exactness and census."};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::size_t              threads = 0;
  app.add_option("-f,--file", files, "Structure files to load (repeatable)")->check(CLI::ExistingFile);
  app.add_option("--threads", threads, "Worker thread cap (default: TRUSSLAB_THREADS or all cores)");

  std::string a, b, kind = "auto", what, truss_ref;
  std::size_t k = 0, order = 0, universe_max = 3;
  Elem        at = 0;
  std::function<int(cli::Session&)> action;

  auto* validate = app.add_subcommand("validate", "Parse and validate a structure file");
  validate->add_option("FILE", a, "File to validate")->required()->check(CLI::ExistingFile);
  validate->callback([&] { action = [&](cli::Session& s) { return cli::validate(s, a); }; });

  auto* hom = app.add_subcommand("hom", "List all morphisms A -> B");
  hom->add_option("A", a)->required();
  hom->add_option("B", b)->required();
  hom->add_option("--kind", kind, "heap, truss or module (default: the kind of A and B)")
      ->check(CLI::IsMember({"auto", "heap", "truss", "module"}));
  hom->callback([&] { action = [&](cli::Session& s) { return cli::hom(s, a, b, kind); }; });

  auto* iso = app.add_subcommand("iso", "Find an isomorphism A -> B");
  iso->add_option("A", a)->required();
  iso->add_option("B", b)->required();
  iso->callback([&] { action = [&](cli::Session& s) { return cli::iso(s, a, b); }; });

  auto* kernel = app.add_subcommand("kernel", "ker_e of a map");
  kernel->add_option("MAP", a)->required();
  kernel->add_option("--at", at, "Element e of the image")->required();
  kernel->callback([&] { action = [&](cli::Session& s) { return cli::kernel(s, a, at); }; });

  auto* quotient = app.add_subcommand("quotient", "M/N for a submodule N, given as a map into M or as a module");
  quotient->add_option("M", a)->required();
  quotient->add_option("N", b)->required();
  quotient->callback([&] { action = [&](cli::Session& s) { return cli::quotient(s, a, b); }; });

  auto* product = app.add_subcommand("product", "M x N with projections and embeddings");
  product->add_option("M", a)->required();
  product->add_option("N", b)->required();
  product->callback([&] { action = [&](cli::Session& s) { return cli::product(s, a, b); }; });

  auto* power = app.add_subcommand("power", "M^X for |X| = k");
  power->add_option("M", a)->required();
  power->add_option("k", k)->required()->check(CLI::PositiveNumber);
  power->callback([&] { action = [&](cli::Session& s) { return cli::power(s, a, k); }; });

  auto* induce = app.add_subcommand("induce", "M^(e), the e-induced module");
  induce->add_option("M", a)->required();
  induce->add_option("--at", at, "Basepoint e")->required();
  induce->callback([&] { action = [&](cli::Session& s) { return cli::induce(s, a, at); }; });

  auto* check = app.add_subcommand("check", "Decide a property; exit 1 with a certificate when it fails");
  check->require_subcommand(1);
  auto* exact = check->add_subcommand("exact", "Im F = ker_e G for some e");
  exact->add_option("F", a)->required();
  exact->add_option("G", b)->required();
  exact->callback([&] { action = [&](cli::Session& s) { return cli::check_exact(s, a, b); }; });
  auto* short_exact = check->add_subcommand("short-exact", "I injective, PI surjective, Im I = ker PI");
  short_exact->add_option("I", a)->required();
  short_exact->add_option("PI", b)->required();
  short_exact->callback([&] { action = [&](cli::Session& s) { return cli::check_short_exact(s, a, b); }; });
  auto* injective = check->add_subcommand("injective", "Injective relative to all modules of order <= k");
  injective->add_option("E", a)->required();
  injective->add_option("--universe-max", universe_max, "Largest test module order")->check(CLI::Range(1, 4));
  injective->callback([&] { action = [&](cli::Session& s) { return cli::check_injective(s, a, universe_max); }; });
  auto* projective = check->add_subcommand("projective", "Projective relative to all modules of order <= k");
  projective->add_option("P", a)->required();
  projective->add_option("--universe-max", universe_max, "Largest test module order")->check(CLI::Range(1, 4));
  projective->callback([&] { action = [&](cli::Session& s) { return cli::check_projective(s, a, universe_max); }; });
  auto* divisible = check->add_subcommand("divisible", "t.M = M for every nonzero t (domain trusses only)");
  divisible->add_option("M", a)->required();
  divisible->callback([&] { action = [&](cli::Session& s) { return cli::check_divisible(s, a); }; });

  auto* schanuel = app.add_subcommand("schanuel", "Run the Schanuel construction on two sequences I,PI");
  schanuel->require_subcommand(1);
  for (bool proj : {true, false}) {
    auto* sub = schanuel->add_subcommand(proj ? "proj" : "inj", proj ? "K -> P -> M and K' -> P' -> M" : "M -> E -> Q and M -> E' -> Q'");
    sub->add_option("SEQ1", a)->required();
    sub->add_option("SEQ2", b)->required();
    sub->add_option("--universe-max", universe_max, "Check (co)resolution hypotheses against modules of order <= k; 0 skips")
        ->check(CLI::Range(0, 4));
    sub->callback([&, proj] { action = [&, proj](cli::Session& s) { return cli::schanuel(s, proj, a, b, universe_max); }; });
  }

  auto* enumerate = app.add_subcommand("enumerate", "Print one structure per isomorphism class");
  enumerate->add_option("WHAT", what, "heaps, trusses or modules")->required()->check(CLI::IsMember({"heaps", "trusses", "modules"}));
  enumerate->add_option("--order", order, "Order")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--truss", truss_ref, "Truss for modules: a name from the input or a census label such as T2.1");
  enumerate->callback([&] { action = [&](cli::Session& s) { return cli::enumerate(s, what, order, truss_ref); }; });

  auto* census = app.add_subcommand("census", "Count heaps and trusses by order");
  census->add_option("--max-order", order, "Largest order")->required()->check(CLI::PositiveNumber);
  census->callback([&] { action = [&](cli::Session& s) { return cli::census(s, order); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::rejected;
  }

  if (threads > 0) {
    set_max_threads(threads);
  }
  try {
    cli::Session session = cli::load(files, std::cout);
    return action(session);
  } catch (Error const& e) {
    std::cout.flush();
    std::cerr << "error: " << e.detail() << '\n';
    return cli::rejected;
  }
}
