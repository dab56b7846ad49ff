#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "liftdiam/experiments.hpp"
#include "liftdiam/io.hpp"

using namespace liftdiam;

int main(int argc, char** argv) {
  CLI::App app{"Diameter bounds for covers of metric graphs and 2-complexes"};
  app.require_subcommand(1);
  ExperimentConfig cfg;
  bool timing = false;

  auto common = [&](CLI::App* a) {
    a->add_option("--seed", cfg.seed, "Random seed");
    a->add_option("--tol", cfg.tol, "Numeric tolerance");
    a->add_option("--budget", cfg.budget, "Coset enumeration budget");
    a->add_option("--level", cfg.level, "Subdivision level");
    a->add_option("--out", cfg.out, "Write the report here instead of stdout");
    a->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    a->add_flag("--timing", timing, "Include wall time in the JSON summary");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* a = parent->add_subcommand(name, help);
    common(a);
    a->callback([&cfg, &app, parent, name] { cfg.command = parent == &app ? name : parent->get_name() + " " + name; });
    return a;
  };
  auto graph_opts = [&](CLI::App* a, bool voltage) {
    a->add_option("--graph", cfg.graph, "Graph JSON")->required();
    if (voltage) a->add_option("--voltage", cfg.voltage, "Voltage JSON")->required();
  };
  auto group_opts = [&](CLI::App* a) {
    a->add_option("--presentation", cfg.presentation, "Presentation JSON")->required();
    a->add_option("--gens", cfg.gens, "Generator subset, 0-based")->delimiter(',');
  };

  graph_opts(leaf(&app, "diam", "Continuous diameter of a metric graph"), false);

  auto* cover = app.add_subcommand("cover", "Voltage covers of metric graphs");
  cover->require_subcommand(1);
  graph_opts(leaf(cover, "derive", "Build the derived graph"), true);
  graph_opts(leaf(cover, "verify-thm1", "Check d_cover <= n * d_base"), true);
  auto* shorten = leaf(cover, "shorten", "Shorten over-long routes in the cover");
  graph_opts(shorten, true);
  shorten->add_option("--route", cfg.route, "Route JSON in derived edge ids; random walks if omitted");
  shorten->add_option("--instances", cfg.instances, "Number of random walks");
  shorten->add_option("--instance", cfg.instance, "Run a single random walk");
  shorten->add_option("--max-steps", cfg.max_steps, "Step limit per route");

  auto* groups = app.add_subcommand("groups", "Finitely presented groups");
  groups->require_subcommand(1);
  group_opts(leaf(groups, "enumerate", "Todd-Coxeter coset table"));
  group_opts(leaf(groups, "diameter", "Word-metric diameter"));

  auto* lemma3 = app.add_subcommand("lemma3", "Diameter of simply connected flag Cayley complexes");
  lemma3->require_subcommand(1);
  group_opts(leaf(lemma3, "verify", "One presentation"));
  leaf(lemma3, "zoo", "Built-in family of small groups")->add_option("--only", cfg.only, "Run one entry by id");

  auto* ucover = app.add_subcommand("ucover", "Universal covers of 2-complexes");
  ucover->require_subcommand(1);
  for (auto* a : {leaf(ucover, "build", "Build the universal cover"),
                  leaf(ucover, "verify-thm2", "Compare subdivided diameters"),
                  leaf(ucover, "nerve", "Fiber-ball nerve pipeline")}) {
    a->add_option("--complex", cfg.complex, "Complex JSON; the 6-vertex projective plane if omitted");
    a->add_option("--epsilon", cfg.epsilon, "Ball radius slack");
  }

  auto* sweep = app.add_subcommand("sweep", "Seeded property sweeps");
  sweep->require_subcommand(1);
  for (auto* a : {leaf(sweep, "thm1", "Random connected voltage covers"),
                  leaf(sweep, "shorten", "Random walks in the shipped covers")}) {
    a->add_option("--instances", cfg.instances, "Number of instances");
    a->add_option("--instance", cfg.instance, "Run a single instance");
    a->add_option("--max-steps", cfg.max_steps, "Step limit per route");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (cfg.command.empty()) throw InvalidInput("no command given");
    Report r = run(cfg);
    std::string text = emit(r, parse_format(cfg.format), timing);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      io::write_text_file(cfg.out, text);
    }
    std::fprintf(stderr, "%s: %d pass, %d fail, %d error, %.3f s\n", r.command.c_str(), r.summary.pass,
                 r.summary.fail, r.summary.error, r.summary.wall_time);
    return r.summary.fail == 0 && r.summary.error == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
