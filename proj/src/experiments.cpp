#include "liftdiam/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "liftdiam/complex2.hpp"
#include "liftdiam/io.hpp"
#include "liftdiam/separator.hpp"
#include "liftdiam/universal_cover.hpp"

namespace liftdiam {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (!(tol > 0.0)) throw InvalidInput("--tol must be positive");
  if (budget == 0) throw InvalidInput("--budget must be positive");
  if (level < 1) throw InvalidInput("--level must be positive");
  if (!(epsilon > 0.0)) throw InvalidInput("--epsilon must be positive");
  if (!(mesh > 0.0)) throw InvalidInput("--mesh must be positive");
  if (instances < 1) throw InvalidInput("--instances must be positive");
  if (max_steps < 1) throw InvalidInput("--max-steps must be positive");
  parse_format(format);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

std::string pad(long long x, int width = 4) {
  std::string s = std::to_string(x);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

std::string repro(const ExperimentConfig& c, const std::string& extra = "") {
  std::ostringstream out;
  out << "liftdiam " << c.command;
  if (!c.graph.empty()) out << " --graph " << c.graph;
  if (!c.voltage.empty()) out << " --voltage " << c.voltage;
  if (!c.route.empty()) out << " --route " << c.route;
  if (!c.presentation.empty()) out << " --presentation " << c.presentation;
  if (!c.complex.empty()) out << " --complex " << c.complex;
  if (!c.gens.empty()) out << " --gens " << join(c.gens);
  out << extra;
  return out.str();
}

ReportRow make_row(std::string id, bool ok, std::vector<Cell> values) {
  ReportRow r;
  r.id = std::move(id);
  r.status = ok ? RowStatus::pass : RowStatus::fail;
  r.values = std::move(values);
  return r;
}

ReportRow error_row(std::string id, std::size_t columns, const std::string& message, std::string rep) {
  ReportRow r;
  r.id = std::move(id);
  r.status = RowStatus::error;
  r.values.assign(columns, std::monostate{});
  r.message = message;
  r.repro = std::move(rep);
  return r;
}

MetricGraph load_graph(const ExperimentConfig& c) {
  if (c.graph.empty()) throw InvalidInput("--graph is required");
  return io::graph_from_json(io::read_json_file(c.graph));
}

Voltage load_voltage(const ExperimentConfig& c, const MetricGraph& g) {
  if (c.voltage.empty()) throw InvalidInput("--voltage is required");
  return io::voltage_from_json(io::read_json_file(c.voltage), g);
}

Presentation load_presentation(const ExperimentConfig& c) {
  if (c.presentation.empty()) throw InvalidInput("--presentation is required");
  return io::presentation_from_json(io::read_json_file(c.presentation));
}

SimplicialComplex2 load_complex(const ExperimentConfig& c) {
  if (c.complex.empty()) return rp2_complex();
  return io::complex_from_json(io::read_json_file(c.complex));
}

std::vector<int> all_generators(const Presentation& p) {
  std::vector<int> g(static_cast<std::size_t>(p.generator_count));
  std::iota(g.begin(), g.end(), 0);
  return g;
}

// ---- commands ----

Report diam(const ExperimentConfig& c) {
  Report r{"diam", {"vertices", "edges", "diameter"}, {}, {}};
  MetricGraph g = load_graph(c);
  Diameter d = continuous_diameter(g);
  auto row = make_row("graph", true, {(long long)g.vertex_count(), (long long)g.edge_count(), d.value});
  row.witness = io::diameter_to_json(d, g);
  r.rows.push_back(std::move(row));
  return r;
}

Report cover_derive(const ExperimentConfig& c) {
  Report r{"cover derive", {"sheets", "vertices", "edges", "connected", "components"}, {}, {}};
  MetricGraph g = load_graph(c);
  CoveringGraph cov = derive_cover(g, load_voltage(c, g));
  CoverConnectivity conn = is_connected_cover(cov);
  auto row = make_row("cover", true,
                      {(long long)cov.sheets, (long long)cov.derived.vertex_count(), (long long)cov.derived.edge_count(),
                       conn.connected, (long long)conn.orbits.size()});
  row.witness = {{"derived", io::graph_to_json(cov.derived)}, {"orbits", conn.orbits}};
  r.rows.push_back(std::move(row));
  return r;
}

const std::vector<std::string> kThm1Columns{"vertices", "edges", "sheets", "resamples", "d_base",
                                            "d_cover",  "bound", "ratio",  "slack",     "holds"};

ReportRow thm1_row(const std::string& id, const MetricGraph& g, const Voltage& v, int resamples, double tol) {
  CoveringGraph cov = derive_cover(g, v);
  if (!is_connected_cover(cov).connected) throw DisconnectedCover("derived cover is not connected");
  Thm1Report t = verify_thm1(cov, tol);
  auto row = make_row(id, t.holds,
                      {(long long)g.vertex_count(), (long long)g.edge_count(), (long long)t.sheets,
                       (long long)resamples, t.base.value, t.cover.value, t.bound, t.cover.value / t.base.value,
                       t.bound - t.cover.value, t.holds});
  row.witness = {{"base", io::diameter_to_json(t.base, g)}, {"cover", io::diameter_to_json(t.cover, cov.derived)}};
  return row;
}

Report cover_verify_thm1(const ExperimentConfig& c) {
  Report r{"cover verify-thm1", kThm1Columns, {}, {}};
  MetricGraph g = load_graph(c);
  Voltage v = load_voltage(c, g);
  try {
    auto row = thm1_row("cover", g, v, 0, c.tol);
    if (row.status == RowStatus::fail) row.repro = repro(c, " --tol " + format12(c.tol));
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("cover", r.columns.size(), e.what(), repro(c)));
  }
  return r;
}

Report sweep_thm1(const ExperimentConfig& c) {
  Report r{"sweep thm1", kThm1Columns, {}, {}};
  std::vector<int> ids;
  if (c.instance >= 0) {
    ids.push_back(c.instance);
  } else {
    for (int i = 0; i < c.instances; ++i) ids.push_back(i);
  }
  std::vector<ReportRow> rows(ids.size());
  const long n = static_cast<long>(ids.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const int i = ids[static_cast<std::size_t>(k)];
    const std::string id = "thm1-" + pad(i);
    const std::string rep = "liftdiam sweep thm1 --seed " + std::to_string(c.seed) + " --instance " + std::to_string(i);
    try {
      RandomCover rc = random_cover(c.seed, static_cast<std::uint64_t>(i));
      auto row = thm1_row(id, rc.base, rc.voltage, rc.resamples, c.tol);
      row.repro = rep;
      row.witness["graph"] = io::graph_to_json(rc.base);
      row.witness["voltage"] = io::voltage_to_json(rc.voltage, rc.base);
      rows[static_cast<std::size_t>(k)] = std::move(row);
    } catch (const std::exception& e) {
      rows[static_cast<std::size_t>(k)] = error_row(id, r.columns.size(), e.what(), rep);
    }
  }
  r.rows = std::move(rows);
  return r;
}

const std::vector<std::string> kShortenColumns{"sheets", "d_base", "bound", "steps",
                                               "input_length", "final_length", "strictly_decreasing",
                                               "endpoints_kept", "reached_bound"};

ReportRow shorten_row(const std::string& id, const CoveringGraph& cov, const PathRoute& route, int max_steps) {
  ShorteningRun s = shorten_until_bounded(cov, route, max_steps);
  const double d = continuous_diameter(cov.base).value;
  const bool ok = s.strictly_decreasing && s.endpoints_kept && s.reached_bound;
  auto row = make_row(id, ok,
                      {(long long)cov.sheets, d, cov.sheets * d, (long long)s.lengths.size() - 1, s.lengths.front(),
                       s.lengths.back(), s.strictly_decreasing, s.endpoints_kept, s.reached_bound});
  row.witness = {{"lengths", s.lengths},
                 {"input", io::route_to_json(route, cov.derived)},
                 {"final", io::route_to_json(s.final_route, cov.derived)}};
  return row;
}

Report cover_shorten(const ExperimentConfig& c) {
  Report r{"cover shorten", kShortenColumns, {}, {}};
  MetricGraph g = load_graph(c);
  CoveringGraph cov = derive_cover(g, load_voltage(c, g));
  std::vector<std::pair<std::string, PathRoute>> routes;
  if (!c.route.empty()) {
    routes.emplace_back("route", io::route_from_json(io::read_json_file(c.route), cov.derived));
  } else {
    const double d = continuous_diameter(g).value;
    for (int i = 0; i < c.instances; ++i) {
      if (c.instance >= 0 && i != c.instance) continue;
      auto rng = keyed_rng(c.seed, static_cast<std::uint64_t>(i), 7);
      double factor = std::uniform_real_distribution<double>(1.2, 3.0)(rng);
      routes.emplace_back("route-" + pad(i), random_walk(cov.derived, rng, factor * cov.sheets * d));
    }
  }
  for (const auto& [id, route] : routes) {
    std::string rep = repro(c, " --seed " + std::to_string(c.seed) + " --max-steps " + std::to_string(c.max_steps));
    if (c.route.empty()) rep += " --instance " + id.substr(6);
    try {
      auto row = shorten_row(id, cov, route, c.max_steps);
      row.repro = rep;
      r.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      r.rows.push_back(error_row(id, r.columns.size(), e.what(), rep));
    }
  }
  return r;
}

Report sweep_shorten(const ExperimentConfig& c) {
  Report r{"sweep shorten", kShortenColumns, {}, {}};
  r.columns.insert(r.columns.begin(), "cover");
  auto covers = shipped_covers();
  for (int i = 0; i < c.instances; ++i) {
    if (c.instance >= 0 && i != c.instance) continue;
    const ShippedCover& sc = covers[static_cast<std::size_t>(i) % covers.size()];
    const std::string id = "shorten-" + pad(i);
    const std::string rep = "liftdiam sweep shorten --seed " + std::to_string(c.seed) + " --instance " +
                            std::to_string(i) + " --max-steps " + std::to_string(c.max_steps);
    try {
      CoveringGraph cov = derive_cover(sc.base, sc.voltage);
      const double d = continuous_diameter(sc.base).value;
      auto rng = keyed_rng(c.seed, static_cast<std::uint64_t>(i), 7);
      double factor = std::uniform_real_distribution<double>(1.2, 3.0)(rng);
      PathRoute route = random_walk(cov.derived, rng, factor * cov.sheets * d);
      auto row = shorten_row(id, cov, route, c.max_steps);
      row.values.insert(row.values.begin(), sc.name);
      row.repro = rep;
      r.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      r.rows.push_back(error_row(id, r.columns.size(), e.what(), rep));
    }
  }
  return r;
}

Report groups_enumerate(const ExperimentConfig& c) {
  Report r{"groups enumerate", {"generators", "relators", "order", "complete"}, {}, {}};
  Presentation p = load_presentation(c);
  try {
    CosetTable t = todd_coxeter(p, c.budget);
    auto row = make_row("group", true,
                        {(long long)p.generator_count, (long long)p.relators.size(), (long long)t.coset_count, t.complete});
    row.witness = {{"presentation", io::presentation_to_json(p)}, {"action", t.action}};
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("group", r.columns.size(), e.what(), repro(c, " --budget " + std::to_string(c.budget))));
  }
  return r;
}

Report groups_diameter(const ExperimentConfig& c) {
  Report r{"groups diameter", {"order", "gens", "degree", "diameter", "farthest", "layer_sizes"}, {}, {}};
  Presentation p = load_presentation(c);
  std::vector<int> gens = c.gens.empty() ? all_generators(p) : c.gens;
  try {
    auto table = std::make_shared<const CosetTable>(todd_coxeter(p, c.budget));
    CayleyGraph cay = cayley_graph(table, gens);
    WordMetricDiameter w = word_metric_diameter(cay);
    auto row = make_row("group", true,
                        {(long long)cay.order(), join(gens), (long long)cay.degree(), (long long)w.diameter,
                         (long long)w.farthest, join(w.layer_sizes, " ")});
    row.witness = {{"farthest_word", format_word(cay.element_word(w.farthest))}};
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("group", r.columns.size(), e.what(), repro(c, " --budget " + std::to_string(c.budget))));
  }
  return r;
}

const std::vector<std::string> kLemma3Columns{"family", "order", "gens", "sc_status", "diam", "bound",
                                              "verdict", "structure_ok", "separation_failures"};

ReportRow lemma3_row(const std::string& id, const std::string& family, const Presentation& p,
                     const std::vector<int>& gens, std::size_t budget) {
  Lemma3Report l = verify_lemma3(p, gens, budget);
  const bool sc = l.simply_connected.status == Triviality::yes;
  const bool ok = l.verdict != Lemma3Verdict::violation && (!sc || l.structure_ok);
  auto row = make_row(id, ok,
                      {family, (long long)l.order, join(gens), to_string(l.simply_connected.status),
                       (long long)l.diameter, l.bound, to_string(l.verdict), l.structure_ok,
                       (long long)l.separation_failures.size()});
  if (l.verdict == Lemma3Verdict::hypothesis_failed && l.diameter > std::floor(l.bound + 1e-9))
    row.message = "hypothesis failed; diameter exceeds the bound";
  else if (l.verdict == Lemma3Verdict::inconclusive)
    row.message = "simple connectivity undecided within the budget";
  json sizes = json::array();
  for (const auto& s : l.sizes.rows) sizes.push_back({{"i", s.index}, {"size", s.size}, {"required", s.required}});
  row.witness = {{"certificate", l.simply_connected.certificate},
                 {"triangles", l.triangles},
                 {"component_sizes", sizes},
                 {"disjoint", l.sizes.disjoint},
                 {"component_total", l.sizes.component_total},
                 {"separation_failures", l.separation_failures}};
  return row;
}

Report lemma3_verify(const ExperimentConfig& c) {
  Report r{"lemma3 verify", kLemma3Columns, {}, {}};
  Presentation p = load_presentation(c);
  std::vector<int> gens = c.gens.empty() ? all_generators(p) : c.gens;
  const std::string rep = repro(c, " --budget " + std::to_string(c.budget));
  try {
    auto row = lemma3_row("group", "file", p, gens, c.budget);
    row.repro = rep;
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("group", r.columns.size(), e.what(), rep));
  }
  return r;
}

Report lemma3_zoo_report(const ExperimentConfig& c) {
  Report r{"lemma3 zoo", kLemma3Columns, {}, {}};
  std::vector<ZooEntry> zoo = lemma3_zoo();
  if (!c.only.empty()) {
    std::erase_if(zoo, [&](const ZooEntry& z) { return z.id != c.only; });
    if (zoo.empty()) throw InvalidInput("no zoo entry named '" + c.only + "'");
  }
  std::vector<ReportRow> rows(zoo.size());
  const long n = static_cast<long>(zoo.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const ZooEntry& z = zoo[static_cast<std::size_t>(k)];
    const std::string rep = "liftdiam lemma3 zoo --only '" + z.id + "' --budget " + std::to_string(c.budget);
    try {
      auto row = lemma3_row(z.id, z.family, z.presentation, z.gens, c.budget);
      row.repro = rep;
      rows[static_cast<std::size_t>(k)] = std::move(row);
    } catch (const std::exception& e) {
      rows[static_cast<std::size_t>(k)] = error_row(z.id, r.columns.size(), e.what(), rep);
    }
  }
  r.rows = std::move(rows);
  return r;
}

Report ucover_build(const ExperimentConfig& c) {
  Report r{"ucover build", {"sheets", "vertices", "edges", "triangles", "euler", "sc_status", "deck_group_order"}, {}, {}};
  SimplicialComplex2 k = load_complex(c);
  const std::string rep = repro(c, " --budget " + std::to_string(c.budget));
  try {
    CoveringComplex cc = build_universal_cover(k, c.budget);
    const bool sc = cc.total_simply_connected.status == Triviality::yes;
    auto row = make_row("complex", sc,
                        {(long long)cc.sheets, (long long)cc.total.vertex_count(), (long long)cc.total.edges().size(),
                         (long long)cc.total.triangles().size(), (long long)cc.total.euler_characteristic(),
                         to_string(cc.total_simply_connected.status), (long long)cc.deck.size()});
    if (!sc) row.message = "total space not certified simply connected";
    row.repro = rep;
    row.witness = {{"total", io::complex_to_json(cc.total)},
                   {"pi1", io::presentation_to_json(cc.pi1.presentation)},
                   {"deck", cc.deck}};
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("complex", r.columns.size(), e.what(), rep));
  }
  return r;
}

Report ucover_thm2(const ExperimentConfig& c) {
  Report r{"ucover verify-thm2",
           {"level", "sheets", "d_base", "d_cover", "bound", "ratio", "corrected_ratio", "margin", "holds"}, {}, {}};
  SimplicialComplex2 k = load_complex(c);
  const std::string rep = repro(c, " --level " + std::to_string(c.level) + " --tol " + format12(c.tol));
  try {
    Thm2Report t = verify_thm2(k, c.level, c.budget, c.tol);
    auto row = make_row("level-" + pad(c.level, 2), t.holds,
                        {(long long)t.level, (long long)t.sheets, t.base.value, t.cover.value, t.bound, t.ratio,
                         t.corrected_ratio, t.bound - t.cover.value, t.holds});
    row.repro = rep;
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("level-" + pad(c.level, 2), r.columns.size(), e.what(), rep));
  }
  return r;
}

Report ucover_nerve(const ExperimentConfig& c) {
  Report r{"ucover nerve",
           {"sheets", "level", "epsilon", "d_base", "radius", "mesh_exceeds_epsilon", "nerve_vertices", "nerve_edges",
            "nerve_triangles", "nerve_is_cayley", "generators_agree", "nerve_sc", "nerve_diameter", "lemma_bound",
            "max_fiber_distance", "fiber_pair_bound", "cover_diameter", "cover_bound", "theorem_bound", "all_ok"},
           {},
           {}};
  SimplicialComplex2 k = load_complex(c);
  const std::string rep =
      repro(c, " --epsilon " + format12(c.epsilon) + " --level " + std::to_string(c.level));
  try {
    CoveringComplex cc = build_universal_cover(k, c.budget);
    NerveReport n = fiber_ball_nerve(cc, 0, c.epsilon, c.level, c.budget);
    auto row = make_row("nerve", n.all_ok,
                        {(long long)n.sheets, (long long)n.level, n.epsilon, n.base_diameter, n.radius,
                         n.mesh_exceeds_epsilon, (long long)n.nerve.vertex_count(), (long long)n.nerve.edges().size(),
                         (long long)n.nerve.triangles().size(), n.nerve_is_cayley, n.generators_agree,
                         to_string(n.nerve_simply_connected.status), (long long)n.nerve_diameter, n.lemma_bound,
                         n.max_fiber_distance, n.fiber_pair_bound, n.cover_diameter, n.cover_bound, n.theorem_bound,
                         n.all_ok});
    row.repro = rep;
    row.witness = {{"distance_generators", n.distance_generators},
                   {"nerve_generators", n.nerve_generators},
                   {"fiber_distances", n.fiber_distances},
                   {"nerve", io::complex_to_json(n.nerve)}};
    r.rows.push_back(std::move(row));
  } catch (const std::exception& e) {
    r.rows.push_back(error_row("nerve", r.columns.size(), e.what(), rep));
  }
  return r;
}

}  // namespace

Report run(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  const std::string& cmd = config.command;
  if (cmd == "diam") r = diam(config);
  else if (cmd == "cover derive") r = cover_derive(config);
  else if (cmd == "cover verify-thm1") r = cover_verify_thm1(config);
  else if (cmd == "cover shorten") r = cover_shorten(config);
  else if (cmd == "groups enumerate") r = groups_enumerate(config);
  else if (cmd == "groups diameter") r = groups_diameter(config);
  else if (cmd == "lemma3 verify") r = lemma3_verify(config);
  else if (cmd == "lemma3 zoo") r = lemma3_zoo_report(config);
  else if (cmd == "ucover build") r = ucover_build(config);
  else if (cmd == "ucover verify-thm2") r = ucover_thm2(config);
  else if (cmd == "ucover nerve") r = ucover_nerve(config);
  else if (cmd == "sweep thm1") r = sweep_thm1(config);
  else if (cmd == "sweep shorten") r = sweep_shorten(config);
  else throw InvalidInput("unknown command '" + cmd + "'");
  r.summary.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.finalize();
  return r;
}

std::mt19937_64 keyed_rng(std::uint64_t seed, std::uint64_t instance, std::uint64_t stream, std::uint64_t attempt) {
  std::uint64_t h = splitmix(seed);
  h = splitmix(h ^ instance);
  h = splitmix(h ^ stream);
  h = splitmix(h ^ attempt);
  return std::mt19937_64(h);
}

MetricGraph random_graph(std::uint64_t seed, std::uint64_t instance, int max_vertices, int max_edges,
                         int min_cycle_rank) {
  auto rng = keyed_rng(seed, instance, 1);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(2, max_vertices);
  const int m = uniform(n - 1 + min_cycle_rank, std::max(n - 1 + min_cycle_rank, max_edges));
  std::vector<std::tuple<int, int, double>> edges;
  auto length = [&] { return 0.25 * uniform(1, 12); };
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform(0, v - 1), v, length());
  while (static_cast<int>(edges.size()) < m) {
    int a = uniform(0, n - 1), b = uniform(0, n - 1);
    if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b), length());
  }
  return MetricGraph::from_lengths(n, edges);
}

RandomCover random_cover(std::uint64_t seed, std::uint64_t instance, int max_sheets) {
  RandomCover out;
  // A tree has no connected cover with more than one sheet.
  out.base = random_graph(seed, instance, 8, 12, 1);
  auto rng = keyed_rng(seed, instance, 2);
  const int n = std::uniform_int_distribution<int>(1, max_sheets)(rng);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    out.voltage = {n, {}};
    for (int e = 0; e < out.base.edge_count(); ++e) {
      auto erng = keyed_rng(seed, instance, 3 + static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(attempt));
      Permutation p = identity_permutation(n);
      std::shuffle(p.begin(), p.end(), erng);
      out.voltage.assignment.push_back(std::move(p));
    }
    if (is_connected_cover(derive_cover(out.base, out.voltage)).connected) return out;
    ++out.resamples;
  }
  throw DisconnectedCover("no connected cover after " + std::to_string(out.resamples) + " resamples");
}

std::vector<ZooEntry> lemma3_zoo() {
  std::vector<ZooEntry> zoo;
  // Z/n on x1 with x_j = x1^j, so generator subset {0..k-1} is the element set {1..k}.
  for (int n = 2; n <= 24; ++n)
    for (int k = 1; k <= 3; ++k) {
      std::vector<Word> rel{Word(static_cast<std::size_t>(n), 1)};
      for (int j = 2; j <= k; ++j) {
        Word w{-j};
        w.insert(w.end(), static_cast<std::size_t>(j), 1);
        rel.push_back(w);
      }
      std::vector<int> gens(static_cast<std::size_t>(k));
      std::iota(gens.begin(), gens.end(), 0);
      std::string set = "{1";
      for (int j = 2; j <= k; ++j) set += "," + std::to_string(j);
      zoo.push_back({"cyclic-" + pad(n, 2) + "-" + set + "}", "cyclic", make_presentation(k, rel), gens});
    }
  for (int n = 3; n <= 8; ++n) {
    std::string r(static_cast<std::size_t>(n), 'a');
    zoo.push_back({"dihedral-" + pad(2 * n, 2), "dihedral", make_presentation(2, {r, "bb", "baba"}), {0, 1}});
  }
  zoo.push_back({"s3-transpositions", "symmetric", make_presentation(3, {"aa", "bb", "ababab", "Caba"}), {0, 1, 2}});
  zoo.push_back({"s4-ab", "symmetric", make_presentation(2, {"aa", "bbb", "abababab"}), {0, 1}});
  zoo.push_back({"s4-coxeter", "symmetric",
                 make_presentation(3, {"aa", "bb", "cc", "ababab", "bcbcbc", "acac"}), {0, 1, 2}});
  zoo.push_back({"q8", "quaternion", make_presentation(2, {"aaaa", "aaBB", "Baba"}), {0, 1}});
  return zoo;
}

std::vector<ShippedCover> shipped_covers() {
  std::vector<ShippedCover> out;
  {
    MetricGraph g = MetricGraph::from_lengths(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}});
    Voltage v{6, {{1, 2, 3, 4, 5, 0}, identity_permutation(6), identity_permutation(6)}};
    out.push_back({"triangle-z6", g, v});
  }
  {
    MetricGraph g = MetricGraph::from_lengths(2, {{0, 1, 1.0}, {0, 1, 2.0}, {0, 1, 1.5}});
    Voltage v{3, {identity_permutation(3), {1, 0, 2}, {0, 2, 1}}};
    out.push_back({"theta-s3", g, v});
  }
  {
    MetricGraph g = MetricGraph::from_lengths(1, {{0, 0, 1.0}, {0, 0, 1.5}});
    Voltage v{4, {{1, 2, 3, 0}, {2, 3, 0, 1}}};
    out.push_back({"figure8-z4", g, v});
  }
  {
    MetricGraph g = MetricGraph::from_lengths(4, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 1.0}, {3, 0, 1.5}, {0, 2, 2.0}});
    Voltage v{5, {{2, 3, 4, 0, 1}, identity_permutation(5), identity_permutation(5), identity_permutation(5), {1, 2, 3, 4, 0}}};
    out.push_back({"square-z5", g, v});
  }
  return out;
}

PathRoute random_walk(const MetricGraph& g, std::mt19937_64& rng, double min_length) {
  int v = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
  PathRoute r{vertex_point(g, v), {}};
  double len = 0.0;
  while (len <= min_length) {
    const auto& inc = g.incident(v);
    int e = inc[std::uniform_int_distribution<std::size_t>(0, inc.size() - 1)(rng)];
    const Edge& edge = g.edge(e);
    if (edge.u == v) {
      r.segments.push_back({e, 0.0, edge.length});
      v = edge.v;
    } else {
      r.segments.push_back({e, edge.length, 0.0});
      v = edge.u;
    }
    len += edge.length;
  }
  return r;
}

ShorteningRun shorten_until_bounded(const CoveringGraph& c, const PathRoute& route, int max_steps) {
  ShorteningRun out;
  const double d = continuous_diameter(c.base).value;
  const double limit = c.sheets * d;
  PathRoute cur = route;
  out.lengths.push_back(cur.length());
  for (int step = 0; step < max_steps && cur.length() > limit * (1 + 1e-12) + 1e-12; ++step) {
    ShorteningTrace t = ivanov_shorten(c, cur, d);
    const double before = cur.length();
    const double after = t.sigma.length();
    if (!(after < before)) out.strictly_decreasing = false;
    const bool same_start = same_location(c.derived, t.sigma.start, cur.start);
    const bool same_end = same_location(c.derived, t.sigma.end(), cur.end());
    if (!same_start || !same_end) out.endpoints_kept = false;
    cur = std::move(t.sigma);
    out.lengths.push_back(cur.length());
  }
  out.reached_bound = cur.length() <= limit * (1 + 1e-12) + 1e-12;
  out.final_route = std::move(cur);
  return out;
}

}  // namespace liftdiam
