#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liftdiam/covering.hpp"
#include "liftdiam/groups.hpp"
#include "liftdiam/report.hpp"

namespace liftdiam {

struct ExperimentConfig {
  std::string command;  // e.g. "cover verify-thm1", "sweep thm1", "lemma3 zoo"
  std::string graph;
  std::string voltage;
  std::string route;
  std::string presentation;
  std::string complex;  // empty: built-in projective plane
  std::vector<int> gens;
  double tol = 1e-9;
  std::size_t budget = 100000;
  int level = 6;
  double epsilon = 0.05;
  double mesh = 0.25;
  std::uint64_t seed = 42;
  int instances = 100;
  int instance = -1;    // run a single sweep instance
  std::string only;     // run a single zoo entry
  int max_steps = 50;
  std::string out;
  std::string format = "json";

  /// Throws InvalidInput on nonpositive numeric parameters.
  void validate() const;
};

/// Dispatches to the verification pipelines. Module errors become ERROR rows;
/// the returned report is finalized.
Report run(const ExperimentConfig& config);

// ---- building blocks shared with the tests ----

/// Generator keyed by (seed, instance, stream, attempt) through a
/// splitmix64 mix, so instances are reproducible without storage.
std::mt19937_64 keyed_rng(std::uint64_t seed, std::uint64_t instance, std::uint64_t stream,
                          std::uint64_t attempt = 0);

/// Connected random graph: 2..max_vertices vertices, a random spanning tree
/// plus at least min_cycle_rank extra edges and at most max_edges in all,
/// lengths in quarter steps from 0.25 to 3.
MetricGraph random_graph(std::uint64_t seed, std::uint64_t instance, int max_vertices = 8, int max_edges = 12,
                         int min_cycle_rank = 0);

struct RandomCover {
  MetricGraph base;
  Voltage voltage;
  int resamples = 0;
};

/// Random graph with uniform permutation voltages on 1..max_sheets sheets,
/// resampled until the cover is connected.
RandomCover random_cover(std::uint64_t seed, std::uint64_t instance, int max_sheets = 6);

struct ZooEntry {
  std::string id;
  std::string family;
  Presentation presentation;
  std::vector<int> gens;
};

std::vector<ZooEntry> lemma3_zoo();

struct ShippedCover {
  std::string name;
  MetricGraph base;
  Voltage voltage;
};

/// The example covers also found under data/.
std::vector<ShippedCover> shipped_covers();

/// Random walk on the derived graph from a random vertex, continued until
/// its length exceeds `min_length`.
PathRoute random_walk(const MetricGraph& g, std::mt19937_64& rng, double min_length);

struct ShorteningRun {
  std::vector<double> lengths;  // input length, then after each step
  PathRoute final_route;
  bool strictly_decreasing = true;
  bool endpoints_kept = true;
  bool reached_bound = false;
};

/// Applies ivanov_shorten until the route is no longer than n * d or
/// `max_steps` steps have run.
ShorteningRun shorten_until_bounded(const CoveringGraph& c, const PathRoute& route, int max_steps);

}  // namespace liftdiam
