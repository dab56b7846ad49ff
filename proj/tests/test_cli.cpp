#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "liftdiam/experiments.hpp"
#include "liftdiam/io.hpp"
#include "liftdiam/report.hpp"
#include "liftdiam/universal_cover.hpp"

using namespace liftdiam;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = LIFTDIAM_DATA_DIR;

std::string data(const std::string& name) { return data_dir + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "liftdiam_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(LIFTDIAM_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

Report sample_report() {
  Report r{"demo", {"n", "ratio", "name", "ok"}, {}, {}};
  r.rows.push_back({"b", RowStatus::pass, {3LL, 1.0 / 3.0, std::string("x,y"), true}, "", "", nullptr});
  r.rows.push_back({"a", RowStatus::fail, {4LL, 2.5, std::string("z"), false}, "liftdiam demo --instance 0", "bad", {{"k", 1}}});
  r.rows.push_back({"c", RowStatus::error, {std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}}, "", "boom", nullptr});
  r.finalize();
  return r;
}

}  // namespace

TEST_CASE("report finalize sorts, rounds and counts") {
  Report r = sample_report();
  CHECK(r.rows[0].id == "a");
  CHECK(r.rows[2].id == "c");
  CHECK(r.summary.pass == 1);
  CHECK(r.summary.fail == 1);
  CHECK(r.summary.error == 1);
  CHECK(r.summary.max_ratio == 2.5);
  CHECK(std::get<double>(r.at(1, "ratio")) == round12(1.0 / 3.0));
  CHECK(r.column("missing") == -1);
}

TEST_CASE("FAIL rows need a repro command") {
  Report r{"demo", {}, {{"x", RowStatus::fail, {}, "", "", nullptr}}, {}};
  CHECK_THROWS_AS(r.finalize(), std::logic_error);
}

TEST_CASE("emit csv") {
  Report empty{"demo", {"n", "ratio"}, {}, {}};
  empty.finalize();
  CHECK(emit(empty, Format::csv) == "id,status,n,ratio,repro,message\n");

  Report one{"demo", {"n"}, {{"only", RowStatus::pass, {7LL}, "", "", nullptr}}, {}};
  one.finalize();
  std::string text = emit(one, Format::csv);
  CHECK(count_lines(text) == 2);
  CHECK(text.find("only,PASS,7,,") != std::string::npos);

  std::string full = emit(sample_report(), Format::csv);
  CHECK(count_lines(full) == 4);
  CHECK(full.find("\"x,y\"") != std::string::npos);
  CHECK(full.find("liftdiam demo --instance 0") != std::string::npos);
}

TEST_CASE("emit json round trips") {
  Report r = sample_report();
  Report back = parse_report_json(emit(r, Format::json));
  CHECK(back.command == r.command);
  CHECK(back.columns == r.columns);
  CHECK(back.rows == r.rows);
  CHECK(back.summary.pass == r.summary.pass);
  CHECK(back.summary.max_ratio == r.summary.max_ratio);
  CHECK(emit(r, Format::json).find("wall_time") == std::string::npos);
  CHECK(emit(r, Format::json, true).find("wall_time") != std::string::npos);
}

TEST_CASE("status and format parsing") {
  for (RowStatus s : {RowStatus::pass, RowStatus::fail, RowStatus::error}) CHECK(parse_status(to_string(s)) == s);
  CHECK(to_string(RowStatus::fail) == "FAIL");
  CHECK_THROWS(parse_status("maybe"));
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS(parse_format("xml"));
  CHECK(format12(0.1 + 0.2) == "0.3");
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
}

TEST_CASE("graph parsing errors name the offending edge") {
  using io::json;
  json bad = {{"vertices", {"a", "b"}}, {"edges", {{{"id", "bridge"}, {"u", "a"}, {"v", "b"}, {"length", -1.0}}}}};
  try {
    io::graph_from_json(bad);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("bridge") != std::string::npos);
  }
  json unknown = {{"vertices", {"a", "b"}}, {"edges", {{{"id", "e7"}, {"u", "a"}, {"v", "q"}, {"length", 1.0}}}}};
  try {
    io::graph_from_json(unknown);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("e7") != std::string::npos);
  }
  json split = {{"vertices", {"a", "b", "c"}}, {"edges", {{{"id", "e0"}, {"u", "a"}, {"v", "b"}, {"length", 1.0}}}}};
  CHECK_THROWS(io::graph_from_json(split));
  CHECK_THROWS_AS(io::graph_from_json(json::object()), InvalidInput);
}

TEST_CASE("voltage parsing rejects non-permutations") {
  MetricGraph g = io::graph_from_json(io::read_json_file(data("triangle-z6.graph.json")));
  io::json v = io::read_json_file(data("triangle-z6.voltage.json"));
  CHECK(io::voltage_from_json(v, g).sheets == 6);
  io::json bad = v;
  bad["voltages"]["e1"] = {0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(io::voltage_from_json(bad, g), InvalidInput);
  io::json missing = v;
  missing["voltages"].erase("e2");
  CHECK_THROWS_AS(io::voltage_from_json(missing, g), InvalidInput);
}

TEST_CASE("io round trips") {
  for (const auto& sc : shipped_covers()) {
    MetricGraph g = io::graph_from_json(io::graph_to_json(sc.base));
    CHECK(g.vertex_names() == sc.base.vertex_names());
    REQUIRE(g.edge_count() == sc.base.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      CHECK(g.edge(e).id == sc.base.edge(e).id);
      CHECK(g.edge(e).length == sc.base.edge(e).length);
    }
    Voltage v = io::voltage_from_json(io::voltage_to_json(sc.voltage, g), g);
    CHECK(v.assignment == sc.voltage.assignment);

    // Shipped data files match the built-in covers.
    MetricGraph file = io::graph_from_json(io::read_json_file(data(sc.name + ".graph.json")));
    CHECK(io::graph_to_json(file) == io::graph_to_json(sc.base));
    CHECK(io::voltage_from_json(io::read_json_file(data(sc.name + ".voltage.json")), file).assignment ==
          sc.voltage.assignment);
  }
  SimplicialComplex2 k = io::complex_from_json(io::read_json_file(data("rp2.json")));
  CHECK(k.triangles() == rp2_complex().triangles());
  CHECK(io::complex_from_json(io::complex_to_json(k)).edges() == k.edges());

  Presentation p = io::presentation_from_json(io::read_json_file(data("s4-ab.presentation.json")));
  CHECK(io::presentation_from_json(io::presentation_to_json(p)).relators == p.relators);

  MetricGraph t = io::graph_from_json(io::read_json_file(data("triangle-z6.graph.json")));
  CoveringGraph c = derive_cover(t, io::voltage_from_json(io::read_json_file(data("triangle-z6.voltage.json")), t));
  PathRoute r = io::route_from_json(io::read_json_file(data("triangle-z6.route.json")), c.derived);
  CHECK(r.length() == doctest::Approx(10.0));
  PathRoute r2 = io::route_from_json(io::route_to_json(r, c.derived), c.derived);
  CHECK(r2.segments.size() == r.segments.size());
}

TEST_CASE("run is deterministic") {
  ExperimentConfig cfg;
  cfg.command = "sweep thm1";
  cfg.instances = 10;
  std::string a = emit(run(cfg), Format::json);
  std::string b = emit(run(cfg), Format::json);
  CHECK(a == b);
  cfg.seed = 43;
  CHECK(emit(run(cfg), Format::json) != a);

  ExperimentConfig one;
  one.command = "sweep thm1";
  one.instances = 10;
  one.instance = 4;
  Report single = run(one);
  REQUIRE(single.rows.size() == 1);
  Report all = parse_report_json(a);
  CHECK(all.rows[4] == single.rows[0]);
}

TEST_CASE("run rejects bad configuration") {
  ExperimentConfig cfg;
  cfg.command = "no such command";
  CHECK_THROWS(run(cfg));
  ExperimentConfig missing;
  missing.command = "diam";
  CHECK_THROWS(run(missing));
}

TEST_CASE("cli binary") {
  Run d = run_cli("diam --graph " + data("triangle-z6.graph.json") + " --format csv");
  CHECK(d.code == 0);
  CHECK(d.out.find("graph,PASS,3,3,1.5,") != std::string::npos);

  Run t = run_cli("cover verify-thm1 --graph " + data("triangle-z6.graph.json") + " --voltage " +
                  data("triangle-z6.voltage.json"));
  CHECK(t.code == 0);
  Report rep = parse_report_json(t.out);
  CHECK(std::get<double>(rep.at(0, "d_cover")) == doctest::Approx(9.0).epsilon(1e-12));

  fs::path bad = scratch("bad.graph.json");
  std::ofstream(bad) << R"({"vertices": ["a", "b"], "edges": [{"id": "spoke", "u": "a", "v": "b", "length": 0}]})";
  CHECK(run_cli("diam --graph " + bad.string()).code == 2);
  CHECK(run_cli("diam --graph " + data("nope.json")).code == 2);
  CHECK(run_cli("diam").code != 0);

  fs::path out = scratch("report.csv");
  Run w = run_cli("groups diameter --presentation " + data("s4-ab.presentation.json") + " --gens 0,1 --format csv --out " +
                  out.string());
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("id,status,order", 0) == 0);

  Run a = run_cli("sweep thm1 --instances 5 --seed 7");
  Run b = run_cli("sweep thm1 --instances 5 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
