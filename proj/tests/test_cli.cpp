#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "nzc/cli.hpp"
#include "nzc/graph_io.hpp"
#include "oracle_support.hpp"

using nzc::Graph;
using nzc::RunConfig;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int status = nzc::run(cfg, out, err);
  return {status, out.str(), err.str()};
}

Graph lift(const oracle::NaiveGraph& g) {
  std::vector<std::uint64_t> packed;
  for (const oracle::Edge& e : g.edges) packed.push_back(nzc::pack_edge(e.first, e.second));
  return Graph::from_edges(g.n, std::move(packed));
}

}  // namespace

TEST_CASE("edge list export is bit-exact") {
  const Graph p3 = nzc::build_graph(3, {{1, 2}, {0, 1}});
  CHECK(nzc::to_edgelist(p3) == "0 1\n1 2\n");

  const Graph g22 = nzc::build_explicit(nzc::make_space_params(2, 2));
  CHECK(nzc::to_edgelist(g22) == "0 2\n1 2\n");
}

TEST_CASE("dot export is bit-exact") {
  const Graph g22 = nzc::build_explicit(nzc::make_space_params(2, 2));
  CHECK(nzc::to_dot(g22) ==
        "graph G {\n"
        "  0 [label=\"1,0\"];\n"
        "  1 [label=\"0,1\"];\n"
        "  2 [label=\"1,1\"];\n"
        "  0 -- 2;\n"
        "  1 -- 2;\n"
        "}\n");

  const Graph bare = nzc::build_graph(2, {{0, 1}});
  CHECK(nzc::to_dot(bare) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

TEST_CASE("edge list round-trips through parse") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::NaiveGraph ng = oracle::random_graph(rng, 15);
    // canonical inputs: ensure the last vertex has an edge so the count survives
    if (ng.n >= 2) ng.edges.insert(oracle::mk(ng.n - 2, ng.n - 1));
    const Graph g = lift(ng);
    if (g.edge_count() == 0) continue;
    const std::string text = nzc::to_edgelist(g);
    const Graph back = nzc::graph_from_edgelist(text);
    CHECK(back == g);
    CHECK(nzc::to_edgelist(back) == text);
  }

  CHECK_THROWS_AS(nzc::graph_from_edgelist("0 x\n"), nzc::ParseError);
  CHECK_THROWS_AS(nzc::graph_from_edgelist("0 1 2\n"), nzc::ParseError);
  CHECK(nzc::graph_from_edgelist("# empty\n").vertex_count() == 0);
}

TEST_CASE("grid list parsing") {
  CHECK(nzc::parse_grid_list("2,3") == std::vector<std::uint64_t>{2, 3});
  CHECK(nzc::parse_grid_list("2..5") == std::vector<std::uint64_t>{2, 3, 4, 5});
  CHECK(nzc::parse_grid_list("1,3..5,9") == std::vector<std::uint64_t>{1, 3, 4, 5, 9});
  CHECK(nzc::parse_grid_list("7") == std::vector<std::uint64_t>{7});
  CHECK_THROWS_AS(nzc::parse_grid_list(""), nzc::ParseError);
  CHECK_THROWS_AS(nzc::parse_grid_list("2,,3"), nzc::ParseError);
  CHECK_THROWS_AS(nzc::parse_grid_list("5..2"), nzc::ParseError);
  CHECK_THROWS_AS(nzc::parse_grid_list("a"), nzc::ParseError);
}

TEST_CASE("config file parsing") {
  const auto cfg = nzc::parse_config_file("q=2,3\nn=1..3\n# comment\nformat=csv\n\ncap=500\n");
  CHECK(cfg.at("q") == "2,3");
  CHECK(cfg.at("n") == "1..3");
  CHECK(cfg.at("format") == "csv");
  CHECK(cfg.at("cap") == "500");
  CHECK_THROWS_AS(nzc::parse_config_file("not a pair\n"), nzc::ParseError);
}

TEST_CASE("run: build command") {
  RunConfig cfg;
  cfg.command = nzc::Command::Build;
  cfg.q_values = {2};
  cfg.n_values = {2};
  cfg.format = "edgelist";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out == "0 2\n1 2\n");

  cfg.format = "dot";
  CHECK(run(cfg).out.rfind("graph G {\n", 0) == 0);

  cfg.quotient = true;
  cfg.format = "json";
  const RunResult rq = run(cfg);
  CHECK(rq.status == 0);
  CHECK(rq.out.find("\"degree\": \"2\"") != std::string::npos);
}

TEST_CASE("run: indices command matches the documented example") {
  RunConfig cfg;
  cfg.command = nzc::Command::Indices;
  cfg.q_values = {2};
  cfg.n_values = {3};
  cfg.format = "json";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"m1\": \"138\"") != std::string::npos);
  CHECK(r.out.find("\"forgotten\": \"672\"") != std::string::npos);
  CHECK(r.out.find("\"method\": \"explicit\"") != std::string::npos);

  // quotient and explicit emit identical values
  RunConfig cq = cfg;
  cq.method = "quotient";
  RunConfig ce = cfg;
  ce.method = "explicit";
  const std::string qa = run(cq).out;
  const std::string ea = run(ce).out;
  CHECK(qa.find("\"m1\": \"138\"") != std::string::npos);

  // over-cap auto falls back to the quotient path
  RunConfig big;
  big.command = nzc::Command::Indices;
  big.q_values = {7};
  big.n_values = {8};
  const RunResult rb = run(big);
  CHECK(rb.status == 0);
  CHECK(rb.out.find("\"method\": \"quotient\"") != std::string::npos);
  CHECK(rb.out.find("\"m1\": \"191571843599728089024\"") != std::string::npos);
}

TEST_CASE("run: explicit over cap is an error with the cap named") {
  RunConfig cfg;
  cfg.command = nzc::Command::Build;
  cfg.q_values = {2};
  cfg.n_values = {10};
  cfg.explicit_cap = 100;
  cfg.format = "edgelist";
  const RunResult r = run(cfg);
  CHECK(r.status == 1);
  CHECK(r.err.find("cap 100") != std::string::npos);
}

TEST_CASE("run: non-prime-power warning") {
  RunConfig cfg;
  cfg.command = nzc::Command::Indices;
  cfg.q_values = {6};
  cfg.n_values = {2};
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.err.find("not a prime power") != std::string::npos);

  cfg.warn_nonprimepower = false;
  CHECK(run(cfg).err.empty());
}

TEST_CASE("run: derived command") {
  RunConfig cfg;
  cfg.command = nzc::Command::Derived;
  cfg.q_values = {2};
  cfg.n_values = {2};
  cfg.transform = nzc::TransformKind::Subdivision;
  cfg.format = "edgelist";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out == "0 3\n1 4\n2 3\n2 4\n");

  cfg.with_indices = true;
  cfg.format = "json";
  const RunResult ri = run(cfg);
  CHECK(ri.out.find("\"m1\": \"14\"") != std::string::npos);

  RunConfig miss = cfg;
  miss.transform = std::nullopt;
  CHECK(run(miss).status == 64);
}

TEST_CASE("run: derived from an edge-list file") {
  const std::string path = "cli_test_derived.edgelist";
  {
    std::ofstream f(path, std::ios::binary);
    f << "0 1\n1 2\n";
  }
  RunConfig cfg;
  cfg.command = nzc::Command::Derived;
  cfg.input_path = path;
  cfg.transform = nzc::TransformKind::Line;
  cfg.format = "edgelist";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out == "0 1\n");  // line graph of the 3-path is a single edge
  std::remove(path.c_str());
}

TEST_CASE("run: usage problems exit with 64") {
  RunConfig cfg;
  cfg.command = nzc::Command::Indices;
  cfg.q_values = {2, 3};  // a grid where a single value is required
  cfg.n_values = {2};
  CHECK(run(cfg).status == 64);

  cfg.q_values = {2};
  cfg.format = "bogus";
  CHECK(run(cfg).status == 64);

  cfg.format = "json";
  cfg.method = "psychic";
  CHECK(run(cfg).status == 64);
}

TEST_CASE("run: formulas command") {
  RunConfig cfg;
  cfg.command = nzc::Command::Formulas;
  cfg.q_values = {2};
  cfg.n_values = {2};
  cfg.formula_id = "THM_M1_GAMMA";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"value\": \"120\"") != std::string::npos);
  CHECK(r.out.find("Theorem 2") != std::string::npos);

  cfg.formula_id.clear();
  const RunResult all = run(cfg);
  CHECK(all.out.find("COR_EQUALITY_THRESHOLD") != std::string::npos);
  CHECK(all.out.find("\"threshold\": \"3/2\"") != std::string::npos);

  // explicit injection overrides the oracle default
  cfg.formula_id = "THM_M1_LINE";
  cfg.m2_injection = nzc::Bigint(0);
  const RunResult inj = run(cfg);
  CHECK(inj.out.find("\"value\": \"-34\"") != std::string::npos);
}

TEST_CASE("run: audit command exit status and determinism") {
  RunConfig cfg;
  cfg.command = nzc::Command::Audit;
  cfg.q_values = {2, 3};
  cfg.n_values = {1, 2, 3};
  cfg.format = "markdown";
  cfg.workers = 1;
  const RunResult r1 = run(cfg);
  CHECK(r1.status == 2);  // mismatches exist on this grid
  CHECK(r1.out.find("CONFIRMED-on-grid") != std::string::npos);

  cfg.workers = 8;
  const RunResult r8 = run(cfg);
  CHECK(r8.status == 2);
  CHECK(r8.out == r1.out);
}

TEST_CASE("run: export command") {
  const std::string path = "cli_test_export.edgelist";
  {
    std::ofstream f(path, std::ios::binary);
    f << "0 1\n1 2\n";
  }
  RunConfig cfg;
  cfg.command = nzc::Command::Export;
  cfg.input_path = path;
  cfg.export_to = "dot";
  const RunResult r = run(cfg);
  CHECK(r.status == 0);
  CHECK(r.out ==
        "graph G {\n"
        "  0;\n"
        "  1;\n"
        "  2;\n"
        "  0 -- 1;\n"
        "  1 -- 2;\n"
        "}\n");

  cfg.export_to = "edgelist";
  CHECK(run(cfg).out == "0 1\n1 2\n");

  cfg.input_path = "does_not_exist.edgelist";
  CHECK(run(cfg).status == 1);
  std::remove(path.c_str());
}

TEST_CASE("run: output path writes the same bytes as stdout") {
  const std::string path = "cli_test_output.json";
  RunConfig cfg;
  cfg.command = nzc::Command::Indices;
  cfg.q_values = {3};
  cfg.n_values = {2};
  const RunResult direct = run(cfg);
  cfg.output_path = path;
  const RunResult filed = run(cfg);
  CHECK(filed.status == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  CHECK(content == direct.out);
  std::remove(path.c_str());
}
