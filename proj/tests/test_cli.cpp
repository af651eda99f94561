// End-to-end checks of the command-line binary: exit codes, artifact layout,
// and byte-level determinism of the numeric reports.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "vclab/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path base = fs::temp_directory_path() / "vclab_cli_tests";

struct Workspace {
  Workspace() {
    fs::remove_all(base);
    fs::create_directories(base);
  }
} workspace_guard;

int run(const std::string& args) {
  std::string cmd = std::string(VCLAB_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = base / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return p.string(); }

}  // namespace

TEST_CASE("gen writes validated artifacts deterministically") {
  write_file("gen.json", R"({"n": 40, "seed": 3})");
  fs::path d1 = base / "gen1";
  fs::path d2 = base / "gen2";
  CHECK(run("gen --config " + q(base / "gen.json") + " --out " + q(d1)) == 0);
  CHECK(run("gen --config " + q(base / "gen.json") + " --out " + q(d2)) == 0);
  for (const char* f : {"graph.txt", "digraph.txt", "certificate.json", "run.json", "report.md"})
    CHECK(fs::exists(d1 / f));
  CHECK(slurp(d1 / "graph.txt") == slurp(d2 / "graph.txt"));
  CHECK(slurp(d1 / "digraph.txt") == slurp(d2 / "digraph.txt"));
  CHECK(slurp(d1 / "certificate.json") == slurp(d2 / "certificate.json"));

  vclab::Graph g = vclab::load_graph((d1 / "graph.txt").string());
  CHECK(g.size() == 40);
  for (int v = 0; v < 40; ++v) CHECK(g.degree(v) == 4);

  // a different seed changes the graph
  fs::path d3 = base / "gen3";
  CHECK(run("gen --config " + q(base / "gen.json") + " --seed 4 --out " + q(d3)) == 0);
  CHECK(slurp(d1 / "graph.txt") != slurp(d3 / "graph.txt"));
}

TEST_CASE("configs are fail-closed") {
  write_file("unknown.json", R"({"n": 12, "surprise": true})");
  CHECK(run("gen --config " + q(base / "unknown.json") + " --out " + q(base / "u")) == 2);
  write_file("broken.json", "{\"n\": 12");
  CHECK(run("gen --config " + q(base / "broken.json") + " --out " + q(base / "u")) == 2);
  CHECK(run("gen --config " + q(base / "missing.json") + " --out " + q(base / "u")) == 2);
  CHECK(run("gen") == 2);            // --config is required
  CHECK(run("no-such-command --config x") == 2);
  write_file("badsubj.json", R"({"digraph": "x", "subject": {"id": "nope"}})");
  CHECK(run("fool --config " + q(base / "badsubj.json")) == 2);
}

TEST_CASE("orient requires even degrees") {
  write_file("p2.txt", "2 1\n0 1\n");
  write_file("orient_odd.json", R"({"graph": ")" + q(base / "p2.txt") + R"("})");
  CHECK(run("orient --config " + q(base / "orient_odd.json") + " --out " + q(base / "o")) == 2);

  write_file("c6.txt", "6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
  write_file("orient_c6.json", R"({"graph": ")" + q(base / "c6.txt") + R"("})");
  CHECK(run("orient --config " + q(base / "orient_c6.json") + " --out " + q(base / "oc6")) == 0);
  CHECK(vclab::load_digraph((base / "oc6" / "digraph.txt").string()).arc_count() == 6);
}

TEST_CASE("exact cover command solves a bipartite instance") {
  write_file("colc6.txt", "0 white\n1 black\n2 white\n3 black\n4 white\n5 black\n");
  write_file("solve.json", R"({"graph": ")" + q(base / "c6.txt") + R"(", "colouring": ")" +
                               q(base / "colc6.txt") + R"("})");
  fs::path out = base / "solve";
  CHECK(run("solve-exact --config " + q(base / "solve.json") + " --out " + q(out)) == 0);
  std::istringstream cover(slurp(out / "cover.txt"));
  int n = 0;
  CHECK(vclab::read_vertex_set(cover, &n).size() == 3);
  CHECK(n == 6);

  // corrupted graph file
  write_file("corrupt.txt", "6 6\n0 1\n0 5\n1 2\n2 3\n9 9\n4 5\n");
  write_file("solve_bad.json", R"({"graph": ")" + q(base / "corrupt.txt") + R"(", "colouring": ")" +
                                   q(base / "colc6.txt") + R"("})");
  CHECK(run("solve-exact --config " + q(base / "solve_bad.json") + " --out " + q(base / "sb")) == 2);
}

TEST_CASE("reduction, fooling and certification chain") {
  fs::path gdir = base / "gen1";  // produced above; regenerate defensively
  if (!fs::exists(gdir / "digraph.txt")) {
    write_file("gen.json", R"({"n": 40, "seed": 3})");
    REQUIRE(run("gen --config " + q(base / "gen.json") + " --out " + q(gdir)) == 0);
  }
  std::string dg = q(gdir / "digraph.txt");

  write_file("bp.json", R"({"digraph": ")" + dg + R"(", "family": "delta3"})");
  fs::path bp = base / "bp";
  CHECK(run("build-pi --config " + q(base / "bp.json") + " --out " + q(bp)) == 0);
  vclab::Graph pi = vclab::load_graph((bp / "pi.txt").string());
  CHECK(pi.size() == 160);  // all-red path gadgets on 40 source vertices
  CHECK(vclab::load_colouring((bp / "pi_colouring.txt").string()).size() == 160);
  CHECK(!slurp(bp / "pi_map.txt").empty());

  write_file("fool.json",
             R"({"digraph": ")" + dg + R"(", "subject": {"id": "red-within-r", "radius": 1}, "certificate": ")" +
                 q(gdir / "certificate.json") + R"("})");
  fs::path f1 = base / "fool1", f2 = base / "fool2";
  CHECK(run("fool --config " + q(base / "fool.json") + " --out " + q(f1)) == 0);
  CHECK(run("fool --config " + q(base / "fool.json") + " --out " + q(f2)) == 0);
  for (const char* f : {"fool.json", "fool.csv", "l_star.txt", "l_star_out.txt", "certify.json"})
    CHECK(fs::exists(f1 / f));
  CHECK(slurp(f1 / "fool.json") == slurp(f2 / "fool.json"));
  CHECK(slurp(f1 / "fool.csv") == slurp(f2 / "fool.csv"));
  CHECK(vclab::load_labelling((f1 / "l_star.txt").string()).size() == 40);

  // the gadget pipeline through the same config surface
  write_file("foolg.json",
             R"({"digraph": ")" + dg +
                 R"(", "subject": {"id": "gadget-rule", "family": "delta4", "branch": "counter-white", "radius": 2}})");
  CHECK(run("fool --config " + q(base / "foolg.json") + " --out " + q(base / "foolg")) == 0);

  // a solver that never crosses the balance point is inapplicable: exit 3
  write_file("foolx.json",
             R"({"digraph": ")" + dg + R"(", "subject": {"id": "exact", "branch": "counter-black"}})");
  CHECK(run("fool --config " + q(base / "foolx.json") + " --out " + q(base / "foolx")) == 3);
}

TEST_CASE("certify exit codes follow the bound") {
  std::string dg = q(base / "oc6" / "digraph.txt");  // oriented C6 from above
  REQUIRE(fs::exists(base / "oc6" / "digraph.txt"));
  write_file("half.txt", "0 red\n1 red\n2 red\n3 blue\n4 blue\n5 blue\n");

  write_file("cert_ok.json",
             R"({"method": "exhaustive", "delta_hat": 0.6666666666666666, "lambda2": null, "tolerance": 0, "n": 6, "degree": 2})");
  write_file("certify_ok.json",
             R"({"digraph": ")" + dg + R"(", "labelling": ")" + q(base / "half.txt") +
                 R"(", "subject": {"id": "red-within-r", "radius": 0}, "certificate": ")" +
                 q(base / "cert_ok.json") + R"("})");
  CHECK(run("certify --config " + q(base / "certify_ok.json") + " --out " + q(base / "cert1")) == 0);

  // inflated expansion claim: the check runs, reports, and fails (exit 1)
  write_file("cert_bad.json",
             R"({"method": "spectral", "delta_hat": 9.9, "lambda2": null, "tolerance": 0, "n": 6, "degree": 2})");
  write_file("certify_bad.json",
             R"({"digraph": ")" + dg + R"(", "labelling": ")" + q(base / "half.txt") +
                 R"(", "subject": {"id": "red-within-r", "radius": 0}, "certificate": ")" +
                 q(base / "cert_bad.json") + R"("})");
  CHECK(run("certify --config " + q(base / "certify_bad.json") + " --out " + q(base / "cert2")) == 1);
  CHECK(fs::exists(base / "cert2" / "certify.json"));  // artifact written before the verdict

  // wrong-size certificate: exit 2
  write_file("cert_n.json",
             R"({"method": "exhaustive", "delta_hat": 0.5, "lambda2": null, "tolerance": 0, "n": 8, "degree": 2})");
  write_file("certify_n.json",
             R"({"digraph": ")" + dg + R"(", "labelling": ")" + q(base / "half.txt") +
                 R"(", "subject": {"id": "red-within-r", "radius": 0}, "certificate": ")" +
                 q(base / "cert_n.json") + R"("})");
  CHECK(run("certify --config " + q(base / "certify_n.json") + " --out " + q(base / "cert3")) == 2);
}

TEST_CASE("concentration command") {
  std::string dg = q(base / "gen1" / "digraph.txt");
  REQUIRE(fs::exists(base / "gen1" / "digraph.txt"));
  write_file("conc.json", R"({"digraph": ")" + dg +
                              R"(", "subject": {"id": "coin"}, "trials": 60, "deviations": [0.1, 0.2]})");
  fs::path out = base / "conc";
  CHECK(run("concentrate --config " + q(base / "conc.json") + " --out " + q(out)) == 0);
  std::string csv = slurp(out / "concentration.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 61);  // header + one row per trial

  // too few trials for a variance estimate
  write_file("conc1.json", R"({"digraph": ")" + dg + R"(", "subject": {"id": "coin"}, "trials": 1})");
  CHECK(run("concentrate --config " + q(base / "conc1.json") + " --out " + q(base / "c1")) == 2);

  // global subjects have no dependency radius: exit 3
  write_file("concx.json", R"({"digraph": ")" + dg + R"(", "subject": {"id": "exact"}, "trials": 5})");
  CHECK(run("concentrate --config " + q(base / "concx.json") + " --out " + q(base / "cx")) == 3);
}

TEST_CASE("built-in oracle suite runs clean") {
  write_file("verify.json", R"({"seed": 2})");
  CHECK(run("verify --config " + q(base / "verify.json") + " --out " + q(base / "v")) == 0);
  CHECK(fs::exists(base / "v" / "run.json"));
}
