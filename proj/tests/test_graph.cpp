#include <sstream>

#include "doctest.h"
#include "vclab/graph.hpp"
#include "vclab/graph_io.hpp"

using namespace vclab;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, es);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("from_edges validates") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), InputError);
  Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}});
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("bfs, balls and powers on a cycle") {
  Graph g = cycle(6);
  auto dist = bfs_distances(g, 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3, 2, 1});
  CHECK(bfs_distances(g, 0, 1) == std::vector<int>{0, 1, -1, -1, -1, 1});
  CHECK(ball(g, 0, 0) == std::vector<int>{0});
  CHECK(ball(g, 0, 1) == std::vector<int>{0, 1, 5});
  CHECK(ball(g, 0, 3).size() == 6);
  CHECK(girth(g) == 6);
  CHECK(!girth(Graph::from_edges(3, {{0, 1}, {1, 2}})).has_value());

  Graph p2 = power_graph(g, 2);
  for (int v = 0; v < 6; ++v) {
    auto d = bfs_distances(g, v);
    for (int u = 0; u < 6; ++u)
      CHECK(p2.has_edge(v, u) == (u != v && d[static_cast<std::size_t>(u)] <= 2));
  }
  CHECK(power_graph(g, 0).edge_count() == 0);
}

TEST_CASE("components and connectivity") {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!is_connected(g));
  auto comp = component_ids(g);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[3] == comp[4]);
  CHECK(comp[0] != comp[3]);
  CHECK(is_connected(cycle(5)));

  auto sub = induced_subgraph(g, {3, 4, 5});
  CHECK(sub.graph.size() == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.vertex_of == std::vector<int>{3, 4, 5});
  CHECK_THROWS_AS(induced_subgraph(g, {3, 3}), InputError);
}

TEST_CASE("boundary fraction counts crossing edges exactly") {
  Graph g = cycle(6);
  Labelling l(6, Label::red);
  CHECK(boundary_fraction(g, l).crossing == 0);
  l[0] = l[1] = l[2] = Label::blue;
  EdgeFraction f = boundary_fraction(g, l);
  CHECK(f.crossing == 2);
  CHECK(f.total == 6);
  CHECK(f.value() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("euler orientation balances every even-degree graph") {
  Graph g = complete(5);
  BalancedDigraph d = euler_orient(g);
  for (int v = 0; v < 5; ++v) {
    CHECK(d.out_neighbours(v).size() == 2);
    CHECK(d.in_neighbours(v).size() == 2);
  }
  CHECK(d.arc_count() == 10);
  CHECK_THROWS_AS(euler_orient(Graph::from_edges(2, {{0, 1}})), InputError);

  // two components, both even
  Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  BalancedDigraph d2 = euler_orient(two);
  for (int v = 0; v < 6; ++v) CHECK(d2.out_neighbours(v).size() == d2.in_neighbours(v).size());
}

TEST_CASE("balanced digraph construction rejects bad inputs") {
  CHECK_THROWS_AS(BalancedDigraph::from_arcs(2, {{0, 1}}), InputError);          // unbalanced
  CHECK_THROWS_AS(BalancedDigraph::from_arcs(2, {{0, 1}, {1, 0}}), InputError);  // anti-parallel
  CHECK_THROWS_AS(BalancedDigraph::from_arcs(1, {{0, 0}}), InputError);          // loop
  BalancedDigraph d = BalancedDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(d.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(d.underlying().edge_count() == 3);
}

TEST_CASE("proper bicolouring detection") {
  Graph g = cycle(6);
  Colouring c(6);
  for (int v = 0; v < 6; ++v) c[static_cast<std::size_t>(v)] = v % 2 ? Colour::black : Colour::white;
  CHECK(proper_bicolouring(g, c));
  c[0] = Colour::black;
  CHECK(!proper_bicolouring(g, c));
  CHECK(!proper_bicolouring(cycle(5), Colouring(5, Colour::white)));
}

TEST_CASE("text round trips") {
  Graph g = cycle(7);
  std::stringstream ss;
  write_graph(ss, g);
  CHECK(read_graph(ss) == g);

  BalancedDigraph d = euler_orient(complete(5));
  std::stringstream ds;
  write_digraph(ds, d);
  BalancedDigraph d2 = read_digraph(ds);
  CHECK(d2.arcs() == d.arcs());

  Labelling l = {Label::red, Label::blue, Label::red};
  std::stringstream ls;
  write_labelling(ls, l);
  CHECK(read_labelling(ls) == l);

  Colouring c = {Colour::white, Colour::black};
  std::stringstream cs;
  write_colouring(cs, c);
  CHECK(read_colouring(cs) == c);

  std::stringstream vs;
  write_vertex_set(vs, 9, {2, 3, 7});
  int n = 0;
  CHECK(read_vertex_set(vs, &n) == std::vector<int>{2, 3, 7});
  CHECK(n == 9);
}

TEST_CASE("parsers are strict") {
  auto bad = [](const std::string& text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_graph(is), InputError);
  };
  bad("");
  bad("2 1\n1 0\n");                  // endpoints out of order
  bad("3 2\n0 1\n");                  // missing edge line
  bad("3 1\n0 1\nextra\n");           // trailing garbage
  bad("3 2\n0 2\n0 1\n");             // unsorted edge list
  bad("3 2\n0 1\n0 1\n");             // duplicate
  bad("2 1\n0 5\n");                  // out of range

  std::istringstream l1("0 red\n1 green\n");
  CHECK_THROWS_AS(read_labelling(l1), InputError);
  std::istringstream l2("1 red\n0 blue\n");  // out-of-order vertex lines
  CHECK_THROWS_AS(read_labelling(l2), InputError);

  CHECK(parse_label("red") == Label::red);
  CHECK(parse_label("blue") == Label::blue);
  CHECK_THROWS_AS(parse_label("mauve"), InputError);
  CHECK(parse_colour("white") == Colour::white);
  CHECK(parse_colour("black") == Colour::black);
  CHECK_THROWS_AS(parse_colour("grey"), InputError);
  CHECK(to_string(Label::red) == "red");
  CHECK(to_string(Colour::black) == "black");
}
