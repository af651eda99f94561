#pragma once

#include <iosfwd>
#include <string>

#include "vclab/graph.hpp"

namespace vclab {

// Text formats. All files are newline-terminated UTF-8.
//
// Graph:      "n m" then m lines "u v" with u < v, sorted lexicographically.
// Digraph:    "n m" then m lines "u v" meaning u -> v, sorted lexicographically.
// Labelling:  n lines "v label", label in {red, blue}, one line per vertex.
// Colouring:  n lines "v colour", colour in {white, black}.
// Cover:      "n k" then k sorted lines "v".
// Matching:   "n k" then k lines "u v" with u < v, sorted lexicographically.
//
// Readers validate strictly (sortedness, ranges, counts) and throw InputError.

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

void write_digraph(std::ostream& os, const BalancedDigraph& d);
BalancedDigraph read_digraph(std::istream& is);

void write_labelling(std::ostream& os, const Labelling& l);
Labelling read_labelling(std::istream& is);

void write_colouring(std::ostream& os, const Colouring& c);
Colouring read_colouring(std::istream& is);

void write_vertex_set(std::ostream& os, int n, const std::vector<int>& vs);
std::vector<int> read_vertex_set(std::istream& is, int* n_out = nullptr);

void write_edge_set(std::ostream& os, int n, const std::vector<std::pair<int, int>>& es);
std::vector<std::pair<int, int>> read_edge_set(std::istream& is, int* n_out = nullptr);

// File helpers; throw InputError with the path on failure.
Graph load_graph(const std::string& path);
BalancedDigraph load_digraph(const std::string& path);
Labelling load_labelling(const std::string& path);
Colouring load_colouring(const std::string& path);
void save_text(const std::string& path, const std::string& content);

std::string graph_to_string(const Graph& g);
std::string digraph_to_string(const BalancedDigraph& d);
std::string labelling_to_string(const Labelling& l);
std::string colouring_to_string(const Colouring& c);

}  // namespace vclab
