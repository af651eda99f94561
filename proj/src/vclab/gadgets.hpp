#pragma once

#include <string>

#include "vclab/graph.hpp"

namespace vclab {

// Vertex gadget families for the recut -> 2-colour vertex cover reduction.
//   delta4: vertex v becomes edge {w_v, b_v}; incoming arcs attach to w_v,
//           outgoing arcs to b_v; an arc (u, x) becomes {b_u, w_x}.
//           Blue vertices get a degree-1 pendant on b_v. Max degree 4.
//   delta3: vertex v becomes the path w1-b1-w2-b2; both incoming arcs attach
//           to w1, both outgoing to b2; blue vertices get a pendant on b1
//           (the middle black vertex). Max degree 3.
// The counter_black branch mirrors the blue gadget (pendant moves to the
// white side: w_v for delta4, the middle white w2 for delta3, coloured
// black), for use against algorithms that prefer black vertices.
enum class GadgetFamily { delta4, delta3 };
enum class Branch { counter_white, counter_black };

enum Role : int {
  role_w = 0,   // delta4 white
  role_b = 1,   // delta4 black
  role_w1 = 2,  // delta3 path, in order
  role_b1 = 3,
  role_w2 = 4,
  role_b2 = 5,
  role_pendant = 6,
};

struct GadgetInstance {
  GadgetFamily family = GadgetFamily::delta4;
  Branch branch = Branch::counter_white;
  BalancedDigraph d;      // source digraph
  Labelling input;        // source labelling
  Graph pi;
  Colouring colouring;
  std::vector<int> origin;  // pi vertex -> source vertex
  std::vector<int> role;    // pi vertex -> Role
  std::vector<int> pendant_of;  // source vertex -> pendant pi vertex or -1
  std::vector<std::uint64_t> tape_keys;  // stable across relabellings of d

  int source_size() const { return d.size(); }
  // pi vertices of the gadget at source vertex v (core block, then pendant)
  std::vector<int> gadget_vertices(int v) const;
  int core_size() const { return family == GadgetFamily::delta4 ? 2 : 4; }
};

// Requires in-degree = out-degree = 2 everywhere.
GadgetInstance build_pi(const BalancedDigraph& d, const Labelling& input, GadgetFamily family,
                        Branch branch = Branch::counter_white);

struct RecutResult {
  Labelling l_out;
  EdgeFraction boundary;   // on underlying(d)
  std::int64_t bad = 0;    // branch-appropriate bad vertex count
};

// Recut read off a cover: in the counter_white branch, v is blue iff the
// cover's intersection with gadget(v) is nonempty and all black; in the
// counter_black branch, nonempty and all white. Everything else is red.
// The cover need not be valid; extraction is total.
RecutResult extract_recut(const GadgetInstance& inst, const std::vector<int>& cover);

enum class BadDirection { out_neighbour, in_neighbour };

// Red vertices with a blue out-neighbour (default), or with a blue
// in-neighbour. The counter_white analysis forces two cover vertices into
// the gadget of every out_neighbour-bad vertex; the counter_black analysis
// uses in_neighbour.
std::int64_t count_bad(const BalancedDigraph& d, const Labelling& l,
                       BadDirection dir = BadDirection::out_neighbour);

struct ArcCrossings {
  std::int64_t red_to_blue = 0;
  std::int64_t blue_to_red = 0;
};

// Directed crossing counts; balance forces red_to_blue == blue_to_red on
// every balanced digraph, so each equals half the undirected crossing count.
ArcCrossings count_arc_crossings(const BalancedDigraph& d, const Labelling& l);

struct ReductionCheck {
  bool valid_cover = false;
  std::int64_t opt = 0;
  std::int64_t cover_size = 0;
  double ratio = 0.0;
  std::int64_t excess = 0;      // cover_size - opt
  std::int64_t crossing = 0;    // cut edges of the extracted recut
  std::int64_t edge_total = 0;
  std::int64_t red_to_blue = 0;
  std::int64_t blue_to_red = 0;
  std::int64_t bad_count = 0;
  // every bad vertex's gadget holds >= 2 (delta4) / >= 3 (delta3) cover
  // vertices; checked only for valid covers
  bool bad_gadgets_ok = true;
  double boundary = 0.0;
  double bound = 0.0;           // 2*eps (delta4) or 4*eps (delta3)
  bool applicable = false;      // valid and within (1+eps)*opt
  bool holds = false;           // applicable implies boundary <= bound
};

// Checks the boundary bound for a (1+eps)-approximate cover. The exact
// integer form of the bound at eps = ratio - 1 is crossing <= 4 * excess in
// both families; callers verifying at measured eps should assert that via
// the exposed fields.
ReductionCheck verify_reduction_bound(const GadgetInstance& inst, const std::vector<int>& cover, double eps);

std::string to_string(GadgetFamily f);
std::string to_string(Branch b);
GadgetFamily parse_family(const std::string& s);
Branch parse_branch(const std::string& s);
std::string role_name(int role);

// Sidecar map, one line per pi vertex: "pi_vertex origin_vertex role".
std::string instance_map_to_string(const GadgetInstance& inst);

}  // namespace vclab
