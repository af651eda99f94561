#include <algorithm>

#include "doctest.h"
#include "vclab/gadgets.hpp"
#include "vclab/matching.hpp"
#include "vclab/oracles.hpp"
#include "vclab/random_regular.hpp"
#include "vclab/rng.hpp"

using namespace vclab;

namespace {

BalancedDigraph instance(int n, std::uint64_t seed) { return euler_orient(random_4regular(n, seed)); }

Labelling random_labelling(int n, std::uint64_t seed) {
  Rng rng(seed);
  Labelling l(static_cast<std::size_t>(n));
  for (auto& x : l) x = rng.below(2) ? Label::blue : Label::red;
  return l;
}

std::int64_t blues(const Labelling& l) {
  return std::count(l.begin(), l.end(), Label::blue);
}

}  // namespace

TEST_CASE("instance shape: counts, degrees, colours, map") {
  const int n = 20;
  BalancedDigraph d = instance(n, 2);
  for (auto [family, core, cap] : {std::tuple{GadgetFamily::delta4, 2, 4}, std::tuple{GadgetFamily::delta3, 4, 3}}) {
    for (Branch branch : {Branch::counter_white, Branch::counter_black}) {
      for (const Labelling& l : {Labelling(n, Label::red), Labelling(n, Label::blue), random_labelling(n, 77)}) {
        GadgetInstance inst = build_pi(d, l, family, branch);
        std::int64_t b = blues(l);
        CAPTURE(to_string(family));
        CAPTURE(to_string(branch));
        CAPTURE(b);
        CHECK(inst.pi.size() == core * n + b);
        // core edges per gadget + one edge per arc + one per pendant
        CHECK(inst.pi.edge_count() == (core - 1) * n + 2 * n + b);
        CHECK(proper_bicolouring(inst.pi, inst.colouring));
        int max_deg = 0;
        for (int p = 0; p < inst.pi.size(); ++p) max_deg = std::max(max_deg, inst.pi.degree(p));
        CHECK(max_deg <= cap);
        // the cap is attained whenever a pendant exists; the path family
        // attains it even without pendants (w1 carries two arcs plus b1)
        if (b > 0 || core == 4) CHECK(max_deg == cap);

        for (int v = 0; v < n; ++v) {
          auto gv = inst.gadget_vertices(v);
          bool pend = l[static_cast<std::size_t>(v)] == Label::blue;
          CHECK(static_cast<int>(gv.size()) == core + (pend ? 1 : 0));
          CHECK((inst.pendant_of[static_cast<std::size_t>(v)] >= 0) == pend);
          for (int p : gv) CHECK(inst.origin[static_cast<std::size_t>(p)] == v);
        }
        CHECK(inst.tape_keys.size() == static_cast<std::size_t>(inst.pi.size()));
      }
    }
  }
  CHECK_THROWS_AS(build_pi(BalancedDigraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}),
                           Labelling(3, Label::red), GadgetFamily::delta4),
                  InputError);
}

TEST_CASE("tape keys follow the source vertex, not the instance numbering") {
  const int n = 12;
  BalancedDigraph d = instance(n, 3);
  GadgetInstance red = build_pi(d, Labelling(n, Label::red), GadgetFamily::delta4);
  Labelling half(n, Label::red);
  for (int v = 0; v < n / 2; ++v) half[static_cast<std::size_t>(v)] = Label::blue;
  GadgetInstance mixed = build_pi(d, half, GadgetFamily::delta4);
  for (int v = 0; v < n; ++v) {
    for (int role : {role_w, role_b}) {
      std::uint64_t a = 0, b = 0;
      for (int p : red.gadget_vertices(v))
        if (red.role[static_cast<std::size_t>(p)] == role) a = red.tape_keys[static_cast<std::size_t>(p)];
      for (int p : mixed.gadget_vertices(v))
        if (mixed.role[static_cast<std::size_t>(p)] == role) b = mixed.tape_keys[static_cast<std::size_t>(p)];
      CHECK(a == b);
    }
  }
}

TEST_CASE("optimum cover size is invariant across labellings") {
  const int n = 30;
  BalancedDigraph d = instance(n, 4);
  for (const Labelling& l :
       {Labelling(n, Label::red), Labelling(n, Label::blue), random_labelling(n, 5), random_labelling(n, 6)}) {
    for (Branch branch : {Branch::counter_white, Branch::counter_black}) {
      GadgetInstance e4 = build_pi(d, l, GadgetFamily::delta4, branch);
      CHECK(static_cast<int>(opt_2vc(e4.pi, e4.colouring).size()) == n);
      GadgetInstance e3 = build_pi(d, l, GadgetFamily::delta3, branch);
      CHECK(static_cast<int>(opt_2vc(e3.pi, e3.colouring).size()) == 2 * n);
    }
  }
}

TEST_CASE("optimum matches brute force on a small instance") {
  const int n = 6;
  BalancedDigraph d = instance(n, 9);
  GadgetInstance red4 = build_pi(d, Labelling(n, Label::red), GadgetFamily::delta4);
  CHECK(brute_min_vc_mask(red4.pi) == n);
  GadgetInstance blue4 = build_pi(d, Labelling(n, Label::blue), GadgetFamily::delta4);
  CHECK(brute_min_vc_mask(blue4.pi, 24) == n);
  GadgetInstance red3 = build_pi(d, Labelling(n, Label::red), GadgetFamily::delta3);
  CHECK(brute_min_vertex_cover(red3.pi) == 2 * n);

  // the vertex edges alone are a perfect obstruction: matching size equals opt
  CHECK(hopcroft_karp(red4.pi, red4.colouring).size == n);
  CHECK(hopcroft_karp(red3.pi, red3.colouring).size == 2 * n);
}

TEST_CASE("extraction reads covers gadget by gadget") {
  const int n = 10;
  BalancedDigraph d = instance(n, 12);
  Labelling all_red(n, Label::red);
  GadgetInstance inst = build_pi(d, all_red, GadgetFamily::delta4);

  // all-white cover: every gadget nonempty but not all black, so all red
  VertexCover white_cover, black_cover, half;
  for (int p = 0; p < inst.pi.size(); ++p) {
    if (inst.role[static_cast<std::size_t>(p)] == role_w) white_cover.push_back(p);
    if (inst.role[static_cast<std::size_t>(p)] == role_b) black_cover.push_back(p);
    int v = inst.origin[static_cast<std::size_t>(p)];
    if (v < n / 2 ? inst.role[static_cast<std::size_t>(p)] == role_b
                  : inst.role[static_cast<std::size_t>(p)] == role_w)
      half.push_back(p);
  }
  CHECK(verify_cover(inst.pi, white_cover));
  CHECK(verify_cover(inst.pi, black_cover));

  RecutResult w = extract_recut(inst, white_cover);
  CHECK(blues(w.l_out) == 0);
  CHECK(w.boundary.crossing == 0);
  CHECK(w.bad == 0);

  RecutResult b = extract_recut(inst, black_cover);
  CHECK(blues(b.l_out) == n);
  CHECK(b.boundary.crossing == 0);

  // a half-and-half selection is not a valid cover, but extraction is total
  RecutResult h = extract_recut(inst, half);
  CHECK(blues(h.l_out) == n / 2);
  for (int v = 0; v < n; ++v)
    CHECK((h.l_out[static_cast<std::size_t>(v)] == Label::blue) == (v < n / 2));

  // empty intersection means red
  RecutResult none = extract_recut(inst, {});
  CHECK(blues(none.l_out) == 0);
}

TEST_CASE("the counter-black branch mirrors colour preferences") {
  const int n = 10;
  BalancedDigraph d = instance(n, 13);
  GadgetInstance inst = build_pi(d, Labelling(n, Label::red), GadgetFamily::delta4, Branch::counter_black);
  VertexCover white_cover, black_cover;
  for (int p = 0; p < inst.pi.size(); ++p) {
    if (inst.role[static_cast<std::size_t>(p)] == role_w) white_cover.push_back(p);
    if (inst.role[static_cast<std::size_t>(p)] == role_b) black_cover.push_back(p);
  }
  // all-white now reads blue, all-black reads red
  CHECK(blues(extract_recut(inst, white_cover).l_out) == n);
  CHECK(blues(extract_recut(inst, black_cover).l_out) == 0);

  // pendants sit on the white side and are coloured black
  GadgetInstance bl = build_pi(d, Labelling(n, Label::blue), GadgetFamily::delta4, Branch::counter_black);
  for (int v = 0; v < n; ++v) {
    int p = bl.pendant_of[static_cast<std::size_t>(v)];
    REQUIRE(p >= 0);
    CHECK(bl.colouring[static_cast<std::size_t>(p)] == Colour::black);
    CHECK(bl.role[static_cast<std::size_t>(p)] == role_pendant);
    bool attached_to_white = false;
    for (int q : bl.pi.neighbours(p))
      attached_to_white = attached_to_white || bl.colouring[static_cast<std::size_t>(q)] == Colour::white;
    CHECK(attached_to_white);
    CHECK(bl.pi.degree(p) == 1);
  }
}

TEST_CASE("directed crossing counts balance exactly") {
  const int n = 40;
  BalancedDigraph d = instance(n, 14);
  for (std::uint64_t s : {1ull, 2ull, 3ull, 4ull}) {
    Labelling l = random_labelling(n, 100 + s);
    ArcCrossings ac = count_arc_crossings(d, l);
    EdgeFraction f = boundary_fraction(d.underlying(), l);
    CHECK(ac.red_to_blue == ac.blue_to_red);
    CHECK(ac.red_to_blue + ac.blue_to_red == f.crossing);
  }
}

TEST_CASE("bad vertices dominate outgoing crossings") {
  const int n = 40;
  BalancedDigraph d = instance(n, 15);
  for (std::uint64_t s : {5ull, 6ull, 7ull}) {
    Labelling l = random_labelling(n, 200 + s);
    ArcCrossings ac = count_arc_crossings(d, l);
    // each bad vertex has at most two outgoing arcs, so r->b <= 2 * bad
    CHECK(ac.red_to_blue <= 2 * count_bad(d, l, BadDirection::out_neighbour));
    CHECK(ac.blue_to_red <= 2 * count_bad(d, l, BadDirection::in_neighbour));
  }

  // hand-checked: directed 4-cycle labelled R,B,R,B has two bad vertices each way
  BalancedDigraph c4 = BalancedDigraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Labelling rbrb = {Label::red, Label::blue, Label::red, Label::blue};
  CHECK(count_bad(c4, rbrb, BadDirection::out_neighbour) == 2);
  CHECK(count_bad(c4, rbrb, BadDirection::in_neighbour) == 2);
  CHECK(count_bad(c4, Labelling(4, Label::red)) == 0);
}

TEST_CASE("reduction bound holds for exact and near-exact covers") {
  const int n = 24;
  BalancedDigraph d = instance(n, 16);
  Labelling l = random_labelling(n, 301);
  for (GadgetFamily family : {GadgetFamily::delta4, GadgetFamily::delta3}) {
    GadgetInstance inst = build_pi(d, l, family);
    VertexCover exact = opt_2vc(inst.pi, inst.colouring);
    ReductionCheck chk = verify_reduction_bound(inst, exact, 0.0);
    CHECK(chk.valid_cover);
    CHECK(chk.excess == 0);
    CHECK(chk.crossing == 0);  // an optimal cover extracts a homogeneous labelling
    CHECK(chk.applicable);
    CHECK(chk.holds);
    CHECK(chk.bad_gadgets_ok);
    CHECK(chk.red_to_blue == chk.blue_to_red);

    // inflating the cover by one full gadget keeps it valid and costs excess
    VertexCover padded = exact;
    for (int p : inst.gadget_vertices(0))
      if (!std::binary_search(padded.begin(), padded.end(), p)) padded.push_back(p);
    std::sort(padded.begin(), padded.end());
    ReductionCheck loose = verify_reduction_bound(inst, padded, 1.0);
    CHECK(loose.valid_cover);
    CHECK(loose.excess > 0);
    CHECK(loose.crossing <= 4 * loose.excess);
    CHECK(loose.holds);
  }
}

TEST_CASE("invalid covers are flagged and never applicable") {
  const int n = 8;
  BalancedDigraph d = instance(n, 17);
  GadgetInstance inst = build_pi(d, Labelling(n, Label::red), GadgetFamily::delta4);
  ReductionCheck chk = verify_reduction_bound(inst, {}, 0.5);
  CHECK(!chk.valid_cover);
  CHECK(!chk.applicable);
}

TEST_CASE("path gadget reconstruction structure on small sources") {
  for (int n : {6, 8}) {
    Delta3Check chk = verify_delta3_reconstruction(instance(n, static_cast<std::uint64_t>(n)));
    CAPTURE(n);
    CHECK(chk.opt_ok);
    CHECK(chk.opt_brute == 2 * n);
    CHECK(chk.min_class_size == 2);
    CHECK(chk.classes_ok);
    CHECK(chk.passes());
  }
}

TEST_CASE("round trip of names") {
  CHECK(parse_family(to_string(GadgetFamily::delta4)) == GadgetFamily::delta4);
  CHECK(parse_family(to_string(GadgetFamily::delta3)) == GadgetFamily::delta3);
  CHECK(parse_branch(to_string(Branch::counter_white)) == Branch::counter_white);
  CHECK(parse_branch(to_string(Branch::counter_black)) == Branch::counter_black);
  CHECK_THROWS_AS(parse_family("delta5"), InputError);
  CHECK_THROWS_AS(parse_branch("counter-green"), InputError);
  CHECK(role_name(role_w1) == "w1");
  CHECK(role_name(role_pendant) == "p");

  const int n = 6;
  GadgetInstance inst = build_pi(instance(n, 20), Labelling(n, Label::red), GadgetFamily::delta3);
  std::string map = instance_map_to_string(inst);
  CHECK(std::count(map.begin(), map.end(), '\n') == inst.pi.size());
  CHECK(map.find("0 0 w1") == 0);
}
