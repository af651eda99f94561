#include "vclab/gadgets.hpp"

#include <algorithm>
#include <sstream>

#include "vclab/matching.hpp"

namespace vclab {

std::vector<int> GadgetInstance::gadget_vertices(int v) const {
  std::vector<int> out;
  int cs = core_size();
  for (int i = 0; i < cs; ++i) out.push_back(v * cs + i);
  if (pendant_of[static_cast<std::size_t>(v)] >= 0) out.push_back(pendant_of[static_cast<std::size_t>(v)]);
  return out;
}

GadgetInstance build_pi(const BalancedDigraph& d, const Labelling& input, GadgetFamily family, Branch branch) {
  int n = d.size();
  if (static_cast<int>(input.size()) != n) throw InputError("build_pi: labelling size mismatch");
  for (int v = 0; v < n; ++v)
    if (d.in_neighbours(v).size() != 2 || d.out_neighbours(v).size() != 2)
      throw InputError("build_pi: vertex " + std::to_string(v) + " does not have in-degree = out-degree = 2");

  GadgetInstance inst;
  inst.family = family;
  inst.branch = branch;
  inst.d = d;
  inst.input = input;

  int cs = inst.core_size();
  int n_core = n * cs;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> origin, role;
  origin.reserve(static_cast<std::size_t>(n_core));
  role.reserve(static_cast<std::size_t>(n_core));
  Colouring colours;

  for (int v = 0; v < n; ++v) {
    if (family == GadgetFamily::delta4) {
      origin.push_back(v);
      role.push_back(role_w);
      colours.push_back(Colour::white);
      origin.push_back(v);
      role.push_back(role_b);
      colours.push_back(Colour::black);
      edges.emplace_back(cs * v + 0, cs * v + 1);
    } else {
      static constexpr int path_roles[4] = {role_w1, role_b1, role_w2, role_b2};
      for (int i = 0; i < 4; ++i) {
        origin.push_back(v);
        role.push_back(path_roles[i]);
        colours.push_back(i % 2 == 0 ? Colour::white : Colour::black);
        if (i > 0) edges.emplace_back(cs * v + i - 1, cs * v + i);
      }
    }
  }
  // an arc (u, x) joins u's outgoing black to x's incoming white
  int out_off = family == GadgetFamily::delta4 ? 1 : 3;  // b_v or b2
  int in_off = 0;                                        // w_v or w1
  for (auto [u, x] : d.arcs()) edges.emplace_back(cs * u + out_off, cs * x + in_off);
  // pendants on blue gadgets
  bool cw = branch == Branch::counter_white;
  int anchor_off = family == GadgetFamily::delta4 ? (cw ? 1 : 0)   // b_v / w_v
                                                  : (cw ? 1 : 2);  // b1 / w2
  inst.pendant_of.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (input[static_cast<std::size_t>(v)] != Label::blue) continue;
    int p = static_cast<int>(origin.size());
    origin.push_back(v);
    role.push_back(role_pendant);
    colours.push_back(cw ? Colour::white : Colour::black);
    edges.emplace_back(cs * v + anchor_off, p);
    inst.pendant_of[static_cast<std::size_t>(v)] = p;
  }

  inst.pi = Graph::from_edges(static_cast<int>(origin.size()), edges);
  inst.colouring = std::move(colours);
  inst.origin = std::move(origin);
  inst.role = std::move(role);
  inst.tape_keys.reserve(inst.origin.size());
  for (std::size_t p = 0; p < inst.origin.size(); ++p)
    inst.tape_keys.push_back(static_cast<std::uint64_t>(inst.origin[p]) * 8 + static_cast<std::uint64_t>(inst.role[p]));

  if (!proper_bicolouring(inst.pi, inst.colouring)) throw InternalError("build_pi: colouring not proper");
  int cap = family == GadgetFamily::delta4 ? 4 : 3;
  for (int p = 0; p < inst.pi.size(); ++p)
    if (inst.pi.degree(p) > cap) throw InternalError("build_pi: degree cap exceeded");
  return inst;
}

RecutResult extract_recut(const GadgetInstance& inst, const std::vector<int>& cover) {
  int n = inst.source_size();
  std::vector<bool> in_cover(static_cast<std::size_t>(inst.pi.size()), false);
  for (int p : cover) {
    if (p < 0 || p >= inst.pi.size()) throw InputError("extract_recut: cover vertex out of range");
    in_cover[static_cast<std::size_t>(p)] = true;
  }
  Colour must = inst.branch == Branch::counter_white ? Colour::black : Colour::white;
  std::vector<bool> nonempty(static_cast<std::size_t>(n), false);
  std::vector<bool> pure(static_cast<std::size_t>(n), true);
  for (int p = 0; p < inst.pi.size(); ++p) {
    if (!in_cover[static_cast<std::size_t>(p)]) continue;
    auto v = static_cast<std::size_t>(inst.origin[static_cast<std::size_t>(p)]);
    nonempty[v] = true;
    if (inst.colouring[static_cast<std::size_t>(p)] != must) pure[v] = false;
  }
  RecutResult res;
  res.l_out.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    res.l_out[static_cast<std::size_t>(v)] =
        (nonempty[static_cast<std::size_t>(v)] && pure[static_cast<std::size_t>(v)]) ? Label::blue : Label::red;
  res.boundary = boundary_fraction(inst.d.underlying(), res.l_out);
  res.bad = count_bad(inst.d, res.l_out,
                      inst.branch == Branch::counter_white ? BadDirection::out_neighbour : BadDirection::in_neighbour);
  return res;
}

std::int64_t count_bad(const BalancedDigraph& d, const Labelling& l, BadDirection dir) {
  if (static_cast<int>(l.size()) != d.size()) throw InputError("count_bad: labelling size mismatch");
  std::int64_t bad = 0;
  for (int v = 0; v < d.size(); ++v) {
    if (l[static_cast<std::size_t>(v)] != Label::red) continue;
    auto nbrs = dir == BadDirection::out_neighbour ? d.out_neighbours(v) : d.in_neighbours(v);
    for (int u : nbrs)
      if (l[static_cast<std::size_t>(u)] == Label::blue) {
        ++bad;
        break;
      }
  }
  return bad;
}

ArcCrossings count_arc_crossings(const BalancedDigraph& d, const Labelling& l) {
  if (static_cast<int>(l.size()) != d.size()) throw InputError("count_arc_crossings: labelling size mismatch");
  ArcCrossings c;
  for (auto [u, x] : d.arcs()) {
    Label lu = l[static_cast<std::size_t>(u)];
    Label lx = l[static_cast<std::size_t>(x)];
    if (lu == lx) continue;
    (lu == Label::red ? c.red_to_blue : c.blue_to_red) += 1;
  }
  return c;
}

ReductionCheck verify_reduction_bound(const GadgetInstance& inst, const std::vector<int>& cover, double eps) {
  if (eps < 0) throw InputError("verify_reduction_bound: negative eps");
  ReductionCheck chk;
  chk.valid_cover = verify_cover(inst.pi, cover);
  chk.opt = static_cast<std::int64_t>(opt_2vc(inst.pi, inst.colouring).size());
  chk.cover_size = static_cast<std::int64_t>(cover.size());
  chk.ratio = chk.opt == 0 ? 1.0 : static_cast<double>(chk.cover_size) / static_cast<double>(chk.opt);
  chk.excess = chk.cover_size - chk.opt;
  auto rec = extract_recut(inst, cover);
  chk.crossing = rec.boundary.crossing;
  chk.edge_total = rec.boundary.total;
  chk.boundary = rec.boundary.value();
  auto arcs = count_arc_crossings(inst.d, rec.l_out);
  chk.red_to_blue = arcs.red_to_blue;
  chk.blue_to_red = arcs.blue_to_red;
  chk.bad_count = rec.bad;
  if (chk.valid_cover) {
    BadDirection dir =
        inst.branch == Branch::counter_white ? BadDirection::out_neighbour : BadDirection::in_neighbour;
    std::vector<std::int64_t> per_gadget(static_cast<std::size_t>(inst.source_size()), 0);
    for (int p : cover) per_gadget[static_cast<std::size_t>(inst.origin[static_cast<std::size_t>(p)])] += 1;
    std::int64_t need = inst.family == GadgetFamily::delta4 ? 2 : 3;
    for (int v = 0; v < inst.source_size(); ++v) {
      if (rec.l_out[static_cast<std::size_t>(v)] != Label::red) continue;
      auto nbrs = dir == BadDirection::out_neighbour ? inst.d.out_neighbours(v) : inst.d.in_neighbours(v);
      bool is_bad = false;
      for (int u : nbrs) is_bad = is_bad || rec.l_out[static_cast<std::size_t>(u)] == Label::blue;
      if (is_bad && per_gadget[static_cast<std::size_t>(v)] < need) chk.bad_gadgets_ok = false;
    }
  }
  chk.bound = (inst.family == GadgetFamily::delta4 ? 2.0 : 4.0) * eps;
  chk.applicable = chk.valid_cover && chk.ratio <= 1.0 + eps + 1e-12;
  chk.holds = !chk.applicable || chk.boundary <= chk.bound + 1e-12;
  return chk;
}

std::string to_string(GadgetFamily f) { return f == GadgetFamily::delta4 ? "delta4" : "delta3"; }
std::string to_string(Branch b) { return b == Branch::counter_white ? "counter-white" : "counter-black"; }

GadgetFamily parse_family(const std::string& s) {
  if (s == "delta4") return GadgetFamily::delta4;
  if (s == "delta3") return GadgetFamily::delta3;
  throw InputError("unknown gadget family: " + s);
}

Branch parse_branch(const std::string& s) {
  if (s == "counter-white") return Branch::counter_white;
  if (s == "counter-black") return Branch::counter_black;
  throw InputError("unknown branch: " + s);
}

std::string role_name(int role) {
  switch (role) {
    case role_w: return "w";
    case role_b: return "b";
    case role_w1: return "w1";
    case role_b1: return "b1";
    case role_w2: return "w2";
    case role_b2: return "b2";
    case role_pendant: return "p";
    default: throw InternalError("role_name: unknown role");
  }
}

std::string instance_map_to_string(const GadgetInstance& inst) {
  std::ostringstream ss;
  for (int p = 0; p < inst.pi.size(); ++p)
    ss << p << ' ' << inst.origin[static_cast<std::size_t>(p)] << ' '
       << role_name(inst.role[static_cast<std::size_t>(p)]) << '\n';
  return ss.str();
}

}  // namespace vclab
