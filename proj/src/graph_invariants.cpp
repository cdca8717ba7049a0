#include <algorithm>
#include <numeric>

#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "builder.hpp"

namespace akmove {

namespace {

struct GraphEdge {
  int component;
  int tail_vertex, head_vertex;
};

std::vector<GraphEdge> graph_edges(const Diagram& g) {
  std::vector<GraphEdge> out;
  for (int i = 0; i < g.num_components(); ++i) {
    const Component& c = g.component(i);
    if (c.closed) continue;
    out.push_back({i, g.tail(c.arcs.front()).node, g.head(c.arcs.back()).node});
  }
  return out;
}

// Orders a cycle's edges and reports which ones run against the cycle.
std::vector<std::pair<int, bool>> orient_cycle(const std::vector<GraphEdge>& es, const std::vector<int>& cycle) {
  std::vector<std::pair<int, bool>> out{{cycle[0], true}};
  int cur = es[static_cast<std::size_t>(cycle[0])].head_vertex;
  int prev = cycle[0];
  while (out.size() < cycle.size()) {
    for (int e : cycle) {
      if (e == prev) continue;
      const GraphEdge& ge = es[static_cast<std::size_t>(e)];
      if (ge.tail_vertex != cur && ge.head_vertex != cur) continue;
      bool fwd = ge.tail_vertex == cur;
      out.emplace_back(e, fwd);
      cur = fwd ? ge.head_vertex : ge.tail_vertex;
      prev = e;
      break;
    }
  }
  return out;
}

// Link diagram made of the given cycles, each oriented along its traversal.
Diagram constituent(const Diagram& g, const std::vector<GraphEdge>& es, const std::vector<std::vector<int>>& cycles) {
  Diagram d = g;
  std::vector<char> keep_comp(static_cast<std::size_t>(g.num_components()), 0);
  for (const auto& cyc : cycles)
    for (auto [e, fwd] : orient_cycle(es, cyc)) {
      int comp = es[static_cast<std::size_t>(e)].component;
      keep_comp[static_cast<std::size_t>(comp)] = 1;
      if (!fwd) d = reverse(d, comp);
    }
  detail::Builder b(d);
  for (int c = 0; c < d.num_crossings(); ++c) {
    bool ku = keep_comp[static_cast<std::size_t>(d.under_component(c))];
    bool ko = keep_comp[static_cast<std::size_t>(d.over_component(c))];
    if (ku && ko) continue;
    int x = b.crossing_node[static_cast<std::size_t>(c)];
    b.kill_node(x);
    if (ku || ko) {
      int in = ku ? 0 : (d.sign(c) > 0 ? 3 : 1);
      b.join(b.edge_at({x, in}), b.edge_at({x, (in + 2) % 4}));
    }
  }
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (keep_comp[static_cast<std::size_t>(d.component_of(a))]) continue;
    b.kill_edge(a);
    if (d.is_loop_arc(a)) b.kill_node(b.loop_node[static_cast<std::size_t>(d.head(a).node)]);
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    int node = b.vertex_node[static_cast<std::size_t>(v)];
    b.kill_node(node);
    int in = -1, out = -1;
    const auto& arcs = d.vertex(v).arcs;
    for (int p = 0; p < static_cast<int>(arcs.size()); ++p) {
      int a = arcs[static_cast<std::size_t>(p)];
      if (!keep_comp[static_cast<std::size_t>(d.component_of(a))]) continue;
      if (d.head(a) == Slot{NodeKind::Vertex, v, p}) in = a;
      else out = a;
    }
    if (in >= 0 && out >= 0) b.join(in, out);
  }
  return b.build();
}

}  // namespace

CycleReport cycle_invariants(const Diagram& g) {
  std::vector<GraphEdge> es = graph_edges(g);
  const int m = static_cast<int>(es.size());
  if (m > 20) throw Error(ErrorKind::Budget, "too many graph edges for cycle enumeration");
  std::vector<std::vector<int>> cycles;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<int> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1u) {
        edges.push_back(e);
        ++deg[static_cast<std::size_t>(es[static_cast<std::size_t>(e)].tail_vertex)];
        ++deg[static_cast<std::size_t>(es[static_cast<std::size_t>(e)].head_vertex)];
      }
    if (std::any_of(deg.begin(), deg.end(), [](int x) { return x != 0 && x != 2; })) continue;
    // connected?
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int e : edges) parent[static_cast<std::size_t>(find(es[static_cast<std::size_t>(e)].tail_vertex))] = find(es[static_cast<std::size_t>(e)].head_vertex);
    int roots = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
      if (deg[static_cast<std::size_t>(v)] && find(v) == v) ++roots;
    if (roots == 1) cycles.push_back(edges);
  }
  auto vertices_of = [&](const std::vector<int>& cyc) {
    std::vector<int> vs;
    for (int e : cyc) {
      vs.push_back(es[static_cast<std::size_t>(e)].tail_vertex);
      vs.push_back(es[static_cast<std::size_t>(e)].head_vertex);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };
  CycleReport r;
  for (const auto& cyc : cycles) r.knots.push_back({cyc, conway_coeff(constituent(g, es, {cyc}), 2)});
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      auto vi = vertices_of(cycles[i]), vj = vertices_of(cycles[j]);
      std::vector<int> common;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      Diagram link = constituent(g, es, {cycles[i], cycles[j]});
      r.pairs.push_back({cycles[i], cycles[j], linking_number(link, 0, 1)});
    }
  return r;
}

}  // namespace akmove
