#include "builder.hpp"

#include <algorithm>
#include <numeric>

namespace akmove::detail {

std::vector<int> Builder::append(const Diagram& d, long key_offset) {
  crossing_node.clear();
  vertex_node.clear();
  loop_node.clear();
  for (int c = 0; c < d.num_crossings(); ++c) crossing_node.push_back(add_node(NodeKind::Crossing, 4));
  for (int v = 0; v < d.num_vertices(); ++v)
    vertex_node.push_back(add_node(NodeKind::Vertex, static_cast<int>(d.vertex(v).arcs.size())));
  for (int l = 0; l < d.num_loops(); ++l) loop_node.push_back(add_node(NodeKind::Loop, 2));
  auto end_of = [&](Slot s) {
    const auto& table = s.kind == NodeKind::Crossing ? crossing_node
                        : s.kind == NodeKind::Vertex ? vertex_node
                                                     : loop_node;
    return End{table[static_cast<std::size_t>(s.node)], s.pos};
  };
  std::vector<int> arc_edge(static_cast<std::size_t>(d.num_arcs()));
  for (int a = 0; a < d.num_arcs(); ++a)
    arc_edge[static_cast<std::size_t>(a)] = add_edge(end_of(d.tail(a)), end_of(d.head(a)), key_offset + a);
  next_key_ = std::max(next_key_, key_offset + d.num_arcs());
  return arc_edge;
}

int Builder::add_node(NodeKind kind, int degree) {
  Node n;
  n.kind = kind;
  n.edge.assign(static_cast<std::size_t>(degree), -1);
  nodes.push_back(std::move(n));
  return static_cast<int>(nodes.size()) - 1;
}

int Builder::add_edge(End tail, End head, long key) {
  Edge e;
  e.tail = tail;
  e.head = head;
  e.key = key;
  edges.push_back(e);
  int id = static_cast<int>(edges.size()) - 1;
  node(tail.node).edge[static_cast<std::size_t>(tail.pos)] = id;
  node(head.node).edge[static_cast<std::size_t>(head.pos)] = id;
  next_key_ = std::max(next_key_, key + 1);
  return id;
}

void Builder::set_head(int e, End h) {
  edge(e).head = h;
  node(h.node).edge[static_cast<std::size_t>(h.pos)] = e;
}

void Builder::set_tail(int e, End t) {
  edge(e).tail = t;
  node(t.node).edge[static_cast<std::size_t>(t.pos)] = e;
}

int Builder::split(int e, End in, End out, long key) {
  End old_head = edge(e).head;
  set_head(e, in);
  return add_edge(out, old_head, key);
}

void Builder::join(int e_in, int e_out) {
  int j = add_node(NodeKind::Loop, 2);
  set_head(e_in, {j, 0});
  set_tail(e_out, {j, 1});
}

Diagram Builder::build() const {
  std::vector<Node> ns = nodes;
  std::vector<Edge> es = edges;
  auto set_h = [&](int e, End h) {
    es[static_cast<std::size_t>(e)].head = h;
    ns[static_cast<std::size_t>(h.node)].edge[static_cast<std::size_t>(h.pos)] = e;
  };
  for (std::size_t j = 0; j < ns.size(); ++j) {
    Node& nd = ns[j];
    if (!nd.alive || nd.kind != NodeKind::Loop) continue;
    int ein = nd.edge[0], eout = nd.edge[1];
    if (ein == eout) continue;  // a free loop stays
    Edge& a = es[static_cast<std::size_t>(ein)];
    Edge& b = es[static_cast<std::size_t>(eout)];
    a.key = std::min(a.key, b.key);
    b.alive = false;
    nd.alive = false;
    End h = b.head;
    if (h.node == static_cast<int>(j)) {
      // eout came straight back into this joint: the merged edge is a loop on it
      nd.alive = true;
      nd.edge[0] = ein;
      nd.edge[1] = ein;
      es[static_cast<std::size_t>(ein)].head = {static_cast<int>(j), 0};
      es[static_cast<std::size_t>(ein)].tail = {static_cast<int>(j), 1};
      continue;
    }
    set_h(ein, h);
  }

  std::vector<int> order;
  for (std::size_t e = 0; e < es.size(); ++e)
    if (es[e].alive) order.push_back(static_cast<int>(e));
  std::sort(order.begin(), order.end(), [&](int l, int r) { return es[static_cast<std::size_t>(l)].key < es[static_cast<std::size_t>(r)].key; });
  std::vector<int> arc_of(es.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) arc_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  std::vector<int> index_of(ns.size(), -1);
  int nc = 0, nv = 0, nl = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!ns[i].alive) continue;
    switch (ns[i].kind) {
      case NodeKind::Crossing: index_of[i] = nc++; break;
      case NodeKind::Vertex: index_of[i] = nv++; break;
      case NodeKind::Loop: index_of[i] = nl++; break;
    }
  }
  std::vector<Crossing> crossings(static_cast<std::size_t>(nc));
  std::vector<GraphVertex> vertices(static_cast<std::size_t>(nv));
  std::vector<Slot> heads(order.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const Node& nd = ns[i];
    if (!nd.alive) continue;
    int idx = index_of[i];
    if (nd.kind == NodeKind::Crossing) {
      for (int p = 0; p < 4; ++p) {
        int e = nd.edge[static_cast<std::size_t>(p)];
        if (e < 0 || !es[static_cast<std::size_t>(e)].alive) throw Error(ErrorKind::Validity, "dangling crossing slot");
        crossings[static_cast<std::size_t>(idx)].arcs[static_cast<std::size_t>(p)] = arc_of[static_cast<std::size_t>(e)];
      }
    } else if (nd.kind == NodeKind::Vertex) {
      for (int e : nd.edge) {
        if (e < 0 || !es[static_cast<std::size_t>(e)].alive) throw Error(ErrorKind::Validity, "dangling vertex slot");
        vertices[static_cast<std::size_t>(idx)].arcs.push_back(arc_of[static_cast<std::size_t>(e)]);
      }
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge& e = es[static_cast<std::size_t>(order[i])];
    const Node& hn = ns[static_cast<std::size_t>(e.head.node)];
    if (!hn.alive) throw Error(ErrorKind::Validity, "edge ends at a removed node");
    heads[i] = Slot{hn.kind, index_of[static_cast<std::size_t>(e.head.node)], e.head.pos};
  }
  return Diagram::from_parts(std::move(crossings), std::move(vertices), std::move(heads));
}

}  // namespace akmove::detail
