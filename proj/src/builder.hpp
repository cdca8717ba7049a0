#pragma once

#include <vector>

#include "akmove/diagram.hpp"

namespace akmove::detail {

// Mutable planar map used to assemble edited diagrams. Loop nodes of degree 2
// act as joints (slot 0 in, slot 1 out) and are dissolved by build(). Edge
// keys decide the final arc numbering; merged edges keep the smaller key.
class Builder {
 public:
  struct End {
    int node = -1;
    int pos = -1;
  };
  struct Node {
    NodeKind kind = NodeKind::Crossing;
    std::vector<int> edge;
    bool alive = true;
  };
  struct Edge {
    End tail, head;
    long key = 0;
    bool alive = true;
  };

  Builder() = default;
  explicit Builder(const Diagram& d) { append(d, 0); }

  // Copies d in. Returns the edge id of each arc of d; keys are offset.
  std::vector<int> append(const Diagram& d, long key_offset);

  int add_node(NodeKind kind, int degree);
  int add_edge(End tail, End head, long key);
  void set_head(int e, End h);
  void set_tail(int e, End t);
  // e now ends at `in`; a new edge runs from `out` to the old head of e.
  int split(int e, End in, End out, long key);
  // Joins the head of e_in to the tail of e_out through a new joint.
  void join(int e_in, int e_out);
  void kill_node(int n) { nodes[static_cast<std::size_t>(n)].alive = false; }
  void kill_edge(int e) { edges[static_cast<std::size_t>(e)].alive = false; }
  long fresh_key() { return next_key_++; }

  int edge_at(End s) const { return nodes[static_cast<std::size_t>(s.node)].edge[static_cast<std::size_t>(s.pos)]; }
  Edge& edge(int e) { return edges[static_cast<std::size_t>(e)]; }
  Node& node(int n) { return nodes[static_cast<std::size_t>(n)]; }

  // Dissolves joints, renumbers and validates. Throws Error(Validity) when
  // the result is not a valid planar diagram.
  Diagram build() const;

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // Node index of each crossing / vertex / loop of the most recent append.
  std::vector<int> crossing_node, vertex_node, loop_node;

 private:
  long next_key_ = 0;
};

}  // namespace akmove::detail
