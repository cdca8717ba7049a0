#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "akmove/error.hpp"

namespace akmove {

enum class NodeKind : std::uint8_t { Crossing, Vertex, Loop };

// One arc-end position: a slot of a crossing, of a graph vertex, or of a
// crossingless loop (slot 0 = head, slot 1 = tail).
struct Slot {
  NodeKind kind = NodeKind::Crossing;
  int node = -1;
  int pos = -1;
  bool operator==(const Slot&) const = default;
};

// Arcs counterclockwise, starting at the incoming under-arc.
struct Crossing {
  std::array<int, 4> arcs{};
  bool operator==(const Crossing&) const = default;
};

// Incident arc-ends in counterclockwise order.
struct GraphVertex {
  std::vector<int> arcs;
  bool operator==(const GraphVertex&) const = default;
};

struct Component {
  std::vector<int> arcs;  // traversal order
  bool closed = true;     // false for a graph edge running vertex to vertex
};

enum class Side : std::uint8_t { Left, Right };
inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// A directed arc traversal. The face of a dart is the one on its left, so the
// forward dart of an arc sees the arc's left face and the backward dart its
// right face.
struct Dart {
  int arc = -1;
  bool forward = true;
  bool operator==(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> darts;  // boundary, counterclockwise
  int piece = 0;
};

// Immutable, validated link or spatial-graph diagram on S^2.
class Diagram {
 public:
  Diagram() { finish(); }

  // Throws Error(Validity) unless the data describe a valid planar diagram.
  // heads[a] is the slot where arc a ends; loop arcs use NodeKind::Loop with
  // node = index into the loop list.
  static Diagram from_parts(std::vector<Crossing> crossings,
                            std::vector<GraphVertex> vertices,
                            std::vector<Slot> heads);

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arcs() const { return static_cast<int>(heads_.size()); }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_loops() const { return static_cast<int>(loop_arcs_.size()); }
  bool is_link() const { return vertices_.empty(); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const GraphVertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::vector<Slot>& heads() const { return heads_; }
  const std::vector<int>& loop_arcs() const { return loop_arcs_; }

  int sign(int c) const { return signs_.at(static_cast<std::size_t>(c)); }
  Slot head(int arc) const { return heads_.at(static_cast<std::size_t>(arc)); }
  Slot tail(int arc) const { return tails_.at(static_cast<std::size_t>(arc)); }
  int arc_at(Slot s) const;
  int degree(NodeKind kind, int node) const;

  // Next arc along the orientation, or -1 at a graph vertex.
  int next_arc(int arc) const;
  int prev_arc(int arc) const;
  bool is_loop_arc(int arc) const { return tail(arc).kind == NodeKind::Loop; }
  bool touches_vertex(int arc) const;

  const Component& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  const std::vector<Component>& components() const { return components_; }
  int component_of(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }
  // Components of the over and under strand at a crossing.
  int under_component(int c) const { return component_of(crossing(c).arcs[0]); }
  int over_component(int c) const { return component_of(crossing(c).arcs[1]); }

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return dart_face_.at(dart_index(d)); }
  int face_left(int arc) const { return face_of({arc, true}); }
  int face_right(int arc) const { return face_of({arc, false}); }
  int face_on(int arc, Side s) const { return s == Side::Left ? face_left(arc) : face_right(arc); }
  int num_pieces() const { return num_pieces_; }
  int outer_face(int piece) const { return outer_faces_.at(static_cast<std::size_t>(piece)); }
  // Outer faces of all pieces share the region id -1; inner faces keep their index.
  int region_of_face(int f) const;
  int region(Dart d) const { return region_of_face(face_of(d)); }

  bool operator==(const Diagram& o) const {
    return crossings_ == o.crossings_ && vertices_ == o.vertices_ && heads_ == o.heads_;
  }

 private:
  static std::size_t dart_index(Dart d) { return static_cast<std::size_t>(d.arc) * 2 + (d.forward ? 0 : 1); }
  void finish();
  void build_components();
  void build_faces();

  std::vector<Crossing> crossings_;
  std::vector<GraphVertex> vertices_;
  std::vector<Slot> heads_;
  std::vector<Slot> tails_;
  std::vector<int> loop_arcs_;
  std::vector<int> signs_;
  std::vector<Component> components_;
  std::vector<int> arc_component_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<int> outer_faces_;
  int num_pieces_ = 0;
};

}  // namespace akmove
