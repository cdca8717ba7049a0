#include "akmove/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace akmove {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::Validity, msg); }

}  // namespace

Diagram Diagram::from_parts(std::vector<Crossing> crossings, std::vector<GraphVertex> vertices,
                            std::vector<Slot> heads) {
  Diagram d;
  d.crossings_ = std::move(crossings);
  d.vertices_ = std::move(vertices);
  d.heads_ = std::move(heads);
  d.finish();
  return d;
}

int Diagram::degree(NodeKind kind, int node) const {
  switch (kind) {
    case NodeKind::Crossing: return 4;
    case NodeKind::Vertex: return static_cast<int>(vertex(node).arcs.size());
    case NodeKind::Loop: return 2;
  }
  return 0;
}

int Diagram::arc_at(Slot s) const {
  switch (s.kind) {
    case NodeKind::Crossing: return crossing(s.node).arcs.at(static_cast<std::size_t>(s.pos));
    case NodeKind::Vertex: return vertex(s.node).arcs.at(static_cast<std::size_t>(s.pos));
    case NodeKind::Loop: return loop_arcs_.at(static_cast<std::size_t>(s.node));
  }
  return -1;
}

int Diagram::next_arc(int arc) const {
  Slot h = head(arc);
  if (h.kind == NodeKind::Vertex) return -1;
  if (h.kind == NodeKind::Loop) return arc;
  return crossing(h.node).arcs[static_cast<std::size_t>((h.pos + 2) % 4)];
}

int Diagram::prev_arc(int arc) const {
  Slot t = tail(arc);
  if (t.kind == NodeKind::Vertex) return -1;
  if (t.kind == NodeKind::Loop) return arc;
  return crossing(t.node).arcs[static_cast<std::size_t>((t.pos + 2) % 4)];
}

bool Diagram::touches_vertex(int arc) const {
  return head(arc).kind == NodeKind::Vertex || tail(arc).kind == NodeKind::Vertex;
}

int Diagram::region_of_face(int f) const {
  const Face& face = faces_.at(static_cast<std::size_t>(f));
  return outer_faces_[static_cast<std::size_t>(face.piece)] == f ? -1 : f;
}

void Diagram::finish() {
  const int n = num_arcs();
  // Collect the slots of every arc.
  std::vector<std::vector<Slot>> occ(static_cast<std::size_t>(n));
  auto note = [&](int arc, Slot s) {
    if (arc < 0 || arc >= n) invalid("arc id " + std::to_string(arc + 1) + " out of range");
    occ[static_cast<std::size_t>(arc)].push_back(s);
  };
  for (int c = 0; c < num_crossings(); ++c)
    for (int p = 0; p < 4; ++p) note(crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(p)], {NodeKind::Crossing, c, p});
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& arcs = vertices_[static_cast<std::size_t>(v)].arcs;
    for (int p = 0; p < static_cast<int>(arcs.size()); ++p) note(arcs[static_cast<std::size_t>(p)], {NodeKind::Vertex, v, p});
  }

  loop_arcs_.clear();
  std::vector<std::pair<int, int>> loops;  // (loop index, arc)
  tails_.assign(static_cast<std::size_t>(n), Slot{});
  for (int a = 0; a < n; ++a) {
    Slot h = heads_[static_cast<std::size_t>(a)];
    auto& o = occ[static_cast<std::size_t>(a)];
    if (h.kind == NodeKind::Loop) {
      if (!o.empty()) invalid("loop arc " + std::to_string(a + 1) + " also used at a crossing or vertex");
      h.pos = 0;
      heads_[static_cast<std::size_t>(a)] = h;
      tails_[static_cast<std::size_t>(a)] = {NodeKind::Loop, h.node, 1};
      loops.emplace_back(h.node, a);
      continue;
    }
    if (o.size() != 2)
      invalid("arc " + std::to_string(a + 1) + " is used " + std::to_string(o.size()) + " times (expected 2)");
    if (o[0] == h) tails_[static_cast<std::size_t>(a)] = o[1];
    else if (o[1] == h) tails_[static_cast<std::size_t>(a)] = o[0];
    else invalid("arc " + std::to_string(a + 1) + " head slot does not hold the arc");
  }
  std::sort(loops.begin(), loops.end());
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (loops[i].first != static_cast<int>(i)) invalid("loop indices must be dense");
    loop_arcs_.push_back(loops[i].second);
  }

  // Orientation at crossings: slot 0 in, slot 2 out, exactly one of 1/3 in.
  signs_.assign(crossings_.size(), 0);
  for (int c = 0; c < num_crossings(); ++c) {
    const auto& x = crossings_[static_cast<std::size_t>(c)].arcs;
    auto is_in = [&](int p) { return head(x[static_cast<std::size_t>(p)]) == Slot{NodeKind::Crossing, c, p}; };
    if (!is_in(0) || is_in(2))
      invalid("orientation mismatch at crossing " + std::to_string(c + 1) + ": under strand must enter at the first slot");
    if (is_in(1) == is_in(3))
      invalid("orientation mismatch at crossing " + std::to_string(c + 1) + ": over strand must pass through");
    signs_[static_cast<std::size_t>(c)] = is_in(3) ? 1 : -1;
  }
  build_components();
  build_faces();
}

void Diagram::build_components() {
  const int n = num_arcs();
  components_.clear();
  arc_component_.assign(static_cast<std::size_t>(n), -1);
  std::vector<Component> comps;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  // Open strands start at a vertex.
  for (int a = 0; a < n; ++a) {
    if (tail(a).kind != NodeKind::Vertex) continue;
    Component comp;
    comp.closed = false;
    int x = a;
    while (true) {
      if (seen[static_cast<std::size_t>(x)]) invalid("strand through arc " + std::to_string(x + 1) + " revisits itself");
      seen[static_cast<std::size_t>(x)] = 1;
      comp.arcs.push_back(x);
      int nx = next_arc(x);
      if (nx < 0) break;
      x = nx;
    }
    comps.push_back(std::move(comp));
  }
  for (int a = 0; a < n; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    Component comp;
    int x = a;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      comp.arcs.push_back(x);
      x = next_arc(x);
      if (x < 0) invalid("closed strand reaches a vertex");
    }
    if (x != a) invalid("strand through arc " + std::to_string(a + 1) + " is not a cycle");
    comps.push_back(std::move(comp));
  }
  auto min_arc = [](const Component& c) { return *std::min_element(c.arcs.begin(), c.arcs.end()); };
  std::sort(comps.begin(), comps.end(), [&](const Component& l, const Component& r) { return min_arc(l) < min_arc(r); });
  components_ = std::move(comps);
  for (int i = 0; i < num_components(); ++i)
    for (int a : components_[static_cast<std::size_t>(i)].arcs) arc_component_[static_cast<std::size_t>(a)] = i;
}

void Diagram::build_faces() {
  const int n = num_arcs();
  faces_.clear();
  dart_face_.assign(static_cast<std::size_t>(2 * n), -1);

  // Connected pieces by union-find over nodes.
  std::vector<int> node_base = {0, num_crossings(), num_crossings() + num_vertices()};
  const int num_nodes = num_crossings() + num_vertices() + num_loops();
  auto node_id = [&](Slot s) { return node_base[static_cast<std::size_t>(s.kind)] + s.node; };
  std::vector<int> parent(static_cast<std::size_t>(num_nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int a = 0; a < n; ++a) parent[static_cast<std::size_t>(find(node_id(head(a))))] = find(node_id(tail(a)));
  std::vector<int> piece_of_root(static_cast<std::size_t>(num_nodes), -1);
  num_pieces_ = 0;
  std::vector<int> node_piece(static_cast<std::size_t>(num_nodes));
  for (int v = 0; v < num_nodes; ++v) {
    int r = find(v);
    if (piece_of_root[static_cast<std::size_t>(r)] < 0) piece_of_root[static_cast<std::size_t>(r)] = num_pieces_++;
    node_piece[static_cast<std::size_t>(v)] = piece_of_root[static_cast<std::size_t>(r)];
  }

  for (int a = 0; a < n; ++a) {
    for (bool fwd : {true, false}) {
      Dart start{a, fwd};
      if (dart_face_[dart_index(start)] >= 0) continue;
      Face face;
      face.piece = node_piece[static_cast<std::size_t>(node_id(tail(a)))];
      int fi = static_cast<int>(faces_.size());
      Dart d = start;
      while (dart_face_[dart_index(d)] < 0) {
        dart_face_[dart_index(d)] = fi;
        face.darts.push_back(d);
        Slot arrive = d.forward ? head(d.arc) : tail(d.arc);
        int deg = degree(arrive.kind, arrive.node);
        Slot leave{arrive.kind, arrive.node, (arrive.pos + deg - 1) % deg};
        int na = arc_at(leave);
        d = Dart{na, tail(na) == leave};
      }
      if (!(d == start)) invalid("face tracing did not close");
      faces_.push_back(std::move(face));
    }
  }

  // Isolated vertices form pieces with a single face and no darts.
  std::vector<int> faces_per_piece(static_cast<std::size_t>(num_pieces_), 0);
  for (const auto& f : faces_) ++faces_per_piece[static_cast<std::size_t>(f.piece)];
  std::vector<int> nodes_per_piece(static_cast<std::size_t>(num_pieces_), 0);
  for (int v = 0; v < num_nodes; ++v) ++nodes_per_piece[static_cast<std::size_t>(node_piece[static_cast<std::size_t>(v)])];
  std::vector<int> arcs_per_piece(static_cast<std::size_t>(num_pieces_), 0);
  for (int a = 0; a < n; ++a) ++arcs_per_piece[static_cast<std::size_t>(node_piece[static_cast<std::size_t>(node_id(tail(a)))])];
  for (int p = 0; p < num_pieces_; ++p) {
    if (arcs_per_piece[static_cast<std::size_t>(p)] == 0) {
      Face f;
      f.piece = p;
      faces_.push_back(f);
      ++faces_per_piece[static_cast<std::size_t>(p)];
    }
    int chi = nodes_per_piece[static_cast<std::size_t>(p)] - arcs_per_piece[static_cast<std::size_t>(p)] + faces_per_piece[static_cast<std::size_t>(p)];
    if (chi != 2) invalid("code is not planar (Euler characteristic " + std::to_string(chi) + ")");
  }

  outer_faces_.assign(static_cast<std::size_t>(num_pieces_), -1);
  auto key = [&](int f) {
    const auto& ds = faces_[static_cast<std::size_t>(f)].darts;
    int best = 1 << 30;
    for (Dart d : ds) best = std::min(best, 2 * d.arc + (d.forward ? 1 : 0));
    return std::make_pair(-static_cast<int>(ds.size()), best);
  };
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    int p = faces_[static_cast<std::size_t>(f)].piece;
    int& cur = outer_faces_[static_cast<std::size_t>(p)];
    if (cur < 0 || key(f) < key(cur)) cur = f;
  }
}

}  // namespace akmove
