#include "akmove/edits.hpp"

#include <algorithm>
#include <string>

#include "builder.hpp"

namespace akmove {

namespace {

// rot[c]: slot p of crossing c moves to slot p + rot[c]. flip[a] reverses arc a.
Diagram remap(const Diagram& d, const std::vector<int>& rot, const std::vector<char>& flip) {
  std::vector<Crossing> xs = d.crossings();
  for (int c = 0; c < d.num_crossings(); ++c) {
    int r = rot[static_cast<std::size_t>(c)];
    for (int p = 0; p < 4; ++p)
      xs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>((p + r) % 4)] = d.crossing(c).arcs[static_cast<std::size_t>(p)];
  }
  std::vector<Slot> heads(static_cast<std::size_t>(d.num_arcs()));
  for (int a = 0; a < d.num_arcs(); ++a) {
    Slot s = flip[static_cast<std::size_t>(a)] ? d.tail(a) : d.head(a);
    if (s.kind == NodeKind::Crossing) s.pos = (s.pos + rot[static_cast<std::size_t>(s.node)]) % 4;
    if (s.kind == NodeKind::Loop) s.pos = 0;
    heads[static_cast<std::size_t>(a)] = s;
  }
  return Diagram::from_parts(std::move(xs), d.vertices(), std::move(heads));
}

void check_component(const Diagram& d, int i) {
  if (i < 0 || i >= d.num_components())
    throw Error(ErrorKind::Argument, "component " + std::to_string(i + 1) + " out of range");
}

}  // namespace

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
  detail::Builder b(d1);
  b.append(d2, d1.num_arcs());
  return b.build();
}

Diagram mirror(const Diagram& d) {
  std::vector<int> rot(static_cast<std::size_t>(d.num_crossings()));
  for (int c = 0; c < d.num_crossings(); ++c) rot[static_cast<std::size_t>(c)] = d.sign(c) > 0 ? 1 : 3;
  return remap(d, rot, std::vector<char>(static_cast<std::size_t>(d.num_arcs()), 0));
}

Diagram reverse(const Diagram& d, int component) {
  check_component(d, component);
  std::vector<char> flip(static_cast<std::size_t>(d.num_arcs()), 0);
  for (int a : d.component(component).arcs) flip[static_cast<std::size_t>(a)] = 1;
  std::vector<int> rot(static_cast<std::size_t>(d.num_crossings()), 0);
  for (int c = 0; c < d.num_crossings(); ++c)
    if (d.under_component(c) == component) rot[static_cast<std::size_t>(c)] = 2;
  return remap(d, rot, flip);
}

Diagram switch_crossing(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "unknown crossing " + std::to_string(c + 1));
  std::vector<int> rot(static_cast<std::size_t>(d.num_crossings()), 0);
  rot[static_cast<std::size_t>(c)] = d.sign(c) > 0 ? 1 : 3;
  return remap(d, rot, std::vector<char>(static_cast<std::size_t>(d.num_arcs()), 0));
}

Diagram connected_sum(const Diagram& d1, int a1, const Diagram& d2, int a2) {
  for (auto [d, a] : {std::pair{&d1, a1}, std::pair{&d2, a2}}) {
    if (a < 0 || a >= d->num_arcs()) throw Error(ErrorKind::Argument, "arc " + std::to_string(a + 1) + " not found");
    if (!d->component(d->component_of(a)).closed)
      throw Error(ErrorKind::Argument, "arc " + std::to_string(a + 1) + " lies on a graph edge");
  }
  detail::Builder b(d1);
  std::vector<int> e2 = b.append(d2, d1.num_arcs());
  int x = a1, y = e2[static_cast<std::size_t>(a2)];
  auto h1 = b.edge(x).head, h2 = b.edge(y).head;
  b.set_head(x, h2);
  b.set_head(y, h1);
  return b.build();
}

Diagram smooth(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "unknown crossing " + std::to_string(c + 1));
  detail::Builder b(d);
  int x = b.crossing_node[static_cast<std::size_t>(c)];
  std::array<int, 4> e;
  for (int p = 0; p < 4; ++p) e[static_cast<std::size_t>(p)] = b.edge_at({x, p});
  b.kill_node(x);
  if (d.sign(c) > 0) {
    b.join(e[0], e[1]);
    b.join(e[3], e[2]);
  } else {
    b.join(e[0], e[3]);
    b.join(e[1], e[2]);
  }
  return b.build();
}

Diagram sublink(const Diagram& d, const std::vector<int>& keep) {
  if (!d.is_link()) throw Error(ErrorKind::Argument, "sublink needs a link diagram");
  std::vector<char> kept(static_cast<std::size_t>(d.num_components()), 0);
  for (int i : keep) {
    check_component(d, i);
    kept[static_cast<std::size_t>(i)] = 1;
  }
  detail::Builder b(d);
  for (int c = 0; c < d.num_crossings(); ++c) {
    bool ku = kept[static_cast<std::size_t>(d.under_component(c))];
    bool ko = kept[static_cast<std::size_t>(d.over_component(c))];
    if (ku && ko) continue;
    int x = b.crossing_node[static_cast<std::size_t>(c)];
    b.kill_node(x);
    if (ku || ko) {
      // the surviving strand passes straight through
      int in = ku ? 0 : (d.sign(c) > 0 ? 3 : 1);
      b.join(b.edge_at({x, in}), b.edge_at({x, (in + 2) % 4}));
    }
  }
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (kept[static_cast<std::size_t>(d.component_of(a))]) continue;
    b.kill_edge(a);
    if (d.is_loop_arc(a)) b.kill_node(b.loop_node[static_cast<std::size_t>(d.head(a).node)]);
  }
  return b.build();
}

Diagram delete_component(const Diagram& d, int component) {
  check_component(d, component);
  std::vector<int> keep;
  for (int i = 0; i < d.num_components(); ++i)
    if (i != component) keep.push_back(i);
  return sublink(d, keep);
}

}  // namespace akmove
