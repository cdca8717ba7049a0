#include "akmove/reidemeister.hpp"

#include <algorithm>
#include <string>

#include "builder.hpp"
#include "triangle.hpp"

namespace akmove {

namespace detail {

namespace {

Slot dart_start(const Diagram& d, Dart x) { return x.forward ? d.tail(x.arc) : d.head(x.arc); }
Slot dart_end(const Diagram& d, Dart x) { return x.forward ? d.head(x.arc) : d.tail(x.arc); }

}  // namespace

std::optional<Triangle> triangle_of_face(const Diagram& d, int face) {
  const auto& ds = d.faces()[static_cast<std::size_t>(face)].darts;
  if (ds.size() != 3) return std::nullopt;
  Triangle t;
  for (int i = 0; i < 3; ++i) {
    Dart x = ds[static_cast<std::size_t>(i)];
    Slot s = dart_start(d, x), e = dart_end(d, x);
    if (s.kind != NodeKind::Crossing || e.kind != NodeKind::Crossing) return std::nullopt;
    t.darts[static_cast<std::size_t>(i)] = x;
    t.corner[static_cast<std::size_t>(i)] = s.node;
    t.start_pos[static_cast<std::size_t>(i)] = s.pos;
    t.arrive_pos[static_cast<std::size_t>(i)] = e.pos;
  }
  if (t.corner[0] == t.corner[1] || t.corner[1] == t.corner[2] || t.corner[0] == t.corner[2]) return std::nullopt;
  return t;
}

Triangle find_triangle(const Diagram& d, const std::array<int, 3>& arcs) {
  std::array<int, 3> want = arcs;
  std::sort(want.begin(), want.end());
  for (int a : want)
    if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, "arc " + std::to_string(a + 1) + " not found");
  std::optional<Triangle> found;
  int count = 0;
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    const auto& ds = d.faces()[static_cast<std::size_t>(f)].darts;
    if (ds.size() != 3) continue;
    std::array<int, 3> have{ds[0].arc, ds[1].arc, ds[2].arc};
    std::sort(have.begin(), have.end());
    if (have != want) continue;
    auto t = triangle_of_face(d, f);
    if (!t) throw Error(ErrorKind::Site, "expected a triangle with three distinct crossing corners");
    found = t;
    ++count;
  }
  if (count == 0) throw Error(ErrorKind::Site, "expected a triangular face bounded by the three arcs");
  if (count > 1) throw Error(ErrorKind::Site, "the three arcs bound more than one triangular face");
  return *found;
}

bool is_cyclic(const Triangle& t) {
  for (int i = 0; i < 3; ++i) {
    bool over_start = t.start_pos[static_cast<std::size_t>(i)] % 2 == 1;
    bool over_end = t.arrive_pos[static_cast<std::size_t>(i)] % 2 == 1;
    if (over_start == over_end) return false;
  }
  return true;
}

Diagram flip_triangle(const Diagram& d, const Triangle& t) {
  std::vector<Crossing> xs = d.crossings();
  auto old_at = [&](int c, int p) { return d.crossing(c).arcs[static_cast<std::size_t>(((p % 4) + 4) % 4)]; };
  auto put = [&](int c, int p, int arc) { xs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(p % 4)] = arc; };
  for (int i = 0; i < 3; ++i) {
    auto ui = static_cast<std::size_t>(i);
    int e = t.darts[ui].arc;
    int ci = t.corner[ui], cn = t.corner[(ui + 1) % 3];
    int p = t.start_pos[ui], q = t.arrive_pos[ui];
    int outer_here = old_at(ci, p + 2);
    int outer_there = old_at(cn, q + 2);
    put(cn, q, outer_here);
    put(cn, q + 2, e);
    put(ci, p, outer_there);
    put(ci, p + 2, e);
  }
  std::vector<Slot> heads = d.heads();
  for (int c : t.corner)
    for (int p = 0; p < 4; ++p) {
      Slot s{NodeKind::Crossing, c, p};
      if (d.head(old_at(c, p)) == s) heads[static_cast<std::size_t>(xs[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(p)])] = s;
    }
  return Diagram::from_parts(std::move(xs), d.vertices(), std::move(heads));
}

}  // namespace detail

namespace {

[[noreturn]] void site_error(const std::string& msg) { throw Error(ErrorKind::Site, msg); }

void check_arc(const Diagram& d, int a) {
  if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, "arc " + std::to_string(a + 1) + " not found");
}

void check_crossing(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "unknown crossing " + std::to_string(c + 1));
}

// Arc of a monogon at c, or -1.
int kink_arc(const Diagram& d, int c) {
  int best = -1;
  for (int p = 0; p < 4; ++p) {
    int a = d.crossing(c).arcs[static_cast<std::size_t>(p)];
    Slot t = d.tail(a), h = d.head(a);
    if (t.kind != NodeKind::Crossing || h.kind != NodeKind::Crossing || t.node != c || h.node != c) continue;
    int gap = (h.pos - t.pos + 4) % 4;
    if (gap == 1 || gap == 3) best = best < 0 ? a : std::min(best, a);
  }
  return best;
}

struct Bigon {
  Dart a, b;
};

// A bigon face between crossings c1 and c2, clasp or not.
std::vector<std::pair<int, bool>> bigons(const Diagram& d) {
  std::vector<std::pair<int, bool>> out;  // (face, removable)
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    const auto& ds = d.faces()[static_cast<std::size_t>(f)].darts;
    if (ds.size() != 2) continue;
    Dart x = ds[0];
    Slot s = x.forward ? d.tail(x.arc) : d.head(x.arc);
    Slot e = x.forward ? d.head(x.arc) : d.tail(x.arc);
    if (s.kind != NodeKind::Crossing || e.kind != NodeKind::Crossing || s.node == e.node) continue;
    bool removable = (s.pos % 2) == (e.pos % 2);
    out.emplace_back(f, removable);
  }
  return out;
}

std::pair<int, int> bigon_corners(const Diagram& d, int f) {
  Dart x = d.faces()[static_cast<std::size_t>(f)].darts[0];
  return {d.tail(x.arc).node, d.head(x.arc).node};
}

}  // namespace

Diagram r1_add(const Diagram& d, int arc, Side side, int sign) {
  check_arc(d, arc);
  if (sign != 1 && sign != -1) throw Error(ErrorKind::Argument, "kink sign must be +1 or -1");
  int i1, i2;
  if (side == Side::Left) {
    if (sign > 0) { i1 = 0; i2 = 3; } else { i1 = 1; i2 = 0; }
  } else {
    if (sign > 0) { i1 = 3; i2 = 0; } else { i1 = 0; i2 = 1; }
  }
  detail::Builder b(d);
  int x = b.add_node(NodeKind::Crossing, 4);
  b.split(arc, {x, i1}, {x, (i2 + 2) % 4}, b.fresh_key());
  b.add_edge({x, (i1 + 2) % 4}, {x, i2}, b.fresh_key());
  return b.build();
}

Diagram r1_remove(const Diagram& d, int c) {
  check_crossing(d, c);
  int k = kink_arc(d, c);
  if (k < 0) site_error("R1-: expected a kink (monogon) at crossing " + std::to_string(c + 1));
  detail::Builder b(d);
  int x = b.crossing_node[static_cast<std::size_t>(c)];
  int in = b.edge_at({x, (d.tail(k).pos + 2) % 4});
  int out = b.edge_at({x, (d.head(k).pos + 2) % 4});
  b.kill_edge(k);
  b.kill_node(x);
  if (in == k || out == k) site_error("R1-: degenerate kink");
  b.join(in, out);
  return b.build();
}

Diagram r2_add(const Diagram& d, int arc1, Side side1, int arc2, Side side2, bool first_over) {
  check_arc(d, arc1);
  check_arc(d, arc2);
  if (arc1 == arc2) site_error("R2+: expected two distinct arcs");
  if (d.region({arc1, side1 == Side::Left}) != d.region({arc2, side2 == Side::Left}))
    site_error("R2+: expected the two arc sides to face the same region");
  detail::Builder b(d);
  int x1 = b.add_node(NodeKind::Crossing, 4);
  int x2 = b.add_node(NodeKind::Crossing, 4);
  struct Slots { int y_in, y_out, z_in, z_out; };
  // Layout [y_in, right of y, y_out, left of y], rotated so the under-in is slot 0.
  auto layout = [&](bool z_in_on_right) {
    int yi = 0, r = 1, yo = 2, l = 3;
    int zi = z_in_on_right ? r : l, zo = z_in_on_right ? l : r;
    int shift = first_over ? 0 : (4 - zi) % 4;
    return Slots{(yi + shift) % 4, (yo + shift) % 4, (zi + shift) % 4, (zo + shift) % 4};
  };
  bool s2_right = side2 == Side::Right;
  Slots l1 = layout(s2_right);   // finger enters from the side2 side
  Slots l2 = layout(!s2_right);  // and returns to it
  int m = b.split(arc1, {x1, l1.z_in}, {x1, l1.z_out}, b.fresh_key());
  b.split(m, {x2, l2.z_in}, {x2, l2.z_out}, b.fresh_key());
  bool x1_first = side1 != side2;
  int f = x1_first ? x1 : x2, s = x1_first ? x2 : x1;
  const Slots& lf = x1_first ? l1 : l2;
  const Slots& ls = x1_first ? l2 : l1;
  int n = b.split(arc2, {f, lf.y_in}, {f, lf.y_out}, b.fresh_key());
  b.split(n, {s, ls.y_in}, {s, ls.y_out}, b.fresh_key());
  return b.build();
}

Diagram r2_remove(const Diagram& d, int c1, int c2) {
  check_crossing(d, c1);
  check_crossing(d, c2);
  int face = -1;
  bool clasp = false;
  for (auto [f, removable] : bigons(d)) {
    auto [a, b] = bigon_corners(d, f);
    if (!((a == c1 && b == c2) || (a == c2 && b == c1))) continue;
    if (removable) { face = f; break; }
    clasp = true;
  }
  if (face < 0)
    site_error(clasp ? "R2-: the bigon is a clasp; expected one strand over at both corners"
                     : "R2-: expected a bigon face between the two crossings");
  detail::Builder b(d);
  std::vector<std::pair<int, int>> joins;
  for (Dart x : d.faces()[static_cast<std::size_t>(face)].darts) {
    int a = x.arc;
    Slot t = d.tail(a), h = d.head(a);
    int tn = b.crossing_node[static_cast<std::size_t>(t.node)], hn = b.crossing_node[static_cast<std::size_t>(h.node)];
    joins.emplace_back(b.edge_at({tn, (t.pos + 2) % 4}), b.edge_at({hn, (h.pos + 2) % 4}));
  }
  for (Dart x : d.faces()[static_cast<std::size_t>(face)].darts) b.kill_edge(x.arc);
  b.kill_node(b.crossing_node[static_cast<std::size_t>(c1)]);
  b.kill_node(b.crossing_node[static_cast<std::size_t>(c2)]);
  for (auto [in, out] : joins) b.join(in, out);
  return b.build();
}

Diagram r3(const Diagram& d, const std::array<int, 3>& arcs) {
  detail::Triangle t = detail::find_triangle(d, arcs);
  if (detail::is_cyclic(t)) site_error("R3: expected one strand over or under at both of its corners (this triangle is a delta pattern)");
  return detail::flip_triangle(d, t);
}

Diagram reidemeister(const Diagram& d, const ReidemeisterSite& s) {
  switch (s.kind) {
    case RKind::R1Plus: return r1_add(d, s.arc, s.side, s.sign);
    case RKind::R1Minus: return r1_remove(d, s.crossing);
    case RKind::R2Plus: return r2_add(d, s.arc, s.side, s.arc2, s.side2, s.first_over);
    case RKind::R2Minus: return r2_remove(d, s.crossing, s.crossing2);
    case RKind::R3: return r3(d, s.arcs);
  }
  throw Error(ErrorKind::Argument, "unknown Reidemeister kind");
}

std::vector<int> r1_remove_sites(const Diagram& d) {
  std::vector<int> out;
  for (int c = 0; c < d.num_crossings(); ++c)
    if (kink_arc(d, c) >= 0) out.push_back(c);
  return out;
}

std::vector<std::pair<int, int>> r2_remove_sites(const Diagram& d) {
  std::vector<std::pair<int, int>> out;
  for (auto [f, removable] : bigons(d))
    if (removable) out.push_back(bigon_corners(d, f));
  return out;
}

std::vector<std::array<int, 3>> triangle_sites(const Diagram& d, bool delta) {
  std::vector<std::array<int, 3>> out;
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    auto t = detail::triangle_of_face(d, f);
    if (!t || detail::is_cyclic(*t) != delta) continue;
    std::array<int, 3> arcs{t->darts[0].arc, t->darts[1].arc, t->darts[2].arc};
    // skip arc triples that bound two triangles
    try {
      detail::find_triangle(d, arcs);
    } catch (const Error&) {
      continue;
    }
    out.push_back(arcs);
  }
  return out;
}

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (true) {
    auto k = r1_remove_sites(cur);
    if (!k.empty()) {
      cur = r1_remove(cur, k.front());
      continue;
    }
    auto b = r2_remove_sites(cur);
    if (!b.empty()) {
      cur = r2_remove(cur, b.front().first, b.front().second);
      continue;
    }
    return cur;
  }
}

}  // namespace akmove
