#include "akmove/random.hpp"

#include <algorithm>

#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"

namespace akmove {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

Side side_facing(const Diagram& d, int arc, int face) {
  return d.face_left(arc) == face ? Side::Left : Side::Right;
}

// Clasps the finger tip with a neighbouring arc so that the finger cannot be
// pulled back; left unchanged when no neighbour is available.
Diagram hook_tip(const Diagram& d, int tip, Rng& rng) {
  std::vector<std::pair<Side, Dart>> options;
  for (Side side : {Side::Left, Side::Right})
    for (Dart v : d.faces()[static_cast<std::size_t>(d.face_on(tip, side))].darts)
      if (v.arc != tip && !d.touches_vertex(v.arc)) options.emplace_back(side, v);
  std::shuffle(options.begin(), options.end(), rng);
  for (auto [side, v] : options) {
    try {
      Diagram e = r2_add(d, tip, side, v.arc, v.forward ? Side::Left : Side::Right, uniform(rng, 0, 1) == 1);
      return switch_crossing(e, e.num_crossings() - 1);
    } catch (const Error&) {
    }
  }
  return d;
}

}  // namespace

Diagram random_braid_diagram(Rng& rng, int max_strands, int max_crossings) {
  int strands = uniform(rng, 2, std::max(2, max_strands));
  int len = uniform(rng, 1, std::max(1, max_crossings));
  std::vector<int> word;
  for (int i = 0; i < len; ++i) {
    int g = uniform(rng, 1, strands - 1);
    word.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return braid_closure(strands, word);
}

Diagram random_braid_link(Rng& rng, int components, int max_strands, int max_crossings) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Diagram d = random_braid_diagram(rng, max_strands, max_crossings);
    if (d.num_components() == components) return d;
  }
  throw Error(ErrorKind::Budget, "could not sample a braid closure with the requested component count");
}

ReidemeisterSite random_reidemeister_site(const Diagram& d, Rng& rng) {
  std::vector<ReidemeisterSite> options;
  for (int c : r1_remove_sites(d)) {
    ReidemeisterSite s;
    s.kind = RKind::R1Minus;
    s.crossing = c;
    options.push_back(s);
  }
  for (auto [c1, c2] : r2_remove_sites(d)) {
    ReidemeisterSite s;
    s.kind = RKind::R2Minus;
    s.crossing = c1;
    s.crossing2 = c2;
    options.push_back(s);
  }
  for (const auto& arcs : triangle_sites(d, false)) {
    ReidemeisterSite s;
    s.kind = RKind::R3;
    s.arcs = arcs;
    options.push_back(s);
  }
  // R1+ and R2+ are always available; give them comparable weight.
  int adds = std::max<int>(2, static_cast<int>(options.size()));
  for (int i = 0; i < adds && d.num_arcs() > 0; ++i) {
    ReidemeisterSite s;
    int a = uniform(rng, 0, d.num_arcs() - 1);
    if (i % 2 == 0) {
      s.kind = RKind::R1Plus;
      s.arc = a;
      s.side = uniform(rng, 0, 1) ? Side::Left : Side::Right;
      s.sign = uniform(rng, 0, 1) ? 1 : -1;
      options.push_back(s);
      continue;
    }
    // a partner arc on the same face
    Side side = uniform(rng, 0, 1) ? Side::Left : Side::Right;
    const auto& darts = d.faces()[static_cast<std::size_t>(d.face_on(a, side))].darts;
    Dart other = pick(rng, darts);
    if (other.arc == a) continue;
    s.kind = RKind::R2Plus;
    s.arc = a;
    s.side = side;
    s.arc2 = other.arc;
    s.side2 = other.forward ? Side::Left : Side::Right;
    s.first_over = uniform(rng, 0, 1) == 1;
    options.push_back(s);
  }
  if (options.empty()) {
    ReidemeisterSite s;
    s.kind = RKind::R1Plus;
    s.arc = 0;
    return s;
  }
  return pick(rng, options);
}

std::optional<std::pair<Diagram, ClaspSite>> prepare_clasp_site(const Diagram& d, Rng& rng) {
  struct Corner {
    int ka, kb;
    std::array<int, 2> clasp;
  };
  std::vector<Corner> corners;
  for (const auto& face : d.faces()) {
    if (face.darts.size() != 2) continue;
    int x = face.darts[0].arc, y = face.darts[1].arc;
    Slot t = d.tail(x), h = d.head(x);
    if (t.kind != NodeKind::Crossing || h.kind != NodeKind::Crossing || t.node == h.node) continue;
    if (t.pos % 2 == h.pos % 2) continue;
    corners.push_back({t.node, h.node, {x, y}});
    corners.push_back({h.node, t.node, {x, y}});
  }
  std::shuffle(corners.begin(), corners.end(), rng);
  for (const Corner& c : corners) {
    // the two strands leaving ka away from the clasp
    std::array<int, 2> beyond{};
    int found = 0;
    for (int p = 0; p < 4 && found < 2; ++p) {
      int a = d.crossing(c.ka).arcs[static_cast<std::size_t>(p)];
      if (a == c.clasp[0] || a == c.clasp[1]) {
        beyond[static_cast<std::size_t>(found++)] = d.crossing(c.ka).arcs[static_cast<std::size_t>((p + 2) % 4)];
      }
    }
    if (found < 2) continue;
    for (int first = 0; first < 2; ++first) {
      int xb = beyond[static_cast<std::size_t>(first)], yb = beyond[static_cast<std::size_t>(1 - first)];
      if (xb == yb || d.touches_vertex(xb) || d.touches_vertex(yb)) continue;
      int q_opp = -1;
      for (Side sx : {Side::Left, Side::Right})
        for (Side sy : {Side::Left, Side::Right})
          if (d.face_on(xb, sx) == d.face_on(yb, sy)) q_opp = d.face_on(xb, sx);
      if (q_opp < 0) continue;
      int q2 = d.face_left(xb) == q_opp ? d.face_right(xb) : d.face_left(xb);
      if (q2 == q_opp) continue;
      std::vector<Dart> sources;
      for (Dart w : d.faces()[static_cast<std::size_t>(q2)].darts)
        if (w.arc != xb && w.arc != yb && w.arc != c.clasp[0] && w.arc != c.clasp[1] && !d.touches_vertex(w.arc))
          sources.push_back(w);
      if (sources.empty()) continue;
      Dart w = pick(rng, sources);
      bool over_x = uniform(rng, 0, 1) == 1;
      try {
        Diagram d1 = r2_add(d, w.arc, w.forward ? Side::Left : Side::Right, xb, side_facing(d, xb, q2), over_x);
        int tip = d.num_arcs();
        int q1 = -1;
        for (Side st : {Side::Left, Side::Right})
          for (Side sy : {Side::Left, Side::Right})
            if (d1.face_on(tip, st) == d1.face_on(yb, sy)) q1 = d1.face_on(tip, st);
        if (q1 < 0) continue;
        Diagram d2 = r2_add(d1, tip, side_facing(d1, tip, q1), yb, side_facing(d1, yb, q1), !over_x);
        d2 = hook_tip(d2, d1.num_arcs(), rng);
        for (const ClaspSite& s : clasp_sites(d2))
          if (std::is_permutation(s.clasp.begin(), s.clasp.end(), c.clasp.begin())) return std::pair{d2, s};
      } catch (const Error&) {
      }
    }
  }
  return std::nullopt;
}

}  // namespace akmove
