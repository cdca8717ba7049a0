#include "akmove/moves.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "akmove/edits.hpp"
#include "triangle.hpp"

namespace akmove {

namespace {

[[noreturn]] void site_error(const std::string& msg) { throw Error(ErrorKind::Site, msg); }

std::string arc_name(int a) { return "arc " + std::to_string(a + 1); }

// Triangle face containing arc e with corner k and without corner avoid.
detail::Triangle triangle_at(const Diagram& d, int e, int k, int avoid) {
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    auto t = detail::triangle_of_face(d, f);
    if (!t) continue;
    bool has_e = false, has_k = false, has_avoid = false;
    for (int i = 0; i < 3; ++i) {
      has_e |= t->darts[static_cast<std::size_t>(i)].arc == e;
      has_k |= t->corner[static_cast<std::size_t>(i)] == k;
      has_avoid |= t->corner[static_cast<std::size_t>(i)] == avoid;
    }
    if (has_e && has_k && !has_avoid) return *t;
  }
  site_error("clasp-pass: " + arc_name(e) + " does not cut off a triangle at crossing " + std::to_string(k + 1));
}

// The band strand through e is over exactly one of the two clasp strands.
void check_band_strand(const detail::Triangle& t, int e) {
  for (int i = 0; i < 3; ++i) {
    if (t.darts[static_cast<std::size_t>(i)].arc != e) continue;
    bool over_start = t.start_pos[static_cast<std::size_t>(i)] % 2 == 1;
    bool over_end = t.arrive_pos[static_cast<std::size_t>(i)] % 2 == 1;
    if (over_start == over_end)
      site_error("clasp-pass: band " + arc_name(e) + " must pass over one clasp strand and under the other");
    return;
  }
}

// The band strands are the prongs of one finger: walking from r past one of
// its ends reaches s before any other crossing of the site.
bool joined_by_cap(const Diagram& d, int r, int s, int ka, int kb) {
  std::set<int> site{ka, kb, d.tail(r).node, d.head(r).node, d.tail(s).node, d.head(s).node};
  auto crossing = [](Slot x) { return x.kind == NodeKind::Crossing; };
  if (!crossing(d.tail(s)) || !crossing(d.head(s))) return false;
  for (bool forward : {true, false}) {
    int a = r;
    for (int steps = 0; steps <= d.num_arcs(); ++steps) {
      Slot end = forward ? d.head(a) : d.tail(a);
      if (!crossing(end)) break;
      if (steps > 0 && site.count(end.node)) {
        if ((forward ? d.next_arc(a) : d.prev_arc(a)) == s) return true;
        break;
      }
      a = forward ? d.next_arc(a) : d.prev_arc(a);
      if (a == r) break;
    }
  }
  return false;
}

std::pair<int, int> clasp_corners(const Diagram& d, const std::array<int, 2>& arcs) {
  for (int a : arcs)
    if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, arc_name(a) + " not found");
  for (const auto& face : d.faces()) {
    if (face.darts.size() != 2) continue;
    std::array<int, 2> have{face.darts[0].arc, face.darts[1].arc};
    if (!std::is_permutation(have.begin(), have.end(), arcs.begin())) continue;
    Dart x = face.darts[0];
    Slot s = x.forward ? d.tail(x.arc) : d.head(x.arc);
    Slot e = x.forward ? d.head(x.arc) : d.tail(x.arc);
    if (s.kind != NodeKind::Crossing || e.kind != NodeKind::Crossing || s.node == e.node) continue;
    if (s.pos % 2 == e.pos % 2) site_error("clasp-pass: the bigon is not a clasp (one strand is over at both corners)");
    return {s.node, e.node};
  }
  site_error("clasp-pass: " + arc_name(arcs[0]) + " and " + arc_name(arcs[1]) + " do not bound a bigon");
}

}  // namespace

Diagram crossing_change(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "unknown crossing " + std::to_string(c + 1));
  return switch_crossing(d, c);
}

Diagram delta_move(const Diagram& d, const std::array<int, 3>& arcs) {
  detail::Triangle t = detail::find_triangle(d, arcs);
  for (int i = 0; i < 3; ++i) {
    auto ui = static_cast<std::size_t>(i);
    bool over_start = t.start_pos[ui] % 2 == 1;
    bool over_end = t.arrive_pos[ui] % 2 == 1;
    if (over_start == over_end)
      site_error("delta: " + arc_name(t.darts[ui].arc) + " is " + (over_start ? "over" : "under") +
                 " at both crossings " + std::to_string(t.corner[ui] + 1) + " and " +
                 std::to_string(t.corner[(ui + 1) % 3] + 1) + "; expected a cyclic triangle");
  }
  return detail::flip_triangle(d, t);
}

ClaspResult clasp_pass(const Diagram& d, const ClaspSite& site) {
  auto [p, q] = clasp_corners(d, site.clasp);
  int r = site.band[0], s = site.band[1];
  for (int a : site.band)
    if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, arc_name(a) + " not found");
  if (r == s || std::find(site.clasp.begin(), site.clasp.end(), r) != site.clasp.end() ||
      std::find(site.clasp.begin(), site.clasp.end(), s) != site.clasp.end())
    site_error("clasp-pass: band arcs must be distinct from each other and from the clasp arcs");
  int ka = -1, kb = -1;
  for (auto [k, other] : {std::pair{p, q}, std::pair{q, p}}) {
    try {
      triangle_at(d, r, k, other);
      ka = k;
      kb = other;
      break;
    } catch (const Error&) {
    }
  }
  if (ka < 0) site_error("clasp-pass: band " + arc_name(r) + " does not cut off a triangle at a clasp corner");
  if (!joined_by_cap(d, r, s, ka, kb))
    site_error("clasp-pass: " + arc_name(r) + " and " + arc_name(s) + " must be the two prongs of one finger of a strand");
  Diagram cur = d;
  int pattern = -1;
  for (int e : {r, s}) {
    detail::Triangle t1 = triangle_at(cur, e, ka, kb);
    check_band_strand(t1, e);
    int cyc = detail::is_cyclic(t1) ? 1 : 0;
    if (pattern >= 0 && cyc != pattern)
      site_error("clasp-pass: the band strands must pass over the same clasp strand");
    pattern = cyc;
    cur = detail::flip_triangle(cur, t1);
    cur = detail::flip_triangle(cur, triangle_at(cur, e, kb, ka));
  }
  ClaspResult out{cur, {}};
  bool found = false;
  for (const auto& face : cur.faces()) {
    if (face.darts.size() != 2) continue;
    int a = face.darts[0].arc, b = face.darts[1].arc;
    std::array<int, 2> ends{cur.tail(a).node, cur.head(a).node};
    if (cur.tail(a).kind != NodeKind::Crossing || cur.head(a).kind != NodeKind::Crossing) continue;
    if (!((ends[0] == ka && ends[1] == kb) || (ends[0] == kb && ends[1] == ka))) continue;
    out.image = {{a, b}, {s, r}};
    found = true;
    break;
  }
  if (!found) site_error("clasp-pass: the clasp did not survive the move");
  return out;
}

std::vector<ClaspSite> clasp_sites(const Diagram& d) {
  std::vector<ClaspSite> out;
  for (const auto& face : d.faces()) {
    if (face.darts.size() != 2) continue;
    std::array<int, 2> clasp{face.darts[0].arc, face.darts[1].arc};
    std::array<int, 2> corners;
    try {
      auto [p, q] = clasp_corners(d, clasp);
      corners = {p, q};
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      int ka = corners[static_cast<std::size_t>(k)], kb = corners[static_cast<std::size_t>(1 - k)];
      for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
        auto t = detail::triangle_of_face(d, f);
        if (!t || std::find(t->corner.begin(), t->corner.end(), ka) == t->corner.end() ||
            std::find(t->corner.begin(), t->corner.end(), kb) != t->corner.end())
          continue;
        for (int i = 0; i < 3; ++i) {
          int r = t->darts[static_cast<std::size_t>(i)].arc;
          if (t->corner[static_cast<std::size_t>(i)] == ka || t->corner[static_cast<std::size_t>((i + 1) % 3)] == ka) continue;
          // s lies on the far side of r
          for (Side side : {Side::Left, Side::Right}) {
            for (Dart x : d.faces()[static_cast<std::size_t>(d.face_on(r, side))].darts) {
              ClaspSite site{clasp, {r, x.arc}};
              try {
                clasp_pass(d, site);
                out.push_back(site);
              } catch (const Error&) {
              }
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ClaspSite& a, const ClaspSite& b) {
    return std::tie(a.clasp, a.band) < std::tie(b.clasp, b.band);
  });
  out.erase(std::unique(out.begin(), out.end(), [](const ClaspSite& a, const ClaspSite& b) {
              return a.clasp == b.clasp && a.band == b.band;
            }), out.end());
  return out;
}

}  // namespace akmove
