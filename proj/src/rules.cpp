#include "akmove/rules.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>

#include "builder.hpp"

namespace akmove {

namespace {

// Where a label meets a crossing slot (crossing >= 0) or the boundary.
struct Occ {
  int crossing = -1;
  int slot = -1;  // crossing slot, or boundary index when crossing < 0
  bool operator==(const Occ&) const = default;
};

struct Layout {
  std::map<int, std::vector<Occ>> occ;
  std::vector<int> pair;  // boundary point joined to each boundary point
};

Error bad(const std::string& what) { return Error(ErrorKind::Argument, what); }

Occ other(const Layout& l, int label, Occ here) {
  const auto& v = l.occ.at(label);
  return v[0] == here ? v[1] : v[0];
}

int label_at(const Tangle& t, Occ o) {
  return o.crossing < 0 ? t.boundary[static_cast<std::size_t>(o.slot)]
                        : t.crossings[static_cast<std::size_t>(o.crossing)][static_cast<std::size_t>(o.slot)];
}

// Walks every strand from a boundary point. Calls step(label, tail, head)
// for each label in order of travel from `start`.
template <class F>
int walk(const Tangle& t, const Layout& l, int start, F&& step) {
  Occ cur{-1, start};
  for (;;) {
    int lab = label_at(t, cur);
    Occ nxt = other(l, lab, cur);
    step(lab, cur, nxt);
    if (nxt.crossing < 0) return nxt.slot;
    cur = Occ{nxt.crossing, (nxt.slot + 2) % 4};
  }
}

Layout layout(const Tangle& t, const std::string& which) {
  Layout l;
  int nb = static_cast<int>(t.boundary.size());
  if (nb < 2 || nb % 2 != 0) throw bad(which + " tangle needs an even, positive number of boundary points");
  for (std::size_t i = 0; i < t.crossings.size(); ++i)
    for (int s = 0; s < 4; ++s) l.occ[t.crossings[i][static_cast<std::size_t>(s)]].push_back({static_cast<int>(i), s});
  for (int k = 0; k < nb; ++k) l.occ[t.boundary[static_cast<std::size_t>(k)]].push_back({-1, k});
  for (const auto& [lab, v] : l.occ)
    if (v.size() != 2)
      throw bad(which + " tangle: label " + std::to_string(lab) + " occurs " + std::to_string(v.size()) + " times, expected 2");
  l.pair.assign(static_cast<std::size_t>(nb), -1);
  std::size_t seen = 0;
  for (int k = 0; k < nb; ++k) {
    if (l.pair[static_cast<std::size_t>(k)] >= 0) continue;
    int m = walk(t, l, k, [&](int, Occ, Occ h) { seen += h.crossing >= 0 ? 2 : 0; });
    l.pair[static_cast<std::size_t>(k)] = m;
    l.pair[static_cast<std::size_t>(m)] = k;
  }
  if (seen != 4 * t.crossings.size()) throw bad(which + " tangle contains a closed loop");
  return l;
}

// Orientation of each label, strands running away from `incoming` points.
struct Oriented {
  std::map<int, Occ> tail, head;
  std::vector<int> rot;  // crossing slot 0 in the diagram = tangle slot rot
};

Oriented orient(const Tangle& t, const Layout& l, const std::vector<char>& incoming) {
  Oriented o;
  for (std::size_t k = 0; k < incoming.size(); ++k) {
    if (!incoming[k]) continue;
    walk(t, l, static_cast<int>(k), [&](int lab, Occ tl, Occ hd) {
      o.tail[lab] = tl;
      o.head[lab] = hd;
    });
  }
  for (std::size_t i = 0; i < t.crossings.size(); ++i) {
    Occ h = o.head.at(t.crossings[i][0]);
    o.rot.push_back(h == Occ{static_cast<int>(i), 0} ? 0 : 2);
  }
  return o;
}

// The tangle closed off by one graph vertex standing for the outside.
Diagram closure(const Tangle& t, const Layout& l, const Oriented& o, std::map<int, int>& arc_of) {
  arc_of.clear();
  for (const auto& [lab, v] : l.occ) arc_of.emplace(lab, static_cast<int>(arc_of.size()));
  int nb = static_cast<int>(t.boundary.size());
  auto slot_of = [&](Occ x) {
    if (x.crossing < 0) return Slot{NodeKind::Vertex, 0, nb - 1 - x.slot};
    int r = o.rot[static_cast<std::size_t>(x.crossing)];
    return Slot{NodeKind::Crossing, x.crossing, (x.slot - r + 4) % 4};
  };
  std::vector<Crossing> cs;
  for (std::size_t i = 0; i < t.crossings.size(); ++i) {
    Crossing c;
    for (int s = 0; s < 4; ++s)
      c.arcs[static_cast<std::size_t>(s)] = arc_of.at(t.crossings[i][static_cast<std::size_t>((s + o.rot[i]) % 4)]);
    cs.push_back(c);
  }
  GraphVertex outside;
  for (int k = nb - 1; k >= 0; --k) outside.arcs.push_back(arc_of.at(t.boundary[static_cast<std::size_t>(k)]));
  std::vector<Slot> heads(arc_of.size());
  for (const auto& [lab, a] : arc_of) heads[static_cast<std::size_t>(a)] = slot_of(o.head.at(lab));
  return Diagram::from_parts(std::move(cs), {std::move(outside)}, std::move(heads));
}

std::vector<char> default_incoming(const Layout& l) {
  std::vector<char> in(l.pair.size(), 0);
  for (std::size_t k = 0; k < l.pair.size(); ++k) in[k] = static_cast<int>(k) < l.pair[k];
  return in;
}

void check_tangle(const Tangle& t, const std::string& which) {
  Layout l = layout(t, which);
  std::map<int, int> arc_of;
  try {
    closure(t, l, orient(t, l, default_incoming(l)), arc_of);
  } catch (const Error& e) {
    throw bad(which + " tangle is not a planar tangle in a disk: " + e.what());
  }
}

Tangle mirror(const Tangle& t) {
  Tangle m = t;
  for (auto& c : m.crossings) std::rotate(c.begin(), c.begin() + 1, c.end());
  return m;
}

struct Registry {
  std::shared_mutex mu;
  std::vector<LocalMoveRule> rules;
  Registry() {
    rules.push_back(crossing_change_rule());
    rules.push_back(delta_rule());
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

struct Match {
  std::vector<int> host;  // host crossing of each tangle crossing
  std::vector<int> rot;   // host slot = tangle slot + rot
  bool mirrored = false;
};

Slot host_slot(const Match& m, Occ x) {
  return Slot{NodeKind::Crossing, m.host[static_cast<std::size_t>(x.crossing)],
              (x.slot + m.rot[static_cast<std::size_t>(x.crossing)]) % 4};
}

// Inner faces of the tangle must be faces of the host.
bool faces_agree(const Diagram& d, const Tangle& t, const Layout& l, const Match& m) {
  Oriented o = orient(t, l, default_incoming(l));
  std::map<int, int> arc_of;
  Diagram c = closure(t, l, o, arc_of);
  std::vector<int> label_of(arc_of.size());
  for (const auto& [lab, a] : arc_of) label_of[static_cast<std::size_t>(a)] = lab;
  for (const auto& f : c.faces()) {
    bool inner = std::all_of(f.darts.begin(), f.darts.end(), [&](Dart x) { return !c.touches_vertex(x.arc); });
    if (!inner) continue;
    int face = -1;
    for (Dart x : f.darts) {
      int lab = label_of[static_cast<std::size_t>(x.arc)];
      Slot hs = host_slot(m, o.head.at(lab));
      int h = d.arc_at(hs);
      bool same = d.head(h) == hs;
      int hf = d.face_of({h, same ? x.forward : !x.forward});
      if (face >= 0 && hf != face) return false;
      face = hf;
    }
    if (d.faces()[static_cast<std::size_t>(face)].darts.size() != f.darts.size()) return false;
  }
  return true;
}

bool labels_agree(const Diagram& d, const Layout& l, const Match& m) {
  for (const auto& [lab, v] : l.occ) {
    if (v[0].crossing < 0 || v[1].crossing < 0) continue;
    if (d.arc_at(host_slot(m, v[0])) != d.arc_at(host_slot(m, v[1]))) return false;
  }
  return true;
}

std::optional<Match> find_match(const Diagram& d, const LocalMoveRule& rule, const std::vector<int>& site) {
  std::vector<int> perm = site;
  std::sort(perm.begin(), perm.end());
  std::size_t n = perm.size();
  for (int mir = 0; mir < (rule.mirrors ? 2 : 1); ++mir) {
    Tangle t = mir ? mirror(rule.before) : rule.before;
    Layout l = layout(t, "before");
    std::vector<int> p = perm;
    do {
      for (unsigned bits = 0; bits < (1u << n); ++bits) {
        Match m{p, std::vector<int>(n), mir == 1};
        for (std::size_t i = 0; i < n; ++i) m.rot[i] = (bits >> i) & 1u ? 2 : 0;
        if (labels_agree(d, l, m) && faces_agree(d, t, l, m)) return m;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

}  // namespace

void validate_rule(const LocalMoveRule& rule) {
  if (rule.name.empty()) throw bad("rule needs a name");
  if (rule.before.crossings.empty()) throw bad("before tangle needs at least one crossing");
  check_tangle(rule.before, "before");
  check_tangle(rule.after, "after");
  if (rule.before.boundary.size() != rule.after.boundary.size())
    throw bad("before and after tangles have " + std::to_string(rule.before.boundary.size()) + " and " +
              std::to_string(rule.after.boundary.size()) + " boundary points");
  Layout lb = layout(rule.before, "before"), la = layout(rule.after, "after");
  if (lb.pair != la.pair) throw bad("before and after tangles join different boundary points");
  for (std::size_t k = 0; k < lb.pair.size(); ++k) {
    int lab = rule.before.boundary[k];
    if (lb.occ.at(lab)[0].crossing < 0 && lb.occ.at(lab)[1].crossing < 0)
      throw bad("every strand of the before tangle needs a crossing");
  }
}

int register_move(const LocalMoveRule& rule) {
  validate_rule(rule);
  Registry& r = registry();
  std::unique_lock lock(r.mu);
  for (const auto& x : r.rules)
    if (x.name == rule.name) throw bad("a rule named '" + rule.name + "' is already registered");
  r.rules.push_back(rule);
  return static_cast<int>(r.rules.size()) - 1;
}

LocalMoveRule registered_rule(int id) {
  Registry& r = registry();
  std::shared_lock lock(r.mu);
  if (id < 0 || id >= static_cast<int>(r.rules.size())) throw bad("unknown rule id " + std::to_string(id));
  return r.rules[static_cast<std::size_t>(id)];
}

int rule_id(const std::string& name) {
  Registry& r = registry();
  std::shared_lock lock(r.mu);
  for (std::size_t i = 0; i < r.rules.size(); ++i)
    if (r.rules[i].name == name) return static_cast<int>(i);
  throw bad("unknown rule '" + name + "'");
}

std::vector<std::string> rule_names() {
  Registry& r = registry();
  std::shared_lock lock(r.mu);
  std::vector<std::string> out;
  for (const auto& x : r.rules) out.push_back(x.name);
  return out;
}

RuleResult apply_rule(const Diagram& d, int id, const std::vector<int>& site) {
  LocalMoveRule rule = registered_rule(id);
  if (site.size() != rule.before.crossings.size())
    throw Error(ErrorKind::Site, "rule '" + rule.name + "' needs " + std::to_string(rule.before.crossings.size()) +
                                     " crossings, site has " + std::to_string(site.size()));
  for (std::size_t i = 0; i < site.size(); ++i) {
    if (site[i] < 0 || site[i] >= d.num_crossings())
      throw Error(ErrorKind::Argument, "crossing " + std::to_string(site[i]) + " out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (site[i] == site[j]) throw Error(ErrorKind::Site, "site lists crossing " + std::to_string(site[i]) + " twice");
  }
  auto m = find_match(d, rule, site);
  if (!m) throw Error(ErrorKind::Site, "crossings do not form the before tangle of rule '" + rule.name + "'");

  Tangle before = m->mirrored ? mirror(rule.before) : rule.before;
  Tangle after = m->mirrored ? mirror(rule.after) : rule.after;
  Layout lb = layout(before, "before"), la = layout(after, "after");
  std::size_t nb = before.boundary.size();

  detail::Builder b;
  std::vector<int> edge_of = b.append(d, 0);
  std::vector<int> bedge(nb);
  std::vector<char> incoming(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    int lab = before.boundary[k];
    Occ x = other(lb, lab, Occ{-1, static_cast<int>(k)});
    Slot hs = host_slot(*m, x);
    int h = d.arc_at(hs);
    bedge[k] = edge_of[static_cast<std::size_t>(h)];
    incoming[k] = d.head(h) == hs;
  }
  for (const auto& [lab, v] : lb.occ)
    if (v[0].crossing >= 0 && v[1].crossing >= 0) b.kill_edge(edge_of[static_cast<std::size_t>(d.arc_at(host_slot(*m, v[0])))]);
  for (int c : m->host) b.kill_node(b.crossing_node[static_cast<std::size_t>(c)]);

  Oriented o = orient(after, la, incoming);
  std::vector<int> node;
  for (std::size_t i = 0; i < after.crossings.size(); ++i) node.push_back(b.add_node(NodeKind::Crossing, 4));
  auto end_of = [&](Occ x) {
    int r = o.rot[static_cast<std::size_t>(x.crossing)];
    return detail::Builder::End{node[static_cast<std::size_t>(x.crossing)], (x.slot - r + 4) % 4};
  };
  for (const auto& [lab, tl] : o.tail) {
    Occ hd = o.head.at(lab);
    if (tl.crossing < 0 && hd.crossing < 0) {
      b.join(bedge[static_cast<std::size_t>(tl.slot)], bedge[static_cast<std::size_t>(hd.slot)]);
    } else if (tl.crossing < 0) {
      b.set_head(bedge[static_cast<std::size_t>(tl.slot)], end_of(hd));
    } else if (hd.crossing < 0) {
      b.set_tail(bedge[static_cast<std::size_t>(hd.slot)], end_of(tl));
    } else {
      b.add_edge(end_of(tl), end_of(hd), b.fresh_key());
    }
  }
  RuleResult res{b.build(), {}};
  int first = d.num_crossings() - static_cast<int>(site.size());
  for (std::size_t i = 0; i < after.crossings.size(); ++i) res.image.push_back(first + static_cast<int>(i));
  return res;
}

LocalMoveRule crossing_change_rule() {
  LocalMoveRule r;
  r.name = "crossing-change";
  r.before = {{{0, 1, 2, 3}}, {0, 1, 2, 3}};
  r.after = {{{1, 2, 3, 0}}, {0, 1, 2, 3}};
  r.mirrors = false;
  return r;
}

LocalMoveRule delta_rule() {
  // strands a, b, c run 0 -> 1, 2 -> 3, 4 -> 5 through the labels 6, 7, 8
  LocalMoveRule r;
  r.name = "delta";
  r.before = {{{8, 0, 5, 6}, {6, 2, 1, 7}, {7, 4, 3, 8}}, {1, 4, 3, 0, 5, 2}};
  r.after = {{{4, 6, 8, 1}, {0, 7, 6, 3}, {2, 8, 7, 5}}, {1, 4, 3, 0, 5, 2}};
  return r;
}

}  // namespace akmove
