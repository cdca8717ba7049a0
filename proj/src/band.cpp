#include "akmove/band.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/reidemeister.hpp"
#include "builder.hpp"

namespace akmove {

namespace {

using End = detail::Builder::End;

std::string arc_name(int a) { return "arc " + std::to_string(a + 1); }

Error site_error(const std::string& what) { return Error(ErrorKind::Site, what); }

// First region of d (outer region first) bordering every listed arc.
std::optional<int> common_region(const Diagram& d, const std::vector<int>& arcs) {
  for (int f = -1; f < static_cast<int>(d.faces().size()); ++f) {
    if (f >= 0 && d.region_of_face(f) != f) continue;
    bool all = std::all_of(arcs.begin(), arcs.end(), [&](int a) { return d.region({a, true}) == f || d.region({a, false}) == f; });
    if (all) return f;
  }
  return std::nullopt;
}

// Lowest arc of each component on the first face that meets all components.
std::vector<int> default_feet(const Diagram& d) {
  for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
    std::vector<int> feet(static_cast<std::size_t>(d.num_components()), -1);
    for (Dart x : d.faces()[static_cast<std::size_t>(f)].darts) {
      int& slot = feet[static_cast<std::size_t>(d.component_of(x.arc))];
      if (slot < 0 || x.arc < slot) slot = x.arc;
    }
    if (std::none_of(feet.begin(), feet.end(), [](int a) { return a < 0; })) return feet;
  }
  throw Error(ErrorKind::Argument, "no face meets every component");
}

LinkModel builtin(const std::string& name, int k, const std::string& diagram) {
  LinkModel m;
  m.name = name;
  m.type_index = k;
  m.diagram = catalog_diagram(diagram);
  m.feet = default_feet(m.diagram);
  return m;
}

struct Models {
  std::shared_mutex mu;
  std::vector<LinkModel> list;
  Models() {
    list.push_back(builtin("hopf", 1, "hopf+"));
    list.push_back(builtin("borromean", 2, "borromean"));
  }
};

Models& models() {
  static Models m;
  return m;
}

// Compass ends of a pass crossing, counterclockwise from east. The passed arc
// runs west to east.
enum Dir { E = 0, N = 1, W = 2, S = 3 };

struct PassNode {
  int node;
  int slot[4];  // builder slot of each compass end
};

PassNode pass_node(detail::Builder& b, bool band_over, Dir band_in) {
  Dir under_in = band_over ? W : band_in;
  PassNode p{b.add_node(NodeKind::Crossing, 4), {}};
  for (int k = 0; k < 4; ++k) p.slot[k] = (k - under_in + 4) % 4;
  return p;
}

struct Foot {
  int attachment, route;
  double at;
};

}  // namespace

void validate_model(const LinkModel& m) {
  const Diagram& d = m.diagram;
  if (!d.is_link()) throw Error(ErrorKind::Argument, "model '" + m.name + "' is not a link diagram");
  if (m.type_index < 1) throw Error(ErrorKind::Argument, "model '" + m.name + "' needs type at least 1");
  if (static_cast<int>(m.feet.size()) != m.type_index + 1)
    throw Error(ErrorKind::Argument, "model '" + m.name + "' of type " + std::to_string(m.type_index) + " needs " +
                                         std::to_string(m.type_index + 1) + " feet, has " + std::to_string(m.feet.size()));
  if (d.num_components() != static_cast<int>(m.feet.size()))
    throw Error(ErrorKind::Argument, "model '" + m.name + "' needs one foot per component");
  for (std::size_t i = 0; i < m.feet.size(); ++i) {
    int a = m.feet[i];
    if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, "model foot " + arc_name(a) + " not found");
    if (d.component_of(a) != static_cast<int>(i))
      throw Error(ErrorKind::Argument, "model foot " + std::to_string(i) + " must lie on component " + std::to_string(i));
  }
  if (!common_region(d, m.feet)) throw Error(ErrorKind::Argument, "model feet do not border a common face");
  for (int i = 0; i < d.num_components(); ++i) {
    if (d.num_components() < 2) break;
    Diagram rest = simplify(delete_component(d, i));
    if (rest.num_crossings() != 0)
      throw Error(ErrorKind::Argument, "model '" + m.name + "' is not Brunnian: deleting component " + std::to_string(i) +
                                           " leaves " + std::to_string(rest.num_crossings()) + " crossings after simplification");
  }
}

void register_model(const LinkModel& m) {
  validate_model(m);
  Models& r = models();
  std::unique_lock lock(r.mu);
  for (const auto& x : r.list)
    if (x.name == m.name) throw Error(ErrorKind::Argument, "a model named '" + m.name + "' is already registered");
  r.list.push_back(m);
}

std::vector<LinkModel> model_catalog() {
  Models& r = models();
  std::shared_lock lock(r.mu);
  return r.list;
}

LinkModel model(const std::string& name) {
  Models& r = models();
  std::shared_lock lock(r.mu);
  for (const auto& x : r.list)
    if (x.name == name) return x;
  throw Error(ErrorKind::Argument, "unknown link model '" + name + "'");
}

Diagram band_sum(const Diagram& d, const std::vector<Attachment>& attachments) {
  if (attachments.empty()) return d;
  auto check_arc = [&](int a) {
    if (a < 0 || a >= d.num_arcs()) throw Error(ErrorKind::Argument, arc_name(a) + " not found");
  };
  std::map<int, std::vector<Foot>> feet_on;
  std::map<int, std::string> passed;
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    const Attachment& at = attachments[i];
    if (at.routes.size() != at.model.feet.size())
      throw Error(ErrorKind::Argument, "model '" + at.model.name + "' has " + std::to_string(at.model.feet.size()) +
                                           " feet but " + std::to_string(at.routes.size()) + " routes are given");
    int target = 0;
    for (std::size_t r = 0; r < at.routes.size(); ++r) {
      const BandRoute& br = at.routes[r];
      std::string who = "attachment " + std::to_string(i) + " route " + std::to_string(r);
      check_arc(br.foot);
      if (d.touches_vertex(br.foot))
        throw Error(ErrorKind::Argument, who + ": foot " + arc_name(br.foot) + " is incident to a graph vertex");
      if (!(br.at > 0.0 && br.at < 1.0)) throw Error(ErrorKind::Argument, who + ": foot position must lie strictly between 0 and 1");
      feet_on[br.foot].push_back({static_cast<int>(i), static_cast<int>(r), br.at});
      int cur = d.region({br.foot, br.attach_side == Side::Left});
      for (std::size_t j = 0; j < br.passes.size(); ++j) {
        const Pass& p = br.passes[j];
        check_arc(p.arc);
        if (!passed.emplace(p.arc, who).second)
          throw site_error("route interference: " + arc_name(p.arc) + " is passed by two bands");
        if (d.region({p.arc, p.side == Side::Left}) != cur)
          throw site_error(who + ": pass " + std::to_string(j) + " over " + arc_name(p.arc) +
                           " does not start in the band's current face");
        cur = d.region({p.arc, p.side != Side::Left});
      }
      if (r == 0) target = cur;
      if (cur != target) throw site_error("attachment " + std::to_string(i) + ": routes end in different faces");
    }
  }
  for (auto& [arc, fs] : feet_on) {
    if (passed.count(arc)) throw site_error("route interference: " + arc_name(arc) + " carries a foot and is passed by a band");
    std::sort(fs.begin(), fs.end(), [](const Foot& x, const Foot& y) { return x.at < y.at; });
    for (std::size_t j = 1; j < fs.size(); ++j)
      if (fs[j].at == fs[j - 1].at) throw site_error("route interference: two feet at the same position of " + arc_name(arc));
  }

  detail::Builder b;
  std::vector<int> host_edge = b.append(d, 0);
  long offset = d.num_arcs();
  // joints per attachment and route: host side (A start, B end), model side (B start, A end)
  std::vector<std::vector<std::array<int, 4>>> joint(attachments.size());
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    const Attachment& at = attachments[i];
    Diagram md = at.model.diagram;
    auto face = common_region(md, at.model.feet);
    if (!face) throw Error(ErrorKind::Argument, "model '" + at.model.name + "' has no face bordering all feet");
    std::vector<char> flip(static_cast<std::size_t>(md.num_components()), 0);
    for (std::size_t r = 0; r < at.routes.size(); ++r) {
      int m = at.model.feet[r];
      bool left = md.region({m, true}) == *face, right = md.region({m, false}) == *face;
      Side outside = left ? Side::Left : Side::Right;
      if (outside != at.routes[r].attach_side && !(left && right))
        flip[static_cast<std::size_t>(md.component_of(m))] = 1;
    }
    for (int c = 0; c < md.num_components(); ++c)
      if (flip[static_cast<std::size_t>(c)]) md = reverse(md, c);
    std::vector<int> model_edge = b.append(md, offset);
    offset += md.num_arcs();
    joint[i].resize(at.routes.size());
    for (std::size_t r = 0; r < at.routes.size(); ++r) {
      int kB = b.add_node(NodeKind::Loop, 2), kA = b.add_node(NodeKind::Loop, 2);
      b.split(model_edge[static_cast<std::size_t>(at.model.feet[r])], {kB, 0}, {kA, 1}, b.fresh_key());
      joint[i][r][2] = kB;
      joint[i][r][3] = kA;
    }
  }
  for (const auto& [arc, fs] : feet_on) {
    int e = host_edge[static_cast<std::size_t>(arc)];
    for (const Foot& f : fs) {
      int jA = b.add_node(NodeKind::Loop, 2), jB = b.add_node(NodeKind::Loop, 2);
      e = b.split(e, {jA, 0}, {jB, 1}, b.fresh_key());
      joint[static_cast<std::size_t>(f.attachment)][static_cast<std::size_t>(f.route)][0] = jA;
      joint[static_cast<std::size_t>(f.attachment)][static_cast<std::size_t>(f.route)][1] = jB;
    }
  }
  for (std::size_t i = 0; i < attachments.size(); ++i) {
    for (std::size_t r = 0; r < attachments[i].routes.size(); ++r) {
      const BandRoute& br = attachments[i].routes[r];
      auto [jA, jB, kB, kA] = joint[i][r];
      End a_prev{jA, 1};
      std::vector<std::pair<PassNode, Dir>> b_nodes;  // B's crossing and its entry
      for (const Pass& p : br.passes) {
        // band moves south when it enters from the left of the west-to-east arc
        Dir a_in = p.side == Side::Left ? N : S, a_out = a_in == N ? S : N;
        PassNode xa = pass_node(b, p.over, a_in), xb = pass_node(b, p.over, a_out);
        bool a_first = p.side != br.attach_side;
        int e = host_edge[static_cast<std::size_t>(p.arc)];
        for (const PassNode& x : a_first ? std::array{xa, xb} : std::array{xb, xa})
          e = b.split(e, {x.node, x.slot[W]}, {x.node, x.slot[E]}, b.fresh_key());
        b.add_edge(a_prev, {xa.node, xa.slot[a_in]}, b.fresh_key());
        a_prev = {xa.node, xa.slot[a_out]};
        b_nodes.push_back({xb, a_out});
      }
      b.add_edge(a_prev, {kA, 0}, b.fresh_key());
      End b_prev{kB, 1};
      for (auto it = b_nodes.rbegin(); it != b_nodes.rend(); ++it) {
        Dir b_in = it->second, b_out = b_in == N ? S : N;
        b.add_edge(b_prev, {it->first.node, it->first.slot[b_in]}, b.fresh_key());
        b_prev = {it->first.node, it->first.slot[b_out]};
      }
      b.add_edge(b_prev, {jB, 0}, b.fresh_key());
    }
  }
  try {
    return b.build();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Validity) throw;
    throw site_error(std::string("route interference: the bands cannot be drawn without crossing (") + e.what() + ")");
  }
}

Attachment hopf_at_corner(const Diagram& d, int c, int q) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "crossing " + std::to_string(c + 1) + " not found");
  if (q < 0 || q > 3) throw Error(ErrorKind::Argument, "corner must be 0..3");
  const Crossing& x = d.crossing(c);
  int s0 = q, s1 = (q + 1) % 4;
  int a0 = x.arcs[static_cast<std::size_t>(s0)], a1 = x.arcs[static_cast<std::size_t>(s1)];
  auto incoming = [&](int a, int s) { return d.head(a) == Slot{NodeKind::Crossing, c, s}; };
  Attachment at{model("hopf"), {}};
  bool in0 = incoming(a0, s0), in1 = incoming(a1, s1);
  at.routes.push_back({a0, in0 ? Side::Right : Side::Left, in0 ? 0.9 : 0.1, {}});
  at.routes.push_back({a1, in1 ? Side::Left : Side::Right, in1 ? 0.9 : 0.1, {}});
  return at;
}

Attachment hopf_recipe(const Diagram& d, int c) {
  if (c < 0 || c >= d.num_crossings()) throw Error(ErrorKind::Argument, "crossing " + std::to_string(c + 1) + " not found");
  // corners between an over slot and the following under slot give the
  // change; corners 0 and 2 generally do not
  const Crossing& x = d.crossing(c);
  return hopf_at_corner(d, c, x.arcs[3] != x.arcs[0] ? 3 : 1);
}

}  // namespace akmove
