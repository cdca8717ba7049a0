#include "akmove/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "akmove/edits.hpp"

namespace akmove {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorKind::Argument, "braid needs at least one strand");
  std::vector<int> cur(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) cur[static_cast<std::size_t>(p)] = p;
  int next = strands;
  std::vector<Crossing> xs;
  std::vector<std::pair<int, Slot>> in_slots;  // (arc, head slot)
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) throw Error(ErrorKind::Argument, "braid generator " + std::to_string(g) + " out of range");
    int c = static_cast<int>(xs.size());
    int x = cur[static_cast<std::size_t>(i)], y = cur[static_cast<std::size_t>(i + 1)];
    int xo = next++, yo = next++;  // x continues to position i+1, y to i
    Crossing cr;
    if (g > 0) {
      cr.arcs = {y, xo, yo, x};
      in_slots.push_back({y, {NodeKind::Crossing, c, 0}});
      in_slots.push_back({x, {NodeKind::Crossing, c, 3}});
    } else {
      cr.arcs = {x, y, xo, yo};
      in_slots.push_back({x, {NodeKind::Crossing, c, 0}});
      in_slots.push_back({y, {NodeKind::Crossing, c, 1}});
    }
    xs.push_back(cr);
    cur[static_cast<std::size_t>(i)] = yo;
    cur[static_cast<std::size_t>(i + 1)] = xo;
  }
  // Close up: the top arc at position p is the bottom arc p.
  std::vector<int> alias(static_cast<std::size_t>(next));
  for (int a = 0; a < next; ++a) alias[static_cast<std::size_t>(a)] = a;
  for (int p = 0; p < strands; ++p) alias[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
  std::vector<int> used;
  for (int a = 0; a < next; ++a)
    if (alias[static_cast<std::size_t>(a)] == a) used.push_back(a);
  std::vector<int> id(static_cast<std::size_t>(next), -1);
  for (std::size_t k = 0; k < used.size(); ++k) id[static_cast<std::size_t>(used[k])] = static_cast<int>(k);
  auto fin = [&](int a) { return id[static_cast<std::size_t>(alias[static_cast<std::size_t>(a)])]; };
  for (auto& cr : xs)
    for (auto& a : cr.arcs) a = fin(a);
  std::vector<Slot> heads(used.size(), Slot{NodeKind::Loop, -1, 0});
  for (auto [a, s] : in_slots) heads[static_cast<std::size_t>(fin(a))] = s;
  int loops = 0;
  for (auto& h : heads)
    if (h.kind == NodeKind::Loop) h.node = loops++;
  return Diagram::from_parts(std::move(xs), {}, std::move(heads));
}

Diagram unknot() { return unlink(1); }

Diagram unlink(int n) {
  std::vector<Slot> heads;
  for (int i = 0; i < n; ++i) heads.push_back({NodeKind::Loop, i, 0});
  return Diagram::from_parts({}, {}, std::move(heads));
}

const std::vector<CatalogEntry>& diagram_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> e;
    Diagram trefoil = braid_closure(2, {1, 1, 1});
    e.push_back({"unknot", "crossingless unknot", unknot()});
    e.push_back({"unlink2", "2-component crossingless unlink", unlink(2)});
    e.push_back({"unlink3", "3-component crossingless unlink", unlink(3)});
    e.push_back({"hopf+", "Hopf link, linking number +1", braid_closure(2, {1, 1})});
    e.push_back({"hopf-", "Hopf link, linking number -1", braid_closure(2, {-1, -1})});
    e.push_back({"trefoil", "right-handed trefoil", trefoil});
    e.push_back({"trefoil-left", "left-handed trefoil", mirror(trefoil)});
    e.push_back({"figure-eight", "figure-eight knot", braid_closure(3, {1, -2, 1, -2})});
    e.push_back({"cinquefoil", "(2,5) torus knot", braid_closure(2, {1, 1, 1, 1, 1})});
    e.push_back({"three-twist", "5_2 knot", braid_closure(3, {1, 1, 1, 2, -1, 2})});
    e.push_back({"granny", "trefoil # trefoil", connected_sum(trefoil, 0, trefoil, 0)});
    e.push_back({"square", "trefoil # left trefoil", connected_sum(trefoil, 0, mirror(trefoil), 0)});
    e.push_back({"whitehead", "Whitehead link", braid_closure(3, {1, -2, 1, -2, -2})});
    e.push_back({"borromean", "Borromean rings", braid_closure(3, {1, -2, 1, -2, 1, -2})});
    return e;
  }();
  return entries;
}

const Diagram& catalog_diagram(const std::string& name) {
  for (const auto& e : diagram_catalog())
    if (e.name == name) return e.diagram;
  throw Error(ErrorKind::Argument, "unknown catalog diagram '" + name + "'");
}

}  // namespace akmove
