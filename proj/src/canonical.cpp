#include "akmove/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace akmove {

std::string CanonicalCode::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < data.size(); ++i) os << (i ? "." : "") << data[i];
  return os.str();
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : c.data) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

class PieceEncoder {
 public:
  PieceEncoder(const Diagram& d, std::vector<int> comps, std::vector<int> vertices)
      : d_(d), comps_(std::move(comps)), vertices_(std::move(vertices)) {
    for (int c : comps_)
      for (int a : d_.component(c).arcs) arcs_.push_back(a);
    for (int a : arcs_) {
      Slot s[2] = {d_.head(a), d_.tail(a)};
      for (Slot x : s)
        if (x.kind == NodeKind::Crossing) crossings_.push_back(x.node);
    }
    std::sort(crossings_.begin(), crossings_.end());
    crossings_.erase(std::unique(crossings_.begin(), crossings_.end()), crossings_.end());
  }

  std::vector<int> best() {
    std::vector<int> result;
    if (comps_.empty()) {
      // isolated vertices
      return {0, static_cast<int>(vertices_.size())};
    }
    bool have = false;
    for (int c : comps_) {
      const Component& comp = d_.component(c);
      std::size_t starts = comp.closed ? comp.arcs.size() : 1;
      for (std::size_t i = 0; i < starts; ++i) {
        std::vector<int> code = encode(c, static_cast<int>(i));
        if (!have || code < result) {
          result = std::move(code);
          have = true;
        }
      }
    }
    return result;
  }

 private:
  std::vector<int> encode(int first_comp, int first_index) {
    label_.assign(static_cast<std::size_t>(d_.num_arcs()), 0);
    std::vector<int> comp_done(static_cast<std::size_t>(d_.num_components()), 0);
    std::vector<int> by_label{-1};
    std::vector<int> header;
    auto take = [&](int comp, int start_arc) {
      const Component& cc = d_.component(comp);
      comp_done[static_cast<std::size_t>(comp)] = 1;
      std::size_t n = cc.arcs.size();
      std::size_t s = static_cast<std::size_t>(std::find(cc.arcs.begin(), cc.arcs.end(), start_arc) - cc.arcs.begin());
      for (std::size_t k = 0; k < n; ++k) {
        int a = cc.arcs[(s + k) % n];
        label_[static_cast<std::size_t>(a)] = static_cast<int>(by_label.size());
        by_label.push_back(a);
      }
      header.push_back(static_cast<int>(n));
      header.push_back(cc.closed ? 1 : 0);
    };
    take(first_comp, d_.component(first_comp).arcs[static_cast<std::size_t>(first_index)]);
    auto visit = [&](Slot s) {
      if (s.kind == NodeKind::Crossing) {
        for (int q : {1, 3}) {
          Slot o{NodeKind::Crossing, s.node, (s.pos + q) % 4};
          int b = d_.arc_at(o);
          int comp = d_.component_of(b);
          if (comp_done[static_cast<std::size_t>(comp)]) continue;
          // start on the arc that leaves this crossing along the other strand
          int start = d_.tail(b) == o ? b : d_.next_arc(b);
          take(comp, d_.component(comp).closed ? start : d_.component(comp).arcs[0]);
        }
      } else if (s.kind == NodeKind::Vertex) {
        const auto& arcs = d_.vertex(s.node).arcs;
        int deg = static_cast<int>(arcs.size());
        for (int q = 1; q < deg; ++q) {
          int b = arcs[static_cast<std::size_t>((s.pos + q) % deg)];
          int comp = d_.component_of(b);
          if (comp_done[static_cast<std::size_t>(comp)]) continue;
          take(comp, d_.component(comp).arcs[0]);
        }
      }
    };
    for (std::size_t l = 1; l < by_label.size(); ++l) {
      int a = by_label[l];
      visit(d_.head(a));
      visit(d_.tail(a));
    }

    std::vector<std::array<int, 5>> xs;
    for (int c : crossings_) {
      const auto& x = d_.crossing(c).arcs;
      xs.push_back({label_[static_cast<std::size_t>(x[0])], label_[static_cast<std::size_t>(x[1])],
                    label_[static_cast<std::size_t>(x[2])], label_[static_cast<std::size_t>(x[3])], d_.sign(c)});
    }
    std::sort(xs.begin(), xs.end());
    std::vector<std::vector<int>> vs;
    for (int v : vertices_) {
      std::vector<int> ends;
      for (int p = 0; p < static_cast<int>(d_.vertex(v).arcs.size()); ++p) {
        int a = d_.vertex(v).arcs[static_cast<std::size_t>(p)];
        bool is_head = d_.head(a) == Slot{NodeKind::Vertex, v, p};
        ends.push_back(2 * label_[static_cast<std::size_t>(a)] + (is_head ? 1 : 0));
      }
      std::vector<int> best = ends;
      for (std::size_t r = 1; r < ends.size(); ++r) {
        std::rotate(ends.begin(), ends.begin() + 1, ends.end());
        best = std::min(best, ends);
      }
      vs.push_back(std::move(best));
    }
    std::sort(vs.begin(), vs.end());

    std::vector<int> code;
    code.push_back(static_cast<int>(comps_.size()));
    code.push_back(static_cast<int>(vertices_.size()));
    code.insert(code.end(), header.begin(), header.end());
    code.push_back(static_cast<int>(xs.size()));
    for (const auto& x : xs) code.insert(code.end(), x.begin(), x.end());
    for (const auto& v : vs) {
      code.push_back(static_cast<int>(v.size()));
      code.insert(code.end(), v.begin(), v.end());
    }
    return code;
  }

  const Diagram& d_;
  std::vector<int> comps_, vertices_, arcs_, crossings_;
  std::vector<int> label_;
};

}  // namespace

CanonicalCode canonical_code(const Diagram& d) {
  // Group non-loop components and vertices into connected pieces.
  const int nc = d.num_components();
  const int nv = d.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(nc + nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int c = 0; c < d.num_crossings(); ++c) unite(d.under_component(c), d.over_component(c));
  for (int v = 0; v < nv; ++v)
    for (int a : d.vertex(v).arcs) unite(nc + v, d.component_of(a));

  int loops = 0;
  std::vector<std::vector<int>> piece_comps(static_cast<std::size_t>(nc + nv)), piece_verts(static_cast<std::size_t>(nc + nv));
  for (int c = 0; c < nc; ++c) {
    if (d.is_loop_arc(d.component(c).arcs[0])) {
      ++loops;
      continue;
    }
    piece_comps[static_cast<std::size_t>(find(c))].push_back(c);
  }
  for (int v = 0; v < nv; ++v) piece_verts[static_cast<std::size_t>(find(nc + v))].push_back(v);

  std::vector<std::vector<int>> codes;
  for (int r = 0; r < nc + nv; ++r) {
    if (piece_comps[static_cast<std::size_t>(r)].empty() && piece_verts[static_cast<std::size_t>(r)].empty()) continue;
    codes.push_back(PieceEncoder(d, piece_comps[static_cast<std::size_t>(r)], piece_verts[static_cast<std::size_t>(r)]).best());
  }
  std::sort(codes.begin(), codes.end());
  CanonicalCode out;
  if (codes.empty() && loops == 1) return out;  // the crossingless unknot
  out.data.push_back(loops);
  out.data.push_back(static_cast<int>(codes.size()));
  for (const auto& c : codes) {
    out.data.push_back(static_cast<int>(c.size()));
    out.data.insert(out.data.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace akmove
