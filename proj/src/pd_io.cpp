#include "akmove/pd_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace akmove {

namespace {

struct Term {
  char kind;  // 'X', 'V', 'O'
  std::vector<long> labels;
  int line, col;
};

struct Source {
  std::vector<Term> terms;
  std::optional<long> components, free_loops;
  std::vector<long> flips;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Source run() {
    Source src;
    while (true) {
      skip();
      if (i_ >= s_.size()) break;
      int line = line_, col = col_;
      std::string word;
      while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) word += take();
      if (word.empty()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
      skip_blank();
      if (peek() == '(') {
        if (word != "X" && word != "V" && word != "O") fail("unknown term '" + word + "'", line, col);
        take();
        Term t{word[0], {}, line, col};
        skip();
        if (peek() != ')') {
          while (true) {
            skip();
            t.labels.push_back(number());
            skip();
            if (peek() == ',') { take(); continue; }
            break;
          }
        }
        if (peek() != ')') fail("expected ')'");
        take();
        if (t.kind == 'X' && t.labels.size() != 4) fail("crossing needs 4 arcs", line, col);
        if (t.kind == 'O' && t.labels.size() != 1) fail("loop term needs 1 arc", line, col);
        src.terms.push_back(std::move(t));
      } else if (peek() == '=') {
        take();
        skip_blank();
        if (word == "components") src.components = number();
        else if (word == "free_loops") src.free_loops = number();
        else if (word == "flip") {
          while (true) {
            src.flips.push_back(number());
            if (peek() == ',') { take(); continue; }
            break;
          }
        } else fail("unknown header key '" + word + "'", line, col);
      } else {
        fail("expected '(' or '=' after '" + word + "'");
      }
    }
    return src;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { fail(msg, line_, col_); }
  [[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg);
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  char take() {
    char c = s_[i_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }
  void skip_blank() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) take();
  }
  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) take();
      else if (c == '#') { while (i_ < s_.size() && s_[i_] != '\n') take(); }
      else break;
    }
  }
  long number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 100000000) fail("number too large");
    }
    return v;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

struct Derivation {
  std::vector<Slot> heads;
  std::vector<std::vector<int>> free_strands;  // strands with no under passage, in forward order
};

// Orientation of every non-loop arc. `order` lists the terms in reading order
// as (is_vertex, index). Arcs in `flips` reverse their unconstrained strand.
Derivation derive(const std::vector<Crossing>& xs, const std::vector<GraphVertex>& vs,
                  const std::vector<std::pair<bool, int>>& order, int num_arcs,
                  const std::vector<int>& label_of, const std::set<int>& flips) {
  auto name = [&](int a) { return std::to_string(label_of[static_cast<std::size_t>(a)]); };
  std::vector<std::vector<Slot>> occ(static_cast<std::size_t>(num_arcs));
  for (auto [is_v, idx] : order) {
    if (!is_v) {
      for (int p = 0; p < 4; ++p) occ[static_cast<std::size_t>(xs[static_cast<std::size_t>(idx)].arcs[static_cast<std::size_t>(p)])].push_back({NodeKind::Crossing, idx, p});
    } else {
      const auto& arcs = vs[static_cast<std::size_t>(idx)].arcs;
      for (int p = 0; p < static_cast<int>(arcs.size()); ++p) occ[static_cast<std::size_t>(arcs[static_cast<std::size_t>(p)])].push_back({NodeKind::Vertex, idx, p});
    }
  }
  auto other_occ = [&](int a, Slot s) { return occ[static_cast<std::size_t>(a)][0] == s ? 1 : 0; };
  auto across = [&](Slot s) { return Slot{NodeKind::Crossing, s.node, (s.pos + 2) % 4}; };
  auto arc_at = [&](Slot s) { return xs[static_cast<std::size_t>(s.node)].arcs[static_cast<std::size_t>(s.pos)]; };

  std::vector<int> head_occ(static_cast<std::size_t>(num_arcs), -1);
  std::vector<int> stack;
  auto assign = [&](int a, int k) {
    int& h = head_occ[static_cast<std::size_t>(a)];
    if (h == k) return;
    if (h >= 0) throw Error(ErrorKind::Validity, "orientation mismatch on arc " + name(a));
    h = k;
    stack.push_back(a);
  };
  auto propagate = [&]() {
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      int k = head_occ[static_cast<std::size_t>(a)];
      Slot h = occ[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
      Slot t = occ[static_cast<std::size_t>(a)][static_cast<std::size_t>(1 - k)];
      if (h.kind == NodeKind::Crossing) {
        Slot s = across(h);
        int b = arc_at(s);
        assign(b, other_occ(b, s));
      }
      if (t.kind == NodeKind::Crossing) {
        Slot s = across(t);
        int b = arc_at(s);
        assign(b, occ[static_cast<std::size_t>(b)][0] == s ? 0 : 1);
      }
    }
  };
  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    Slot s0{NodeKind::Crossing, c, 0}, s2{NodeKind::Crossing, c, 2};
    int a = arc_at(s0);
    assign(a, occ[static_cast<std::size_t>(a)][0] == s0 ? 0 : 1);
    int b = arc_at(s2);
    assign(b, other_occ(b, s2));
    propagate();
  }
  for (int a : flips)
    if (head_occ[static_cast<std::size_t>(a)] >= 0)
      throw Error(ErrorKind::Validity, "flip on arc " + name(a) + " whose strand passes under a crossing");

  Derivation out;
  for (int a = 0; a < num_arcs; ++a) {
    if (head_occ[static_cast<std::size_t>(a)] >= 0) continue;
    // Walk the strand with `a` leaving through occurrence 1.
    std::vector<int> seq{a};
    std::vector<int> exit{1};
    bool closed = false;
    Slot e = occ[static_cast<std::size_t>(a)][1];
    while (e.kind == NodeKind::Crossing) {
      Slot s = across(e);
      int b = arc_at(s);
      int k = other_occ(b, s);
      if (b == a && k == 1) { closed = true; break; }
      seq.push_back(b);
      exit.push_back(k);
      e = occ[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
    }
    if (!closed) {
      // extend backwards to the other vertex end
      Slot f = occ[static_cast<std::size_t>(a)][0];
      std::vector<int> pre, pre_exit;
      while (f.kind == NodeKind::Crossing) {
        Slot s = across(f);
        int b = arc_at(s);
        pre.push_back(b);
        pre_exit.push_back(occ[static_cast<std::size_t>(b)][0] == s ? 0 : 1);
        f = occ[static_cast<std::size_t>(b)][static_cast<std::size_t>(1 - pre_exit.back())];
      }
      std::reverse(pre.begin(), pre.end());
      std::reverse(pre_exit.begin(), pre_exit.end());
      pre.insert(pre.end(), seq.begin(), seq.end());
      pre_exit.insert(pre_exit.end(), exit.begin(), exit.end());
      seq = std::move(pre);
      exit = std::move(pre_exit);
    }
    bool forward;
    std::size_t n = seq.size();
    if (closed) {
      std::size_t i = static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
      int next = seq[(i + 1) % n], prev = seq[(i + n - 1) % n];
      if (next != prev) forward = next < prev;
      else forward = exit[i] == 0;
    } else {
      if (n > 1) forward = seq.front() < seq.back();
      else forward = exit[0] == 1;
    }
    for (int b : seq)
      if (flips.count(b)) forward = !forward;
    for (std::size_t j = 0; j < n; ++j) head_occ[static_cast<std::size_t>(seq[j])] = forward ? exit[j] : 1 - exit[j];
    if (!forward) std::reverse(seq.begin(), seq.end());
    out.free_strands.push_back(std::move(seq));
  }
  out.heads.resize(static_cast<std::size_t>(num_arcs));
  for (int a = 0; a < num_arcs; ++a)
    out.heads[static_cast<std::size_t>(a)] = occ[static_cast<std::size_t>(a)][static_cast<std::size_t>(head_occ[static_cast<std::size_t>(a)])];
  return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  Source src = Lexer(text).run();

  std::map<long, int> uses, loop_uses;
  for (const auto& t : src.terms)
    for (long l : t.labels) {
      if (l <= 0) throw Error(ErrorKind::Syntax, "line " + std::to_string(t.line) + ": arc labels must be positive");
      (t.kind == 'O' ? loop_uses : uses)[l]++;
    }
  std::set<long> all;
  for (auto [l, n] : uses) all.insert(l);
  for (auto [l, n] : loop_uses) all.insert(l);
  for (auto [l, n] : uses) {
    if (loop_uses.count(l)) throw Error(ErrorKind::Validity, "arc " + std::to_string(l) + " is a loop and also used in a crossing or vertex");
    if (n != 2) throw Error(ErrorKind::Validity, "arc " + std::to_string(l) + " is used " + std::to_string(n) + " times (expected 2)");
  }
  for (auto [l, n] : loop_uses)
    if (n != 1) throw Error(ErrorKind::Validity, "loop arc " + std::to_string(l) + " declared " + std::to_string(n) + " times");

  std::map<long, int> id;
  std::vector<int> label_of;
  // Loop arcs take the ids after the crossing/vertex arcs only if their
  // labels sort there; ids follow label order either way.
  for (long l : all) {
    id[l] = static_cast<int>(label_of.size());
    label_of.push_back(static_cast<int>(l));
  }
  std::vector<Crossing> xs;
  std::vector<GraphVertex> vs;
  std::vector<int> loops;
  std::vector<std::pair<bool, int>> order;
  for (const auto& t : src.terms) {
    if (t.kind == 'X') {
      Crossing c;
      for (int p = 0; p < 4; ++p) c.arcs[static_cast<std::size_t>(p)] = id[t.labels[static_cast<std::size_t>(p)]];
      order.emplace_back(false, static_cast<int>(xs.size()));
      xs.push_back(c);
    } else if (t.kind == 'V') {
      GraphVertex v;
      for (long l : t.labels) v.arcs.push_back(id[l]);
      order.emplace_back(true, static_cast<int>(vs.size()));
      vs.push_back(std::move(v));
    } else {
      loops.push_back(id[t.labels[0]]);
    }
  }
  int n = static_cast<int>(label_of.size());

  // The derivation sees loop arcs as isolated; they are excluded by giving
  // them no occurrences, so derive over the non-loop arcs via a remap.
  std::vector<int> sub_of(static_cast<std::size_t>(n), -1), full_of;
  for (int a = 0; a < n; ++a)
    if (!loop_uses.count(label_of[static_cast<std::size_t>(a)])) {
      sub_of[static_cast<std::size_t>(a)] = static_cast<int>(full_of.size());
      full_of.push_back(a);
    }
  std::vector<Crossing> sxs = xs;
  for (auto& c : sxs)
    for (auto& a : c.arcs) a = sub_of[static_cast<std::size_t>(a)];
  std::vector<GraphVertex> svs = vs;
  for (auto& v : svs)
    for (auto& a : v.arcs) a = sub_of[static_cast<std::size_t>(a)];
  std::vector<int> sub_labels;
  for (int a : full_of) sub_labels.push_back(label_of[static_cast<std::size_t>(a)]);
  std::set<int> flips;
  for (long l : src.flips) {
    auto it = id.find(l);
    if (it == id.end() || sub_of[static_cast<std::size_t>(it->second)] < 0)
      throw Error(ErrorKind::Validity, "flip names unknown arc " + std::to_string(l));
    flips.insert(sub_of[static_cast<std::size_t>(it->second)]);
  }
  Derivation der = derive(sxs, svs, order, static_cast<int>(full_of.size()), sub_labels, flips);

  std::vector<Slot> heads(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < full_of.size(); ++s) heads[static_cast<std::size_t>(full_of[s])] = der.heads[s];
  for (std::size_t l = 0; l < loops.size(); ++l) heads[static_cast<std::size_t>(loops[l])] = Slot{NodeKind::Loop, static_cast<int>(l), 0};

  Diagram d = Diagram::from_parts(xs, vs, heads);
  int have_loops = d.num_loops();
  int extra = 0;
  if (src.free_loops) {
    if (*src.free_loops < have_loops)
      throw Error(ErrorKind::Validity, "header declares " + std::to_string(*src.free_loops) + " free loops but " + std::to_string(have_loops) + " are given");
    extra = static_cast<int>(*src.free_loops) - have_loops;
  } else if (src.components) {
    extra = std::max(0, static_cast<int>(*src.components) - d.num_components());
  }
  if (extra > 0) {
    for (int i = 0; i < extra; ++i) heads.push_back(Slot{NodeKind::Loop, have_loops + i, 0});
    d = Diagram::from_parts(xs, vs, heads);
  }
  if (src.components && *src.components != d.num_components())
    throw Error(ErrorKind::Validity, "header declares " + std::to_string(*src.components) + " components but the code has " + std::to_string(d.num_components()));
  return d;
}

std::string serialize_pd(const Diagram& d) {
  std::vector<std::pair<bool, int>> order;
  for (int c = 0; c < d.num_crossings(); ++c) order.emplace_back(false, c);
  for (int v = 0; v < d.num_vertices(); ++v) order.emplace_back(true, v);
  // Non-loop arcs in id order.
  std::vector<int> sub_of(static_cast<std::size_t>(d.num_arcs()), -1), full_of;
  for (int a = 0; a < d.num_arcs(); ++a)
    if (!d.is_loop_arc(a)) {
      sub_of[static_cast<std::size_t>(a)] = static_cast<int>(full_of.size());
      full_of.push_back(a);
    }
  std::vector<Crossing> sxs = d.crossings();
  for (auto& c : sxs)
    for (auto& a : c.arcs) a = sub_of[static_cast<std::size_t>(a)];
  std::vector<GraphVertex> svs = d.vertices();
  for (auto& v : svs)
    for (auto& a : v.arcs) a = sub_of[static_cast<std::size_t>(a)];
  std::vector<int> labels;
  for (int a : full_of) labels.push_back(a + 1);
  Derivation der = derive(sxs, svs, order, static_cast<int>(full_of.size()), labels, {});
  std::vector<int> flips;
  for (const auto& strand : der.free_strands) {
    int first = strand.front();
    if (!(der.heads[static_cast<std::size_t>(first)] == d.head(full_of[static_cast<std::size_t>(first)])))
      flips.push_back(full_of[static_cast<std::size_t>(*std::min_element(strand.begin(), strand.end()))] + 1);
  }
  std::sort(flips.begin(), flips.end());

  std::ostringstream os;
  os << "components=" << d.num_components() << " free_loops=" << d.num_loops();
  if (!flips.empty()) {
    os << " flip=";
    for (std::size_t i = 0; i < flips.size(); ++i) os << (i ? "," : "") << flips[i];
  }
  os << "\n";
  for (int c = 0; c < d.num_crossings(); ++c) {
    const auto& x = d.crossing(c).arcs;
    os << (c ? " " : "") << "X(" << x[0] + 1 << "," << x[1] + 1 << "," << x[2] + 1 << "," << x[3] + 1 << ")";
  }
  if (d.num_crossings()) os << "\n";
  for (int v = 0; v < d.num_vertices(); ++v) {
    os << (v ? " " : "") << "V(";
    const auto& arcs = d.vertex(v).arcs;
    for (std::size_t i = 0; i < arcs.size(); ++i) os << (i ? "," : "") << arcs[i] + 1;
    os << ")";
  }
  if (d.num_vertices()) os << "\n";
  for (int l = 0; l < d.num_loops(); ++l) os << (l ? " " : "") << "O(" << d.loop_arcs()[static_cast<std::size_t>(l)] + 1 << ")";
  if (d.num_loops()) os << "\n";
  return os.str();
}

Diagram parse_gauss(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  struct Pass { bool over; long label; int sign; };
  std::vector<Pass> passes;
  while (is >> tok) {
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-'))
      throw Error(ErrorKind::Syntax, "bad Gauss token '" + tok + "'");
    long label = 0;
    for (std::size_t i = 1; i + 1 < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw Error(ErrorKind::Syntax, "bad Gauss token '" + tok + "'");
      label = label * 10 + (tok[i] - '0');
    }
    passes.push_back({tok[0] == 'O', label, tok.back() == '+' ? 1 : -1});
  }
  if (passes.empty()) return parse_pd("components=1");
  std::map<long, std::pair<int, int>> at;  // label -> (over pass, under pass)
  std::map<long, int> sign;
  for (int i = 0; i < static_cast<int>(passes.size()); ++i) {
    auto& slot = at.try_emplace(passes[static_cast<std::size_t>(i)].label, -1, -1).first->second;
    int& which = passes[static_cast<std::size_t>(i)].over ? slot.first : slot.second;
    if (which >= 0) throw Error(ErrorKind::Validity, "crossing " + std::to_string(passes[static_cast<std::size_t>(i)].label) + " passed twice the same way");
    which = i;
    auto [it, fresh] = sign.emplace(passes[static_cast<std::size_t>(i)].label, passes[static_cast<std::size_t>(i)].sign);
    if (!fresh && it->second != passes[static_cast<std::size_t>(i)].sign)
      throw Error(ErrorKind::Validity, "crossing " + std::to_string(passes[static_cast<std::size_t>(i)].label) + " has inconsistent signs");
  }
  const int n = static_cast<int>(passes.size());
  std::vector<Crossing> xs;
  std::vector<Slot> heads(static_cast<std::size_t>(n));
  int c = 0;
  for (auto& [label, pr] : at) {
    auto [o, u] = pr;
    if (o < 0 || u < 0) throw Error(ErrorKind::Validity, "crossing " + std::to_string(label) + " needs one over and one under pass");
    int ui = (u + n - 1) % n, uo = u, oi = (o + n - 1) % n, oo = o;
    Crossing x;
    if (sign[label] > 0) x.arcs = {ui, oo, uo, oi};
    else x.arcs = {ui, oi, uo, oo};
    heads[static_cast<std::size_t>(ui)] = {NodeKind::Crossing, c, 0};
    heads[static_cast<std::size_t>(oi)] = {NodeKind::Crossing, c, sign[label] > 0 ? 3 : 1};
    xs.push_back(x);
    ++c;
  }
  return Diagram::from_parts(std::move(xs), {}, std::move(heads));
}

std::string serialize_gauss(const Diagram& d) {
  if (!d.is_link() || d.num_components() != 1) throw Error(ErrorKind::Argument, "Gauss code needs a knot diagram");
  if (d.num_crossings() == 0) return "";
  std::ostringstream os;
  const auto& arcs = d.component(0).arcs;
  // Start with the arc entering the first pass so parse_gauss round-trips.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Slot h = d.head(arcs[(i + arcs.size() - 1) % arcs.size()]);
    os << (i ? " " : "") << (h.pos == 0 ? "U" : "O") << h.node + 1 << (d.sign(h.node) > 0 ? "+" : "-");
  }
  return os.str();
}

}  // namespace akmove
