#include "akmove/lab.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/moves.hpp"
#include "akmove/reidemeister.hpp"

namespace akmove {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string code_of(const Diagram& d) { return canonical_code(d).to_string(); }

std::string subset_label(unsigned mask, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1u)) continue;
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::string arcs_label(const std::vector<int>& arcs) {
  std::string s;
  for (std::size_t i = 0; i < arcs.size(); ++i) s += (i ? "," : "") + std::to_string(arcs[i] + 1);
  return s;
}

struct DartRef {
  int arc;
  Side side;
};

// Darts of d grouped by region, in arc order.
std::vector<DartRef> darts_in(const Diagram& d, int region) {
  std::vector<DartRef> out;
  for (int a = 0; a < d.num_arcs(); ++a)
    for (Side s : {Side::Left, Side::Right})
      if (d.region({a, s == Side::Left}) == region) out.push_back({a, s});
  return out;
}

std::optional<DartRef> pick(Rng& rng, const std::vector<DartRef>& ds, const std::vector<char>& used, bool foot,
                            const Diagram& d) {
  std::vector<DartRef> ok;
  for (const auto& x : ds)
    if (!used[static_cast<std::size_t>(x.arc)] && !(foot && d.touches_vertex(x.arc))) ok.push_back(x);
  if (ok.empty()) return std::nullopt;
  return ok[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ok.size()) - 1))];
}

}  // namespace

void validate_scheme(const BandSumScheme& s) {
  if (s.attachments.empty()) throw Error(ErrorKind::Argument, "a scheme needs at least one attachment");
  if (s.k < 2) throw Error(ErrorKind::Argument, "a scheme needs k >= 2");
  for (std::size_t i = 0; i < s.attachments.size(); ++i) {
    const LinkModel& m = s.attachments[i].model;
    if (m.type_index != s.k - 1)
      throw Error(ErrorKind::Argument, "attachment " + std::to_string(i) + " uses model '" + m.name + "' of type " +
                                           std::to_string(m.type_index) + ", the scheme needs type " + std::to_string(s.k - 1));
  }
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["name"] = name;
  j["scope"] = scope;
  if (seed) j["seed"] = *seed;
  j["inputs"] = inputs;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["label"] = r.label;
    row["coefficient"] = r.coefficient;
    row["code"] = r.code;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.values) vals[k] = v;
    row["values"] = vals;
    j["rows"].push_back(row);
  }
  if (residual) j["residual"] = *residual;
  j["verdict"] = pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_text() const {
  std::ostringstream os;
  os << name << ": " << (pass ? "pass" : "fail") << "\n";
  os << "  scope: " << scope << "\n";
  if (seed) os << "  seed: " << *seed << "\n";
  for (const auto& r : rows) {
    os << "  " << r.label;
    if (r.coefficient != 0) os << " [" << (r.coefficient > 0 ? "+" : "") << r.coefficient << "]";
    for (const auto& [k, v] : r.values) os << " " << k << "=" << v;
    os << "\n";
  }
  if (residual) os << "  residual: " << *residual << "\n";
  return os.str();
}

FormalSum alternating_sum(const BandSumScheme& s) {
  validate_scheme(s);
  std::size_t n = s.attachments.size();
  if (n > 16) throw Error(ErrorKind::Budget, "too many attachments for a subset sum");
  FormalSum out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Attachment> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(s.attachments[i]);
    out.add(std::popcount(mask) % 2 ? -1 : 1, band_sum(s.base, sub));
  }
  return out;
}

ExperimentReport order_nk_test(const InvariantDescriptor& inv, const BandSumScheme& s) {
  FormalSum sum = alternating_sum(s);
  ExperimentReport r;
  r.name = "order-nk";
  r.scope = inv.name + " as a finite type invariant of order (" + std::to_string(s.n()) + ";" + std::to_string(s.k) +
            "), tested on this scheme only";
  r.inputs.push_back(code_of(s.base));
  for (std::size_t m = 0; m < sum.size(); ++m) {
    const SumTerm& t = sum.terms()[m];
    r.rows.push_back({subset_label(static_cast<unsigned>(m), s.attachments.size()), t.coefficient, code_of(t.diagram),
                      {{inv.name, to_string(inv.evaluate(t.diagram))}}});
  }
  Value res = evaluate_sum(inv, sum);
  r.residual = to_string(res);
  r.pass = is_zero(res);
  return r;
}

ExperimentReport vassiliev_order_test(const InvariantDescriptor& inv, const std::vector<SingularDiagram>& battery) {
  if (battery.empty()) throw Error(ErrorKind::Argument, "empty singular battery");
  int m = battery.front().order();
  for (const auto& sd : battery)
    if (sd.order() != m) throw Error(ErrorKind::Argument, "battery mixes diagrams with different numbers of double points");
  ExperimentReport r;
  r.name = "vassiliev-order";
  r.scope = inv.name + " on " + std::to_string(battery.size()) + " diagrams with " + std::to_string(m) +
            " double points; a pass is evidence of order at most " + std::to_string(m - 1) + ", not proof";
  r.pass = true;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto& sd = battery[i];
    Value v = evaluate_singular(inv, sd);
    r.pass = r.pass && is_zero(v);
    std::vector<int> dps(sd.double_points.begin(), sd.double_points.end());
    r.inputs.push_back(code_of(sd.base));
    r.rows.push_back({"fixture " + std::to_string(i), 0, code_of(sd.base),
                      {{"double-points", arcs_label(dps)}, {"value", to_string(v)}}});
  }
  return r;
}

MovePair delta_pair(const Diagram& d, const std::array<int, 3>& arcs) {
  return {"delta at arcs " + arcs_label({arcs.begin(), arcs.end()}), d, delta_move(d, arcs)};
}

MovePair clasp_pair(const Diagram& d, const ClaspSite& site) {
  return {"clasp-pass at clasp " + arcs_label({site.clasp.begin(), site.clasp.end()}) + " band " +
              arcs_label({site.band.begin(), site.band.end()}),
          d, clasp_pass(d, site).diagram};
}

MovePair crossing_change_pair(const Diagram& d, int c) {
  return {"crossing change at " + std::to_string(c + 1), d, crossing_change(d, c)};
}

ExperimentReport theorem51_experiment(int k, const std::vector<MovePair>& pairs) {
  if (k != 1 && k != 2) throw Error(ErrorKind::Argument, "k must be 1 or 2");
  ExperimentReport r;
  r.name = "theorem51";
  r.scope = k == 1 ? "linking numbers agree across each pair"
                   : "linking numbers and the a2 of each component agree across each pair";
  r.pass = !pairs.empty();
  InvariantDescriptor lk = invariant("lk-vector"), a2 = invariant("a2-components");
  for (const auto& p : pairs) {
    r.inputs.push_back(code_of(p.before));
    ReportRow row{p.label, 0, code_of(p.before), {}};
    bool ok = p.before.num_components() == p.after.num_components();
    std::vector<InvariantDescriptor> panel{lk};
    if (k == 2) panel.push_back(a2);
    for (const auto& inv : panel) {
      Value x = inv.evaluate(p.before), y = inv.evaluate(p.after);
      ok = ok && x == y;
      row.values.push_back({inv.name + "-before", to_string(x)});
      row.values.push_back({inv.name + "-after", to_string(y)});
    }
    row.values.push_back({"equal", ok ? "yes" : "no"});
    r.pass = r.pass && ok;
    r.rows.push_back(std::move(row));
  }
  return r;
}

ExperimentReport prop13_experiment(const InvariantDescriptor& inv, const std::vector<BandSumScheme>& schemes) {
  if (!inv.vassiliev_order) throw Error(ErrorKind::Argument, "invariant '" + inv.name + "' has no declared Vassiliev order");
  ExperimentReport r;
  r.name = "prop13";
  r.scope = inv.name + " (Vassiliev order " + std::to_string(*inv.vassiliev_order) + ") on " +
            std::to_string(schemes.size()) + " schemes";
  r.pass = !schemes.empty();
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const auto& s = schemes[i];
    int bound = (s.n() + 1) * (s.k - 1) - 1;
    if (*inv.vassiliev_order > bound)
      throw Error(ErrorKind::Argument, "invariant order " + std::to_string(*inv.vassiliev_order) + " exceeds the bound " +
                                           std::to_string(bound) + " for n=" + std::to_string(s.n()) + ", k=" + std::to_string(s.k));
    ExperimentReport sub = order_nk_test(inv, s);
    r.inputs.push_back(code_of(s.base));
    r.rows.push_back({"scheme " + std::to_string(i), 0, code_of(s.base),
                      {{"n", std::to_string(s.n())}, {"k", std::to_string(s.k)}, {"residual", *sub.residual}}});
    r.pass = r.pass && sub.pass;
  }
  return r;
}

ExperimentReport whitehead_experiment() { return whitehead_experiment(catalog_diagram("whitehead"), unlink(2)); }

ExperimentReport whitehead_experiment(const Diagram& w, const Diagram& u) {
  if (w.num_components() != 2 || u.num_components() != 2)
    throw Error(ErrorKind::Argument, "the Whitehead experiment needs two 2-component links");
  ExperimentReport r;
  r.name = "whitehead";
  r.scope = "Whitehead link against the trivial 2-component link";
  r.inputs = {code_of(w), code_of(u)};
  int lw = linking_number(w, 0, 1), lu = linking_number(u, 0, 1);
  auto aw = component_a2(w), au = component_a2(u);
  LaurentPoly cw = conway(w), cu = conway(u);
  int fw = arf(w), fu = arf(u);
  auto a2s = [](const std::vector<std::int64_t>& v) { return to_string(Value{v}); };
  r.rows.push_back({"whitehead", 0, code_of(w),
                    {{"lk", std::to_string(lw)}, {"a2-components", a2s(aw)}, {"conway", cw.to_string()}, {"arf", std::to_string(fw)}}});
  r.rows.push_back({"unlink", 0, code_of(u),
                    {{"lk", std::to_string(lu)}, {"a2-components", a2s(au)}, {"conway", cu.to_string()}, {"arf", std::to_string(fu)}}});
  auto zero = [](const std::vector<std::int64_t>& v) { return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }); };
  r.pass = lw == 0 && lu == 0 && zero(aw) && zero(au) && cw != cu && fw != fu;
  return r;
}

std::vector<Diagram> catalog_knots() {
  std::vector<Diagram> out;
  for (const auto& e : diagram_catalog())
    if (e.diagram.num_components() == 1) out.push_back(e.diagram);
  return out;
}

ExperimentReport group_checks(const std::vector<Diagram>& knots) {
  for (const auto& k : knots)
    if (k.num_components() != 1 || !k.is_link()) throw Error(ErrorKind::Argument, "group checks need knots");
  ExperimentReport r;
  r.name = "group";
  r.scope = "a2 and Arf additivity, commutativity and unit law under connected sum on " + std::to_string(knots.size()) +
            " knots";
  r.pass = !knots.empty();
  Diagram u = unknot();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Diagram& a = knots[i];
    r.inputs.push_back(code_of(a));
    Diagram au = connected_sum(a, 0, u, 0);
    bool unit = conway(au) == conway(a);
    r.rows.push_back({"unit " + std::to_string(i), 0, code_of(a), {{"unit-law", unit ? "yes" : "no"}}});
    r.pass = r.pass && unit;
    for (std::size_t j = 0; j < knots.size(); ++j) {
      const Diagram& b = knots[j];
      Diagram ab = connected_sum(a, 0, b, 0), ba = connected_sum(b, 0, a, 0);
      bool add = conway_coeff(ab, 2) == conway_coeff(a, 2) + conway_coeff(b, 2);
      bool arf_add = arf(ab) == (arf(a) + arf(b)) % 2;
      bool comm = conway(ab) == conway(ba);
      r.rows.push_back({"pair " + std::to_string(i) + "," + std::to_string(j), 0, code_of(ab),
                        {{"a2", std::to_string(conway_coeff(ab, 2))},
                         {"a2-additive", add ? "yes" : "no"},
                         {"arf-additive", arf_add ? "yes" : "no"},
                         {"commutative", comm ? "yes" : "no"}}});
      r.pass = r.pass && add && arf_add && comm;
    }
  }
  return r;
}

Attachment random_attachment(Rng& rng, const Diagram& d, const LinkModel& m, int max_passes, std::vector<char>& used) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<char> u = used;
    Attachment at{m, {}};
    bool ok = true;
    int target = 0;
    for (std::size_t r = 0; r < m.feet.size() && ok; ++r) {
      BandRoute br;
      if (r == 0) {
        std::vector<DartRef> all;
        for (int a = 0; a < d.num_arcs(); ++a) all.push_back({a, uniform(rng, 0, 1) ? Side::Left : Side::Right});
        auto f = pick(rng, all, u, true, d);
        if (!f) return at;
        br.foot = f->arc;
        br.attach_side = f->side;
        u[static_cast<std::size_t>(f->arc)] = 1;
        int cur = d.region({f->arc, f->side == Side::Left});
        for (int j = uniform(rng, 0, max_passes); j > 0; --j) {
          auto p = pick(rng, darts_in(d, cur), u, false, d);
          if (!p) break;
          u[static_cast<std::size_t>(p->arc)] = 1;
          br.passes.push_back({p->arc, uniform(rng, 0, 1) == 1, p->side});
          cur = d.region({p->arc, p->side != Side::Left});
        }
        target = cur;
      } else {
        int cur = target;
        for (int j = uniform(rng, 0, max_passes); j > 0; --j) {
          auto p = pick(rng, darts_in(d, cur), u, false, d);
          if (!p) break;
          u[static_cast<std::size_t>(p->arc)] = 1;
          br.passes.push_back({p->arc, uniform(rng, 0, 1) == 1, opposite(p->side)});
          cur = d.region({p->arc, p->side != Side::Left});
        }
        std::reverse(br.passes.begin(), br.passes.end());
        auto f = pick(rng, darts_in(d, cur), u, true, d);
        if (!f) {
          ok = false;
          break;
        }
        br.foot = f->arc;
        br.attach_side = f->side;
        u[static_cast<std::size_t>(f->arc)] = 1;
      }
      at.routes.push_back(br);
    }
    if (!ok) continue;
    used = u;
    return at;
  }
  throw Error(ErrorKind::Budget, "could not place random bands for model '" + m.name + "'");
}

BandSumScheme random_scheme(Rng& rng, const Diagram& base, const LinkModel& m, int attachments, int max_passes) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    BandSumScheme s{base, {}, m.type_index + 1};
    std::vector<char> used(static_cast<std::size_t>(base.num_arcs()), 0);
    try {
      for (int i = 0; i < attachments; ++i) {
        Attachment at = random_attachment(rng, base, m, max_passes, used);
        if (at.routes.size() != m.feet.size()) throw Error(ErrorKind::Site, "no free arc for a foot");
        s.attachments.push_back(std::move(at));
      }
      band_sum(base, s.attachments);
      return s;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Site && e.kind() != ErrorKind::Budget) throw;
    }
  }
  throw Error(ErrorKind::Budget, "could not sample a valid band-sum scheme");
}

BandSumScheme random_scheme(Rng& rng, int components, int max_crossings, const LinkModel& m, int attachments,
                            int max_passes) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Diagram base = random_braid_link(rng, components, 3, max_crossings);
    if (base.num_crossings() < 3) continue;
    try {
      return random_scheme(rng, base, m, attachments, max_passes);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
    }
  }
  throw Error(ErrorKind::Budget, "could not sample a base diagram carrying the scheme");
}

std::vector<MovePair> delta_battery(Rng& rng, int count) {
  std::vector<MovePair> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 100 * count) throw Error(ErrorKind::Budget, "could not sample delta sites");
    Diagram d = random_braid_diagram(rng, 4, 9);
    auto sites = triangle_sites(d, true);
    if (sites.empty()) continue;
    out.push_back(delta_pair(d, sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))]));
  }
  return out;
}

std::vector<MovePair> clasp_battery(Rng& rng, int count) {
  std::vector<MovePair> out;
  for (int attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 100 * count) throw Error(ErrorKind::Budget, "could not sample clasp-pass sites");
    Diagram d = random_braid_diagram(rng, 3, 6);
    auto prepared = prepare_clasp_site(d, rng);
    if (!prepared) continue;
    out.push_back(clasp_pair(prepared->first, prepared->second));
  }
  return out;
}

std::vector<SingularDiagram> singular_battery(Rng& rng, int count, int order, int max_crossings, int components) {
  std::vector<SingularDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    Diagram d = components > 0 ? random_braid_link(rng, components, 4, max_crossings) : random_braid_diagram(rng, 4, max_crossings);
    if (d.num_crossings() < order) continue;
    std::vector<int> cs(static_cast<std::size_t>(d.num_crossings()));
    for (int i = 0; i < d.num_crossings(); ++i) cs[static_cast<std::size_t>(i)] = i;
    std::shuffle(cs.begin(), cs.end(), rng);
    out.push_back({d, std::set<int>(cs.begin(), cs.begin() + order)});
  }
  return out;
}

BandSumScheme a2_witness_scheme() {
  // two of the three crossings of the trefoil changed: the knot unties
  const Diagram& t = catalog_diagram("trefoil");
  return {t, {hopf_recipe(t, 0), hopf_recipe(t, 1)}, 2};
}

BandSumScheme a3_witness_scheme() {
  const Diagram& w = catalog_diagram("whitehead");
  return {w, {hopf_recipe(w, 0), hopf_recipe(w, 1)}, 2};
}

SingularDiagram a2_singular_witness() { return {catalog_diagram("trefoil"), {0, 1}}; }

}  // namespace akmove
