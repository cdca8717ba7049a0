#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "akmove/band.hpp"
#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/invariants.hpp"
#include "akmove/lab.hpp"
#include "akmove/moves.hpp"
#include "akmove/pd_io.hpp"
#include "akmove/reidemeister.hpp"
#include "akmove/rules.hpp"

using namespace akmove;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultNodeBudget;
  std::string out;
  std::string pd;
  std::string site;
  std::string spec;
  std::string experiment;
  std::vector<std::string> names;
  std::string invariant;
  int k = 0, n = -1, count = 0, order = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Argument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "catalog:NAME" or a PD file.
Diagram load(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return catalog_diagram(ref.substr(8));
  return parse_pd(read_file(ref));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("bad JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::Syntax, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::Syntax, std::string("field '") + key + "' has the wrong type");
  }
}

// Sites count arcs and crossings from 1.
int arc_of(const json& j, const char* key) { return field<int>(j, key) - 1; }

Side side_of(const json& j, const char* key) {
  std::string s = j.contains(key) ? field<std::string>(j, key) : "L";
  if (s == "L" || s == "left") return Side::Left;
  if (s == "R" || s == "right") return Side::Right;
  throw Error(ErrorKind::Syntax, "side must be \"L\" or \"R\"");
}

std::vector<int> index_list(const json& j, const char* key) {
  std::vector<int> v = field<std::vector<int>>(j, key);
  for (int& x : v) --x;
  return v;
}

template <std::size_t N>
std::array<int, N> index_array(const json& j, const char* key) {
  std::vector<int> v = index_list(j, key);
  if (v.size() != N) throw Error(ErrorKind::Syntax, std::string("field '") + key + "' needs " + std::to_string(N) + " entries");
  std::array<int, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

json ones(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

BandRoute parse_route(const json& j) {
  BandRoute r;
  r.foot = arc_of(j, "foot");
  r.attach_side = side_of(j, "side");
  if (j.contains("at")) r.at = field<double>(j, "at");
  if (j.contains("passes"))
    for (const auto& p : j.at("passes")) r.passes.push_back({arc_of(p, "arc"), p.contains("over") ? field<bool>(p, "over") : true, side_of(p, "side")});
  return r;
}

Attachment parse_attachment(const Diagram& d, const json& j) {
  if (j.contains("recipe")) {
    if (field<std::string>(j, "recipe") != "hopf") throw Error(ErrorKind::Syntax, "the only recipe is \"hopf\"");
    return hopf_recipe(d, field<int>(j, "crossing") - 1);
  }
  Attachment a{model(field<std::string>(j, "model")), {}};
  for (const auto& r : field<json>(j, "routes")) a.routes.push_back(parse_route(r));
  return a;
}

std::vector<Attachment> parse_attachments(const Diagram& d, const json& j) {
  std::vector<Attachment> out;
  if (j.contains("attachments")) {
    for (const auto& a : j.at("attachments")) out.push_back(parse_attachment(d, a));
  } else if (j.contains("model") || j.contains("recipe")) {
    out.push_back(parse_attachment(d, j));
  }
  return out;
}

Diagram load_base(const json& j) {
  json b = field<json>(j, "base");
  if (b.is_string()) return catalog_diagram(b.get<std::string>());
  if (b.contains("catalog")) return catalog_diagram(field<std::string>(b, "catalog"));
  if (b.contains("pd")) return parse_pd(field<std::string>(b, "pd"));
  if (b.contains("file")) return parse_pd(read_file(field<std::string>(b, "file")));
  throw Error(ErrorKind::Syntax, "base needs \"catalog\", \"pd\" or \"file\"");
}

void merge(json& dst, const json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

json conway_json(const LaurentPoly& p) {
  json a = json::array();
  for (auto c : p.coefficients()) a.push_back(c);
  return a;
}

json diagram_json(const Diagram& d) {
  json j;
  j["pd"] = serialize_pd(d);
  j["code"] = canonical_code(d).to_string();
  j["crossings"] = d.num_crossings();
  j["components"] = d.num_components();
  j["vertices"] = d.num_vertices();
  return j;
}

json invariants_json(const Diagram& d, const std::vector<std::string>& names) {
  json j;
  if (!d.is_link()) {
    CycleReport r = cycle_invariants(d);
    json knots = json::array(), pairs = json::array();
    for (const auto& k : r.knots) knots.push_back({{"edges", ones(k.edges)}, {"a2", k.a2}});
    for (const auto& p : r.pairs) pairs.push_back({{"first", ones(p.first)}, {"second", ones(p.second)}, {"lk", p.lk}});
    j["cycles"] = knots;
    j["cycle_pairs"] = pairs;
    return j;
  }
  std::vector<std::string> want = names.empty() ? std::vector<std::string>{"writhe", "lk-vector", "conway", "a2", "a3", "a2-components", "arf"} : names;
  for (const auto& name : want) {
    InvariantDescriptor inv = invariant(name);
    if (name == "lk-vector") {
      json a = json::array();
      for (auto [i, k, v] : linking_numbers(d)) a.push_back({{"components", {i + 1, k + 1}}, {"lk", v}});
      j["lk"] = a;
      continue;
    }
    if (name == "conway") {
      LaurentPoly p = conway(d);
      j["conway"] = conway_json(p);
      j["conway_text"] = p.to_string();
      continue;
    }
    try {
      Value v = inv.evaluate(d);
      if (auto x = std::get_if<std::int64_t>(&v)) j[name] = *x;
      else j[name] = std::get<std::vector<std::int64_t>>(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Argument) throw;
      j[name] = nullptr;
      j[name + "_note"] = e.what();
    }
  }
  return j;
}

std::string render(const json& j, const Options& o) {
  if (o.format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    if (k == "schema") continue;
    os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return os.str();
}

json header(const std::string& command, const Options& o) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["seed"] = o.seed;
  return j;
}

json run_move(const Diagram& d, const json& site) {
  std::string kind = field<std::string>(site, "move");
  json j;
  j["move"] = kind;
  Diagram out;
  if (kind == "crossing_change") {
    int c = field<int>(site, "crossing") - 1;
    out = crossing_change(d, c);
    j["image"] = {{"crossing", c + 1}};
  } else if (kind == "delta") {
    auto arcs = index_array<3>(site, "arcs");
    out = delta_move(d, arcs);
    j["image"] = {{"arcs", ones({arcs.begin(), arcs.end()})}};
  } else if (kind == "clasp_pass") {
    ClaspSite s{index_array<2>(site, "clasp"), index_array<2>(site, "band")};
    ClaspResult r = clasp_pass(d, s);
    out = r.diagram;
    j["image"] = {{"clasp", ones({r.image.clasp.begin(), r.image.clasp.end()})},
                  {"band", ones({r.image.band.begin(), r.image.band.end()})}};
  } else if (kind == "rule") {
    RuleResult r = apply_rule(d, rule_id(field<std::string>(site, "rule")), index_list(site, "crossings"));
    out = r.diagram;
    j["image"] = {{"crossings", ones(r.image)}};
  } else if (kind == "band_sum") {
    out = band_sum(d, parse_attachments(d, site));
  } else if (kind == "r1+") {
    out = r1_add(d, arc_of(site, "arc"), side_of(site, "side"), field<int>(site, "sign"));
  } else if (kind == "r1-") {
    out = r1_remove(d, field<int>(site, "crossing") - 1);
  } else if (kind == "r2+") {
    out = r2_add(d, arc_of(site, "arc"), side_of(site, "side"), arc_of(site, "arc2"), side_of(site, "side2"),
                 site.contains("over") ? field<bool>(site, "over") : true);
  } else if (kind == "r2-") {
    auto cs = index_array<2>(site, "crossings");
    out = r2_remove(d, cs[0], cs[1]);
  } else if (kind == "r3") {
    out = r3(d, index_array<3>(site, "arcs"));
  } else {
    throw Error(ErrorKind::Syntax, "unknown move '" + kind + "'");
  }
  j["result"] = diagram_json(out);
  return j;
}

LinkModel model_for_k(int k) {
  if (k == 2) return model("hopf");
  if (k == 3) return model("borromean");
  throw Error(ErrorKind::Argument, "random schemes support k = 2 (Hopf) and k = 3 (Borromean)");
}

// Returns the report; the experiment passed when pass is true.
ExperimentReport run_experiment(const Options& o) {
  Rng rng(o.seed);
  const std::string& e = o.experiment;
  std::string inv_name = o.invariant;
  ExperimentReport r;
  if (e == "whitehead") {
    r = whitehead_experiment();
  } else if (e == "group") {
    r = group_checks(catalog_knots());
  } else if (e == "theorem51") {
    int k = o.k ? o.k : 1;
    int count = o.count ? o.count : 10;
    r = theorem51_experiment(k, k == 1 ? delta_battery(rng, count) : clasp_battery(rng, count));
  } else if (e == "sensitivity") {
    // crossing changes between components must be caught by the k = 1 panel
    std::vector<MovePair> pairs;
    int count = o.count ? o.count : 10;
    while (static_cast<int>(pairs.size()) < count) {
      Diagram d = random_braid_link(rng, 2, 3, 6);
      for (int c = 0; c < d.num_crossings(); ++c)
        if (d.under_component(c) != d.over_component(c)) {
          pairs.push_back(crossing_change_pair(d, c));
          break;
        }
    }
    r = theorem51_experiment(1, pairs);
    r.name = "sensitivity";
    r.scope = "crossing changes between components; pass means every pair was told apart";
    r.pass = std::none_of(r.rows.begin(), r.rows.end(), [](const ReportRow& row) { return row.values.back().second == "yes"; });
  } else if (e == "finite-type" || e == "prop13") {
    int n = o.n >= 0 ? o.n : 1;
    int k = o.k ? o.k : (e == "prop13" ? 3 : 2);
    int count = o.count ? o.count : 25;
    if (inv_name.empty()) inv_name = e == "prop13" ? "a2" : "lk";
    InvariantDescriptor inv = invariant(inv_name);
    int components = inv_name == "lk" || inv_name == "lk-vector" ? 2 : 1;
    std::vector<BandSumScheme> schemes;
    for (int i = 0; i < count; ++i)
      schemes.push_back(random_scheme(rng, components, k == 2 ? 6 : 5, model_for_k(k), n + 1, k == 2 ? 3 : 2));
    r = prop13_experiment(inv, schemes);
    r.name = e;
  } else if (e == "order-nk") {
    if (o.spec.empty()) throw Error(ErrorKind::Argument, "order-nk needs --spec FILE");
    json spec = parse_json(read_file(o.spec));
    Diagram base = load_base(spec);
    BandSumScheme s{base, parse_attachments(base, spec), spec.contains("k") ? field<int>(spec, "k") : 2};
    r = order_nk_test(invariant(inv_name.empty() ? field<std::string>(spec, "invariant") : inv_name), s);
  } else if (e == "witness") {
    if (inv_name.empty()) inv_name = "a2";
    BandSumScheme s = inv_name == "a3" ? a3_witness_scheme() : a2_witness_scheme();
    if (inv_name != "a2" && inv_name != "a3") throw Error(ErrorKind::Argument, "witnesses are recorded for a2 and a3");
    r = order_nk_test(invariant(inv_name), s);
    r.name = "witness";
    r.scope = inv_name + " is not of order (1;2): the recorded scheme must leave a nonzero residual";
    r.pass = !r.pass;
  } else if (e == "vassiliev") {
    if (inv_name.empty()) inv_name = "a2";
    int order = o.order ? o.order : 3;
    r = vassiliev_order_test(invariant(inv_name), singular_battery(rng, o.count ? o.count : 20, order, 8, inv_name.rfind("lk", 0) == 0 ? 2 : 0));
  } else {
    throw Error(ErrorKind::Argument, "unknown experiment '" + e + "'");
  }
  r.seed = o.seed;
  return r;
}

json catalog_json() {
  json j;
  json ds = json::array();
  for (const auto& e : diagram_catalog()) {
    json x;
    x["name"] = e.name;
    x["description"] = e.description;
    merge(x, diagram_json(e.diagram));
    ds.push_back(x);
  }
  json ms = json::array();
  for (const auto& m : model_catalog())
    ms.push_back({{"name", m.name}, {"type", m.type_index}, {"feet", ones(m.feet)}, {"components", m.component_count()},
                  {"code", canonical_code(m.diagram).to_string()}});
  json rs = json::array();
  for (const auto& n : rule_names()) rs.push_back(n);
  j["diagrams"] = ds;
  j["models"] = ms;
  j["rules"] = rs;
  return j;
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"akmove: local moves, band sums and finite type invariants of link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for random batteries");
  app.add_option("--budget", o.budget, "skein node budget")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "write the report here instead of stdout");

  auto* validate = app.add_subcommand("validate", "parse and validate a PD file");
  validate->add_option("--pd", o.pd, "PD file or catalog:NAME")->required();
  auto* inv = app.add_subcommand("invariant", "compute invariants");
  inv->add_option("--pd", o.pd, "PD file or catalog:NAME")->required();
  inv->add_option("--name", o.names, "invariants to compute (default: all)");
  auto* move = app.add_subcommand("move", "apply a move described by a site file");
  move->add_option("--pd", o.pd, "PD file or catalog:NAME")->required();
  move->add_option("--site", o.site, "JSON site file")->required();
  auto* exp = app.add_subcommand("experiment", "run an experiment");
  exp->add_option("name", o.experiment,
                  "whitehead, group, theorem51, sensitivity, finite-type, prop13, order-nk, witness, vassiliev")
      ->required();
  exp->add_option("--k", o.k, "move or scheme level");
  exp->add_option("--n", o.n, "scheme order n (n+1 attachments)");
  exp->add_option("--count", o.count, "battery size");
  exp->add_option("--order", o.order, "double points per singular diagram");
  exp->add_option("--invariant", o.invariant, "invariant name");
  exp->add_option("--spec", o.spec, "JSON experiment spec (order-nk)");
  auto* cat = app.add_subcommand("catalog", "list built-in diagrams, link models and rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  int status = 0;
  try {
    set_node_budget(o.budget);
    json j;
    if (validate->parsed()) {
      j = header("validate", o);
      Diagram d = load(o.pd);
      j["valid"] = true;
      merge(j, diagram_json(d));
    } else if (inv->parsed()) {
      j = header("invariant", o);
      Diagram d = load(o.pd);
      j["diagram"] = diagram_json(d);
      merge(j, invariants_json(d, o.names));
    } else if (move->parsed()) {
      j = header("move", o);
      Diagram d = load(o.pd);
      merge(j, run_move(d, parse_json(read_file(o.site))));
    } else if (exp->parsed()) {
      ExperimentReport r = run_experiment(o);
      text = o.format == "json" ? r.to_json() : r.to_text();
      status = r.pass ? 0 : 1;
    } else if (cat->parsed()) {
      j = header("catalog", o);
      merge(j, catalog_json());
    }
    if (text.empty()) text = render(j, o);
  } catch (const Error& e) {
    json j = header("error", o);
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    text = render(j, o);
    status = 2;
  }
  if (o.out.empty()) {
    (status == 2 ? std::cerr : std::cout) << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}
