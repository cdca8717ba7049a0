#include "akmove/invariants.hpp"

#include <sstream>

#include "akmove/edits.hpp"

namespace akmove {

namespace {

void require_link(const Diagram& d) {
  if (!d.is_link()) throw Error(ErrorKind::Argument, "invariant needs a link diagram (graph vertices present)");
}

}  // namespace

int writhe(const Diagram& d) {
  require_link(d);
  int w = 0;
  for (int c = 0; c < d.num_crossings(); ++c) w += d.sign(c);
  return w;
}

int linking_number(const Diagram& d, int i, int j) {
  require_link(d);
  if (i < 0 || j < 0 || i >= d.num_components() || j >= d.num_components())
    throw Error(ErrorKind::Argument, "component out of range");
  if (i == j) throw Error(ErrorKind::Argument, "linking number needs two distinct components");
  int s = 0;
  for (int c = 0; c < d.num_crossings(); ++c) {
    int u = d.under_component(c), o = d.over_component(c);
    if ((u == i && o == j) || (u == j && o == i)) s += d.sign(c);
  }
  return s / 2;
}

std::vector<std::array<int, 3>> linking_numbers(const Diagram& d) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < d.num_components(); ++i)
    for (int j = i + 1; j < d.num_components(); ++j) out.push_back({i, j, linking_number(d, i, j)});
  return out;
}

std::int64_t conway_coeff(const Diagram& d, int n) { return conway(d).coeff(n); }

std::vector<std::int64_t> component_a2(const Diagram& d) {
  require_link(d);
  std::vector<std::int64_t> out;
  for (int i = 0; i < d.num_components(); ++i) out.push_back(conway_coeff(sublink(d, {i}), 2));
  return out;
}

int arf(const Diagram& d) {
  require_link(d);
  auto mod2 = [](std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); };
  if (d.num_components() == 1) return mod2(conway_coeff(d, 2));
  if (d.num_components() == 2) {
    if (linking_number(d, 0, 1) % 2 != 0) throw Error(ErrorKind::Argument, "Arf invariant needs a proper link (even linking numbers)");
    return mod2(conway_coeff(d, 3));
  }
  throw Error(ErrorKind::Argument, "Arf invariant is implemented for knots and 2-component links");
}

bool is_zero(const Value& v) {
  if (auto p = std::get_if<std::int64_t>(&v)) return *p == 0;
  if (auto p = std::get_if<LaurentPoly>(&v)) return p->is_zero();
  for (auto x : std::get<std::vector<std::int64_t>>(v))
    if (x != 0) return false;
  return true;
}

std::string to_string(const Value& v) {
  if (auto p = std::get_if<std::int64_t>(&v)) return std::to_string(*p);
  if (auto p = std::get_if<LaurentPoly>(&v)) return p->to_string();
  std::ostringstream os;
  os << "[";
  const auto& xs = std::get<std::vector<std::int64_t>>(v);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

InvariantDescriptor invariant(const std::string& name) {
  using T = InvariantDescriptor::Type;
  auto vec = [](const std::vector<std::array<int, 3>>& l) {
    std::vector<std::int64_t> out;
    for (auto& x : l) out.push_back(x[2]);
    return out;
  };
  if (name == "writhe") return {name, T::Integer, [](const Diagram& d) -> Value { return std::int64_t{writhe(d)}; }, std::nullopt};
  if (name == "lk") return {name, T::Integer, [](const Diagram& d) -> Value { return std::int64_t{linking_number(d, 0, 1)}; }, 1};
  if (name == "lk-vector") return {name, T::Vector, [vec](const Diagram& d) -> Value { return vec(linking_numbers(d)); }, 1};
  if (name == "conway") return {name, T::Polynomial, [](const Diagram& d) -> Value { return conway(d); }, std::nullopt};
  if (name == "a2") return {name, T::Integer, [](const Diagram& d) -> Value { return conway_coeff(d, 2); }, 2};
  if (name == "a3") return {name, T::Integer, [](const Diagram& d) -> Value { return conway_coeff(d, 3); }, 3};
  if (name == "a2-components") return {name, T::Vector, [](const Diagram& d) -> Value { return component_a2(d); }, 2};
  if (name == "arf") return {name, T::Integer, [](const Diagram& d) -> Value { return std::int64_t{arf(d)}; }, std::nullopt};
  throw Error(ErrorKind::Argument, "unknown invariant '" + name + "'");
}

std::vector<std::string> invariant_names() {
  return {"writhe", "lk", "lk-vector", "conway", "a2", "a3", "a2-components", "arf"};
}

Value evaluate_sum(const InvariantDescriptor& inv, const FormalSum& s) {
  using T = InvariantDescriptor::Type;
  if (inv.name == "arf")
    throw Error(ErrorKind::Argument, "invariant '" + inv.name + "' does not extend linearly here");
  Value acc;
  switch (inv.type) {
    case T::Integer: acc = std::int64_t{0}; break;
    case T::Polynomial: acc = LaurentPoly{}; break;
    case T::Vector: acc = std::vector<std::int64_t>{}; break;
  }
  for (const auto& t : s.terms()) {
    Value v = inv.evaluate(t.diagram);
    if (v.index() != acc.index()) throw Error(ErrorKind::Argument, "value type mismatch in formal sum");
    if (auto a = std::get_if<std::int64_t>(&acc)) {
      *a += t.coefficient * std::get<std::int64_t>(v);
    } else if (auto p = std::get_if<LaurentPoly>(&acc)) {
      *p += std::get<LaurentPoly>(v) * t.coefficient;
    } else {
      auto& av = std::get<std::vector<std::int64_t>>(acc);
      const auto& vv = std::get<std::vector<std::int64_t>>(v);
      if (av.empty()) av.assign(vv.size(), 0);
      if (av.size() != vv.size()) throw Error(ErrorKind::Argument, "vector length mismatch in formal sum");
      for (std::size_t i = 0; i < vv.size(); ++i) av[i] += t.coefficient * vv[i];
    }
  }
  return acc;
}

Value evaluate_singular(const InvariantDescriptor& inv, const SingularDiagram& sd) {
  return evaluate_sum(inv, resolve(sd));
}

}  // namespace akmove
