#include "supertrop/core_order.hpp"

#include <fstream>
#include <numeric>

namespace supertrop {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::less: return "less";
    case Relation::equal: return "equal";
    case Relation::greater: return "greater";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

int FiniteSemiringTable::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw AlgebraError("no element named '" + name + "'");
  return static_cast<int>(it - names.begin());
}

void FiniteSemiringTable::validate() const {
  int n = size();
  if (n == 0) throw AlgebraError("empty carrier");
  auto in_range = [n](int i) { return i >= 0 && i < n; };
  if (!in_range(zero) || !in_range(one)) throw AlgebraError("zero/one index out of range");
  for (const auto* tab : {&add, &mul}) {
    const char* what = tab == &add ? "add" : "mul";
    if (static_cast<int>(tab->size()) != n)
      throw AlgebraError(std::string(what) + " table has " + std::to_string(tab->size()) + " rows, expected " +
                         std::to_string(n));
    for (const auto& row : *tab) {
      if (static_cast<int>(row.size()) != n) throw AlgebraError(std::string(what) + " table is not square");
      for (int v : row)
        if (!in_range(v)) throw AlgebraError(std::string(what) + " table entry out of range");
    }
  }
}

FiniteSemiringTable table_from_json(const nlohmann::json& j) {
  FiniteSemiringTable t;
  try {
    t.names = j.at("names").get<std::vector<std::string>>();
    t.zero = j.at("zero").get<int>();
    t.one = j.at("one").get<int>();
    t.add = j.at("add").get<std::vector<std::vector<int>>>();
    t.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed table document: ") + e.what());
  }
  t.validate();
  return t;
}

nlohmann::json to_json(const FiniteSemiringTable& t) {
  return {{"names", t.names}, {"zero", t.zero}, {"one", t.one}, {"add", t.add}, {"mul", t.mul}};
}

FiniteSemiringTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return table_from_json(nlohmann::json::parse(in));
}

Semiring<int> as_semiring(const FiniteSemiringTable& t) {
  t.validate();
  Semiring<int> s;
  s.name = "table";
  s.zero = t.zero;
  s.one = t.one;
  auto add = t.add;
  auto mul = t.mul;
  auto names = t.names;
  s.add = [add](const int& a, const int& b) { return add[a][b]; };
  s.mul = [mul](const int& a, const int& b) { return mul[a][b]; };
  s.show = [names](const int& a) { return names[a]; };
  s.elements.resize(t.names.size());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Report check_semiring_axioms(const FiniteSemiringTable& t) {
  return check_semiring_axioms(as_semiring(t), CheckConfig{.exhaustive_triples = 4096});
}

Report check_bipotent(const FiniteSemiringTable& t) { return check_bipotent(as_semiring(t)); }

}  // namespace supertrop
