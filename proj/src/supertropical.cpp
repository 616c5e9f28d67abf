#include "supertrop/supertropical.hpp"

#include <fstream>

namespace supertrop {

FiniteSupertropical FiniteSupertropical::from_table(FiniteSemiringTable t) {
  t.validate();
  FiniteSupertropical u;
  u.e = t.add[t.one][t.one];
  u.nu.resize(t.size());
  for (int x = 0; x < t.size(); ++x) u.nu[x] = t.mul[u.e][x];
  u.table = std::move(t);
  return u;
}

FiniteSupertropical supertropical_from_json(const nlohmann::json& j) {
  auto u = FiniteSupertropical::from_table(table_from_json(j));
  try {
    if (j.contains("e")) {
      const auto& e = j.at("e");
      u.declared_e = e.is_string() ? u.table.index_of(e.get<std::string>()) : e.get<int>();
    }
    if (j.contains("nu")) u.declared_nu = j.at("nu").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& ex) {
    throw AlgebraError(std::string("malformed e/nu fields: ") + ex.what());
  }
  return u;
}

nlohmann::json to_json(const FiniteSupertropical& u) {
  auto j = to_json(u.table);
  j["e"] = u.e;
  j["nu"] = u.nu;
  return j;
}

FiniteSupertropical load_supertropical(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return supertropical_from_json(nlohmann::json::parse(in));
}

Report check_supertropical_axioms(const FiniteSupertropical& u) {
  auto r = check_supertropical_axioms(u.semiring());
  if (u.declared_e || u.declared_nu) r.checked.push_back("declared e/nu");
  if (u.declared_e && *u.declared_e != u.e)
    r.fail("declared e/nu", {"e"}, "declared " + std::to_string(*u.declared_e) + ", computed " + std::to_string(u.e));
  if (u.declared_nu && *u.declared_nu != u.nu) r.fail("declared e/nu", {"nu"}, "declared ghost map differs from e*x");
  return r;
}

Report check_supertropical_axioms(const FiniteSemiringTable& t) {
  return check_supertropical_axioms(FiniteSupertropical::from_table(t));
}

std::vector<std::vector<int>> rebuild_addition(const FiniteSupertropical& u) {
  auto s = u.semiring();
  const auto& add = u.table.add;
  // Order of eU as a bipotent semiring; only ghost-ideal entries of the stored table are read.
  auto ghost_leq = [&](int x, int y) { return add[x][y] == y; };
  int n = u.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a][b] = st_add_rule(s, a, b, ghost_leq);
  return out;
}

Report tangible_closed_check(const FiniteSupertropical& u) { return tangible_closed_check(u.semiring()); }

FiniteSemiringTable restrict_table(const FiniteSemiringTable& t, const std::vector<int>& subset) {
  std::vector<int> pos(t.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  auto at = [&](int x) {
    if (pos[x] < 0) throw AlgebraError("subset not closed at " + t.names[x]);
    return pos[x];
  };
  FiniteSemiringTable r;
  for (int x : subset) r.names.push_back(t.names[x]);
  r.zero = at(t.zero);
  r.one = at(t.one);
  auto n = subset.size();
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.add[i][j] = at(t.add[subset[i]][subset[j]]);
      r.mul[i][j] = at(t.mul[subset[i]][subset[j]]);
    }
  return r;
}

FiniteSemiringTable ghost_ideal(const FiniteSupertropical& u) {
  std::vector<int> sub;
  for (int x = 0; x < u.size(); ++x)
    if (u.nu[x] == x) sub.push_back(x);
  auto t = u.table;
  t.one = u.e;
  return restrict_table(t, sub);
}

std::vector<std::vector<int>> subsemirings(const FiniteSemiringTable& t) {
  int n = t.size();
  if (n > 16) throw AlgebraError("subsemiring enumeration limited to 16 elements");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> t.zero & 1) || !(mask >> t.one & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        closed = (mask >> t.add[a][b] & 1) && (mask >> t.mul[a][b] & 1);
      }
    }
    if (!closed) continue;
    std::vector<int> sub;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) sub.push_back(a);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace supertrop
