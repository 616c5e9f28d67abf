#include "supertrop/equiv_lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace supertrop {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool contains(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

}  // namespace

Partition::Partition(std::vector<int> labels) : label_(std::move(labels)) {
  std::map<int, int> renum;
  for (int& l : label_) {
    auto [it, fresh] = renum.emplace(l, static_cast<int>(renum.size()));
    l = it->second;
  }
}

Partition Partition::diagonal(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  return Partition(std::move(l));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  UnionFind uf(n);
  for (const auto& b : blocks)
    for (int x : b) {
      if (x < 0 || x >= n) throw std::out_of_range("partition block element out of range");
      uf.unite(x, b.front());
    }
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = uf.find(i);
  return Partition(std::move(l));
}

int Partition::block_count() const {
  return label_.empty() ? 0 : *std::max_element(label_.begin(), label_.end()) + 1;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> b(block_count());
  for (int i = 0; i < size(); ++i) b[label_[i]].push_back(i);
  return b;
}

bool Partition::refines(const Partition& coarser) const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (same(i, j) && !coarser.same(i, j)) return false;
  return true;
}

Partition meet(const Partition& a, const Partition& b) {
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> l(a.size());
  for (int i = 0; i < a.size(); ++i)
    l[i] = ids.emplace(std::make_pair(a.block_of(i), b.block_of(i)), static_cast<int>(ids.size())).first->second;
  return Partition(std::move(l));
}

Partition join(const Partition& a, const Partition& b) {
  UnionFind uf(a.size());
  for (const auto* p : {&a, &b})
    for (const auto& blk : p->blocks())
      for (int x : blk) uf.unite(x, blk.front());
  std::vector<int> l(a.size());
  for (int i = 0; i < a.size(); ++i) l[i] = uf.find(i);
  return Partition(std::move(l));
}

namespace {

std::vector<std::vector<std::string>> named_blocks(const Partition& p, const FiniteSupertropical& u) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : p.blocks()) {
    std::vector<std::string> names;
    for (int x : b) names.push_back(u.name(x));
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string block_name(const std::vector<int>& block, const FiniteSupertropical& u) {
  if (block.size() == 1) return u.name(block.front());
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? "," : "") + u.name(block[i]);
  return s + "}";
}

}  // namespace

std::string to_string(const Partition& p, const FiniteSupertropical& u) {
  std::string s;
  for (const auto& b : named_blocks(p, u)) {
    if (!s.empty()) s += " ";
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i];
    s += "}";
  }
  return s;
}

nlohmann::json to_json(const Partition& p, const FiniteSupertropical& u) { return named_blocks(p, u); }

Partition partition_from_json(const nlohmann::json& j, const FiniteSupertropical& u) {
  if (!j.contains("blocks") || !j["blocks"].is_array()) throw AlgebraError("partition json needs a \"blocks\" array");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j["blocks"]) {
    std::vector<int> block;
    for (const auto& name : b) {
      block.push_back(u.table.index_of(name.get<std::string>()));
    }
    blocks.push_back(std::move(block));
  }
  std::vector<int> seen(u.size(), 0);
  for (const auto& b : blocks)
    for (int x : b)
      if (seen[x]++) throw AlgebraError("element listed twice in partition: " + u.name(x));
  return Partition::from_blocks(u.size(), blocks);
}

Partition load_partition(const std::string& path, const FiniteSupertropical& u) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return partition_from_json(nlohmann::json::parse(in), u);
}

Report check_mfce(const FiniteSupertropical& u, const Partition& p) {
  Report r;
  r.subject = "MFCE " + to_string(p, u);
  r.checked = {"fiber conserving", "multiplicative"};
  if (p.size() != u.size()) throw std::invalid_argument("partition size does not match the carrier");
  int n = u.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!p.same(x, y)) continue;
      if (u.nu[x] != u.nu[y]) r.fail("fiber conserving", {u.name(x), u.name(y)});
      for (int z = 0; z < n; ++z)
        if (!p.same(u.table.mul[x][z], u.table.mul[y][z]))
          r.fail("multiplicative", {u.name(x), u.name(y), u.name(z)});
    }
  r.note_coverage(CheckMode::exhaustive, static_cast<std::size_t>(n) * n * n);
  return r;
}

bool is_multiplicative(const FiniteSupertropical& u, const Partition& p) {
  int n = u.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (p.same(x, y))
        for (int z = 0; z < n; ++z)
          if (!p.same(u.table.mul[x][z], u.table.mul[y][z])) return false;
  return true;
}

Quotient quotient(const FiniteSupertropical& u, const Partition& e) {
  auto r = check_mfce(u, e);
  if (!r.ok()) throw AlgebraError("not an MFCE relation: " + r.witnesses.front().rule, r);
  auto blocks = e.blocks();
  int k = static_cast<int>(blocks.size());
  FiniteSemiringTable t;
  for (const auto& b : blocks) t.names.push_back(block_name(b, u));
  t.zero = e.block_of(u.table.zero);
  t.one = e.block_of(u.table.one);
  t.add.assign(k, std::vector<int>(k));
  t.mul.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int x = blocks[i].front(), y = blocks[j].front();
      t.add[i][j] = e.block_of(u.table.add[x][y]);
      t.mul[i][j] = e.block_of(u.table.mul[x][y]);
    }
  return {FiniteSupertropical::from_table(std::move(t)), e.labels()};
}

Partition e_nu(const FiniteSupertropical& u) { return Partition(u.nu); }

Partition e_t(const FiniteSupertropical& u) {
  std::vector<int> l(u.size());
  for (int x = 0; x < u.size(); ++x) l[x] = u.is_tangible(x) ? u.nu[x] : u.size() + x;
  Partition p(std::move(l));
  auto r = check_mfce(u, p);
  if (!r.ok()) throw AlgebraError("E_t is not multiplicative on this semiring", r);
  return p;
}

std::vector<int> ghost_elements(const FiniteSupertropical& u) {
  std::vector<int> out;
  for (int x = 0; x < u.size(); ++x)
    if (u.nu[x] == x) out.push_back(x);
  return out;
}

std::vector<int> tangible_elements(const FiniteSupertropical& u) {
  std::vector<int> out;
  for (int x = 0; x < u.size(); ++x)
    if (u.is_tangible(x)) out.push_back(x);
  return out;
}

Partition e_L(const FiniteSupertropical& u, const std::vector<int>& l) {
  Report r;
  r.subject = "E(L)";
  r.checked = {"L in eU", "complement absorbing"};
  const int zero = u.table.zero;
  auto ghosts = ghost_elements(u);
  for (int x : l)
    if (!contains(ghosts, x)) r.fail("L in eU", {u.name(x)});
  auto outside = [&](int m) { return m == zero || !contains(l, m); };
  for (int x : ghosts)
    for (int y : ghosts)
      if (outside(y) && !outside(u.table.mul[x][y])) r.fail("complement absorbing", {u.name(x), u.name(y)});
  if (!r.ok()) throw AlgebraError("L violates M(M\\L) in M\\L", r);
  std::vector<int> lab(u.size());
  for (int x = 0; x < u.size(); ++x) lab[x] = outside(u.nu[x]) ? u.nu[x] : u.size() + x;
  return Partition(std::move(lab));
}

std::vector<int> s_of(const FiniteSupertropical& u) {
  auto tan = tangible_elements(u);
  std::vector<int> out;
  for (int x = 0; x < u.size(); ++x)
    if (std::all_of(tan.begin(), tan.end(), [&](int t) { return u.is_tangible(u.table.mul[x][t]); })) out.push_back(x);
  return out;
}

std::vector<int> s_e(const FiniteSupertropical& u) {
  std::vector<int> out;
  for (int x : s_of(u))
    if (u.nu[x] == u.e) out.push_back(x);
  return out;
}

std::vector<int> t_e(const FiniteSupertropical& u) {
  std::vector<int> out;
  for (int x : tangible_elements(u))
    if (u.nu[x] == u.e) out.push_back(x);
  return out;
}

std::vector<int> submonoid_generated(const FiniteSupertropical& u, const std::vector<int>& gens) {
  std::set<int> s{u.table.one};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) grew |= s.insert(u.table.mul[a][b]).second;
  }
  return {s.begin(), s.end()};
}

Partition partition_of(const std::vector<std::vector<bool>>& rel) {
  int n = static_cast<int>(rel.size());
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) uf.unite(i, j);
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = uf.find(i);
  return Partition(std::move(l));
}

Partition orbital(const FiniteSupertropical& u, const std::vector<int>& g) {
  std::vector<int> pts(u.size());
  std::iota(pts.begin(), pts.end(), 0);
  auto rel = orbit_relation(pts, g, [&](int a, int b) { return u.table.mul[a][b]; });
  return partition_of(rel);
}

std::vector<int> saturate(const FiniteSupertropical& u, const std::vector<int>& g) {
  std::vector<int> out;
  for (int x : s_of(u))
    if (std::any_of(g.begin(), g.end(), [&](int h) { return contains(g, u.table.mul[h][x]); })) out.push_back(x);
  return out;
}

std::vector<int> g_of(const FiniteSupertropical& u, const Partition& e) {
  std::vector<int> out;
  for (int x : s_of(u))
    if (e.same(x, u.table.one)) out.push_back(x);
  return out;
}

std::vector<Partition> enumerate_mfce(const FiniteSupertropical& u, int bound) {
  if (u.size() > bound)
    throw BoundExceeded("carrier has " + std::to_string(u.size()) + " elements, bound is " + std::to_string(bound));
  std::map<int, std::vector<int>> fibers;
  for (int x = 0; x < u.size(); ++x) fibers[u.nu[x]].push_back(x);
  std::vector<std::vector<int>> fib;
  for (auto& [m, xs] : fibers) fib.push_back(xs);

  std::vector<Partition> out;
  std::vector<int> label(u.size(), -1);
  int next = 0;
  // restricted growth labelling, fiber after fiber
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t f, std::size_t i, int first) {
    if (f == fib.size()) {
      Partition p(label);
      if (is_multiplicative(u, p)) out.push_back(std::move(p));
      return;
    }
    if (i == fib[f].size()) {
      rec(f + 1, 0, next);
      return;
    }
    int x = fib[f][i];
    for (int l = first; l <= next; ++l) {
      label[x] = l;
      bool fresh = l == next;
      if (fresh) ++next;
      rec(f, i + 1, first);
      if (fresh) --next;
    }
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> subgroups_of(const FiniteSupertropical& u, const std::vector<int>& group) {
  std::vector<int> rest;
  for (int x : group)
    if (x != u.table.one) rest.push_back(x);
  if (rest.size() > 20) throw BoundExceeded("group too large for subset enumeration");
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << rest.size()); ++mask) {
    std::vector<int> s{u.table.one};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) s.push_back(rest[i]);
    bool closed = true;
    for (int a : s)
      for (int b : s) closed = closed && contains(s, u.table.mul[a][b]);
    if (closed) {
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool tangibles_form_group(const FiniteSupertropical& u) {
  auto tan = tangible_elements(u);
  if (!contains(tan, u.table.one)) return false;
  for (int a : tan) {
    bool inv = false;
    for (int b : tan) {
      int ab = u.table.mul[a][b];
      if (!u.is_tangible(ab) && ab != u.table.one) return false;
      if (!contains(tan, ab)) return false;
      inv = inv || ab == u.table.one;
    }
    if (!inv) return false;
  }
  return true;
}

CovLattice cov_lattice(const FiniteSupertropical& u, int bound) {
  CovLattice c;
  c.elements = enumerate_mfce(u, bound);
  int n = static_cast<int>(c.elements.size());
  c.above.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.above[i][j] = c.elements[i].refines(c.elements[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !c.above[i][j]) continue;
      bool covers = true;
      for (int k = 0; k < n && covers; ++k)
        if (k != i && k != j && c.above[i][k] && c.above[k][j]) covers = false;
      if (covers) c.hasse.emplace_back(i, j);
    }
  auto diag = Partition::diagonal(u.size());
  auto ghost = e_nu(u);
  for (int i = 0; i < n; ++i) {
    if (c.elements[i] == diag) c.top = i;
    if (c.elements[i] == ghost) c.bottom = i;
  }
  return c;
}

int CovLattice::height() const {
  int n = static_cast<int>(elements.size());
  std::vector<int> depth(n, -1);
  std::function<int(int)> longest = [&](int i) {
    if (depth[i] >= 0) return depth[i];
    int d = 0;
    for (auto [a, b] : hasse)
      if (a == i) d = std::max(d, 1 + longest(b));
    return depth[i] = d;
  };
  return n ? longest(top) : 0;
}

std::string CovLattice::dot(const FiniteSupertropical& u) const {
  std::string s = "digraph Cov {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::string label;
    if (static_cast<int>(i) == top && top == bottom) label = "phi_v = v";
    else if (static_cast<int>(i) == top) label = "phi_v";
    else if (static_cast<int>(i) == bottom) label = "v";
    else label = "phi_v/" + to_string(elements[i], u);
    s += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : hasse) s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

nlohmann::json CovLattice::to_json(const FiniteSupertropical& u) const {
  nlohmann::json j;
  j["size"] = elements.size();
  j["top"] = top;
  j["bottom"] = bottom;
  j["height"] = height();
  auto& parts = j["partitions"] = nlohmann::json::array();
  for (const auto& p : elements) parts.push_back(supertrop::to_json(p, u));
  auto& edges = j["hasse"] = nlohmann::json::array();
  for (auto [a, b] : hasse) edges.push_back({a, b});
  return j;
}

nlohmann::json orbital_meet_data(const FiniteSupertropical& u) {
  auto s = s_of(u);
  std::vector<int> rest;
  for (int x : s)
    if (x != u.table.one) rest.push_back(x);
  nlohmann::json j;
  if (rest.size() > 12) {
    j["skipped"] = "S(U) too large";
    return j;
  }
  std::set<std::vector<int>> submonoids;
  for (unsigned long mask = 0; mask < (1ul << rest.size()); ++mask) {
    std::vector<int> g{u.table.one};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1) g.push_back(rest[i]);
    submonoids.insert(submonoid_generated(u, g));
  }
  std::vector<Partition> orb;
  for (const auto& g : submonoids) {
    auto p = orbital(u, g);
    if (std::find(orb.begin(), orb.end(), p) == orb.end()) orb.push_back(p);
  }
  std::size_t pairs = 0, closed = 0;
  auto& misses = j["non_orbital_meets"] = nlohmann::json::array();
  for (std::size_t a = 0; a < orb.size(); ++a)
    for (std::size_t b = a + 1; b < orb.size(); ++b) {
      ++pairs;
      auto m = meet(orb[a], orb[b]);
      if (std::find(orb.begin(), orb.end(), m) != orb.end()) ++closed;
      else misses.push_back({to_string(orb[a], u), to_string(orb[b], u)});
    }
  j["orbital_relations"] = orb.size();
  j["pairs"] = pairs;
  j["meet_orbital"] = closed;
  return j;
}

Supervaluation<int, int> FiniteCover::superval() const {
  Supervaluation<int, int> s;
  s.name = name;
  s.domain = domain;
  s.target = target.semiring();
  auto img = image;
  s.map = [img](int a) { return img.at(a); };
  return s;
}

FiniteCover identity_cover(const FiniteSupertropical& u) {
  FiniteCover c;
  c.name = "id";
  c.domain = u.semiring();
  c.target = u;
  c.image.resize(u.size());
  std::iota(c.image.begin(), c.image.end(), 0);
  c.ghost_of = ghost_elements(u);
  return c;
}

FiniteCover quotient_cover(const FiniteCover& c, const Partition& e) {
  auto q = quotient(c.target, e);
  FiniteCover out;
  out.name = c.name + "/" + to_string(e, c.target);
  out.domain = c.domain;
  out.target = q.u;
  for (int x : c.image) out.image.push_back(q.projection[x]);
  for (int m : c.ghost_of) out.ghost_of.push_back(q.projection[m]);
  return out;
}

FiniteCover sup_cover(const std::vector<FiniteCover>& covers, nlohmann::json* info) {
  if (covers.empty()) throw std::invalid_argument("sup_cover of an empty family");
  const std::size_t k = covers.size();
  const std::size_t msize = covers.front().ghost_of.size();
  for (const auto& c : covers)
    if (c.ghost_of.size() != msize || c.image.size() != covers.front().image.size())
      throw std::invalid_argument("covers do not share a domain and ghost semiring");
  using Tuple = std::vector<int>;
  // equalized product: tuples whose ghost images all equal the image of one m ∈ M
  std::vector<Tuple> full;
  for (std::size_t m = 0; m < msize; ++m) {
    std::vector<std::vector<int>> fibers(k);
    for (std::size_t i = 0; i < k; ++i)
      for (int x = 0; x < covers[i].target.size(); ++x)
        if (covers[i].target.nu[x] == covers[i].ghost_of[m]) fibers[i].push_back(x);
    Tuple t(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == k) {
        full.push_back(t);
        return;
      }
      for (int x : fibers[i]) {
        t[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
  }
  auto op = [&](const Tuple& a, const Tuple& b, bool mul) {
    Tuple r(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& tb = covers[i].target.table;
      r[i] = mul ? tb.mul[a[i]][b[i]] : tb.add[a[i]][b[i]];
    }
    return r;
  };
  std::vector<Tuple> gen;
  auto add_gen = [&](const Tuple& t) {
    if (std::find(gen.begin(), gen.end(), t) == gen.end()) gen.push_back(t);
  };
  const std::size_t n = covers.front().image.size();
  for (std::size_t a = 0; a < n; ++a) {
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = covers[i].image[a];
    add_gen(t);
  }
  for (std::size_t m = 0; m < msize; ++m) {
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = covers[i].ghost_of[m];
    add_gen(t);
  }
  for (bool grew = true; grew;) {
    grew = false;
    auto cur = gen;
    for (const auto& a : cur)
      for (const auto& b : cur)
        for (bool mul : {false, true}) {
          Tuple r = op(a, b, mul);
          if (std::find(gen.begin(), gen.end(), r) == gen.end()) {
            gen.push_back(r);
            grew = true;
          }
        }
  }
  for (const auto& t : gen)
    if (std::find(full.begin(), full.end(), t) == full.end())
      throw AlgebraError("generated tuple leaves the equalized product");
  std::sort(gen.begin(), gen.end());
  auto idx = [&](const Tuple& t) { return static_cast<int>(std::find(gen.begin(), gen.end(), t) - gen.begin()); };
  FiniteSemiringTable tb;
  for (const auto& t : gen) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + covers[i].target.name(t[i]);
    tb.names.push_back(s + ")");
  }
  Tuple z(k), o(k);
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = covers[i].target.table.zero;
    o[i] = covers[i].target.table.one;
  }
  tb.zero = idx(z);
  tb.one = idx(o);
  const int g = static_cast<int>(gen.size());
  tb.add.assign(g, std::vector<int>(g));
  tb.mul.assign(g, std::vector<int>(g));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      tb.add[a][b] = idx(op(gen[a], gen[b], false));
      tb.mul[a][b] = idx(op(gen[a], gen[b], true));
    }
  FiniteCover out;
  out.name = "sup";
  out.domain = covers.front().domain;
  out.target = FiniteSupertropical::from_table(std::move(tb));
  for (std::size_t a = 0; a < n; ++a) {
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = covers[i].image[a];
    out.image.push_back(idx(t));
  }
  for (std::size_t m = 0; m < msize; ++m) {
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = covers[i].ghost_of[m];
    out.ghost_of.push_back(idx(t));
  }
  if (info) {
    (*info)["equalized_product_size"] = full.size();
    (*info)["generated_size"] = gen.size();
  }
  return out;
}

Report isomorphic_over_M(const FiniteCover& a, const FiniteCover& b) {
  Report r;
  r.subject = a.name + " ~= " + b.name;
  r.checked = {"same shape", "well defined", "bijective", "additive", "multiplicative"};
  if (a.image.size() != b.image.size() || a.ghost_of.size() != b.ghost_of.size() ||
      a.target.size() != b.target.size()) {
    r.fail("same shape", {std::to_string(a.target.size()), std::to_string(b.target.size())});
    return r;
  }
  const int n = a.target.size();
  std::vector<int> sigma(n, -1);
  auto put = [&](int x, int y) {
    if (sigma[x] == -1) sigma[x] = y;
    else if (sigma[x] != y) r.fail("well defined", {a.target.name(x)}, b.target.name(sigma[x]) + " vs " + b.target.name(y));
  };
  for (std::size_t i = 0; i < a.image.size(); ++i) put(a.image[i], b.image[i]);
  for (std::size_t m = 0; m < a.ghost_of.size(); ++m) put(a.ghost_of[m], b.ghost_of[m]);
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    if (sigma[x] < 0) {
      r.fail("bijective", {a.target.name(x)}, "not in the image of the cover");
      continue;
    }
    if (hit[sigma[x]]) r.fail("bijective", {a.target.name(x)});
    hit[sigma[x]] = true;
  }
  if (!r.ok()) return r;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (sigma[a.target.table.add[x][y]] != b.target.table.add[sigma[x]][sigma[y]])
        r.fail("additive", {a.target.name(x), a.target.name(y)});
      if (sigma[a.target.table.mul[x][y]] != b.target.table.mul[sigma[x]][sigma[y]])
        r.fail("multiplicative", {a.target.name(x), a.target.name(y)});
    }
  r.note_coverage(CheckMode::exhaustive, static_cast<std::size_t>(n) * n);
  r.info["sigma"] = sigma;
  return r;
}

}  // namespace supertrop
