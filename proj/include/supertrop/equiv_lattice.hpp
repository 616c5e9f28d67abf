#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "supertrop/superval.hpp"
#include "supertrop/supertropical.hpp"

namespace supertrop {

/// Equivalence relation on {0..n-1}; labels are renumbered by first occurrence, so equal
/// relations compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> labels);
  static Partition diagonal(int n);
  /// Elements missing from `blocks` stay singletons.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(label_.size()); }
  int block_of(int x) const { return label_[x]; }
  int block_count() const;
  bool same(int x, int y) const { return label_[x] == label_[y]; }
  const std::vector<int>& labels() const { return label_; }
  /// Blocks in label order, members ascending.
  std::vector<std::vector<int>> blocks() const;
  /// True if every block of *this lies in a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> label_;
};

Partition meet(const Partition& a, const Partition& b);
/// Transitive closure of the union, via union-find.
Partition join(const Partition& a, const Partition& b);

/// "{1,g} {e} {0}" with element names from u.
std::string to_string(const Partition& p, const FiniteSupertropical& u);
/// Sorted list of blocks, each a sorted list of element names.
nlohmann::json to_json(const Partition& p, const FiniteSupertropical& u);
/// {"blocks": [["1", "g"], ...]} by element name; unlisted elements stay singletons.
Partition partition_from_json(const nlohmann::json& j, const FiniteSupertropical& u);
Partition load_partition(const std::string& path, const FiniteSupertropical& u);

/// Multiplicativity and fiber conservation, exhaustively.
Report check_mfce(const FiniteSupertropical& u, const Partition& p);
bool is_multiplicative(const FiniteSupertropical& u, const Partition& p);

struct Quotient {
  FiniteSupertropical u;
  /// projection[x] = index of [x] in u
  std::vector<int> projection;
};

/// U/E; throws AlgebraError if E is not MFCE.
Quotient quotient(const FiniteSupertropical& u, const Partition& e);

Partition e_nu(const FiniteSupertropical& u);
/// Tangible fibers of ν as blocks, ghosts as singletons; throws if not multiplicative.
Partition e_t(const FiniteSupertropical& u);
/// x ~ y iff x = y or ex = ey ∈ M \ L; `l` lists ghost-ideal elements. Throws on a closure witness.
Partition e_L(const FiniteSupertropical& u, const std::vector<int>& l);

std::vector<int> ghost_elements(const FiniteSupertropical& u);  // eU, zero included
std::vector<int> tangible_elements(const FiniteSupertropical& u);
/// S(U) = {x : x𝒯 ⊆ 𝒯}
std::vector<int> s_of(const FiniteSupertropical& u);
/// S_e(U) = {x ∈ S(U) : ex = e}
std::vector<int> s_e(const FiniteSupertropical& u);
/// 𝒯_e(U) = {x ∈ 𝒯 : ex = e}
std::vector<int> t_e(const FiniteSupertropical& u);

std::vector<int> submonoid_generated(const FiniteSupertropical& u, const std::vector<int>& gens);

/// x ~ y iff gx = hy for some g, h ∈ G, over an arbitrary multiplication on `points`.
template <class T, class Mul>
std::vector<std::vector<bool>> orbit_relation(const std::vector<T>& points, const std::vector<T>& g, Mul&& mul) {
  std::size_t n = points.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      bool hit = false;
      for (const auto& a : g) {
        for (const auto& b : g)
          if (mul(a, points[i]) == mul(b, points[j])) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      rel[i][j] = rel[j][i] = hit;
    }
  return rel;
}

/// The partition generated by a relation matrix.
Partition partition_of(const std::vector<std::vector<bool>>& rel);

/// E(G) for G ⊆ S(U), closed transitively.
Partition orbital(const FiniteSupertropical& u, const std::vector<int>& g);
/// G′ = {x ∈ S(U) : ∃ g ∈ G, gx ∈ G}
std::vector<int> saturate(const FiniteSupertropical& u, const std::vector<int>& g);
/// G_E = {x ∈ S(U) : x ~_E 1}
std::vector<int> g_of(const FiniteSupertropical& u, const Partition& e);

class BoundExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// All MFCE relations, fiberwise partitions filtered by multiplicativity; sorted.
std::vector<Partition> enumerate_mfce(const FiniteSupertropical& u, int bound = 12);

/// Subsets of `group` containing 1 and closed under multiplication (finite, so subgroups).
std::vector<std::vector<int>> subgroups_of(const FiniteSupertropical& u, const std::vector<int>& group);
/// True if 𝒯(U) is a group under multiplication.
bool tangibles_form_group(const FiniteSupertropical& u);

/// Cov(v) materialized as MFC(U(v)): element i stands for φ_v/E_i.
struct CovLattice {
  std::vector<Partition> elements;
  /// above[i][j]: φ/E_i ≥ φ/E_j, i.e. E_i ⊆ E_j
  std::vector<std::vector<bool>> above;
  /// Hasse edges (upper, lower)
  std::vector<std::pair<int, int>> hasse;
  int top = 0;
  int bottom = 0;

  std::string dot(const FiniteSupertropical& u) const;
  nlohmann::json to_json(const FiniteSupertropical& u) const;
  /// Length of the longest chain (number of Hasse steps).
  int height() const;
};

CovLattice cov_lattice(const FiniteSupertropical& u, int bound = 12);

/// U(v) as a table, for a finite valuation.
template <class R, class M>
FiniteSupertropical initial_cover_table(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  auto ic = initial_cover(v, cfg);
  return FiniteSupertropical::from_table(tabulate(ic.structure.semiring()));
}

template <class R, class M>
CovLattice cov_lattice(const MValuation<R, M>& v, int bound = 12) {
  return cov_lattice(initial_cover_table(v), bound);
}

/// Whether meets of orbital relations are orbital, recorded per fixture.
nlohmann::json orbital_meet_data(const FiniteSupertropical& u);

/// A supervaluation with finite domain and target, stored by tables. `image[i]` is ψ of the
/// domain element i; `ghost_of[m]` is the element of the target matching the m-th element of
/// the shared ghost semiring M.
struct FiniteCover {
  std::string name;
  Semiring<int> domain;
  FiniteSupertropical target;
  std::vector<int> image;
  std::vector<int> ghost_of;

  Supervaluation<int, int> superval() const;
};

/// id_U on a fixture; M is eU in index order.
FiniteCover identity_cover(const FiniteSupertropical& u);

/// φ_v with v finite, the domain re-indexed by position in v.domain.elements.
template <class R, class M>
FiniteCover initial_finite_cover(const MValuation<R, M>& v, const CheckConfig& cfg = {}) {
  auto ic = initial_cover(v, cfg);
  auto s = ic.structure.semiring();
  FiniteCover c;
  c.name = ic.phi.name;
  c.target = FiniteSupertropical::from_table(tabulate(s));
  auto idx = [&](const STElement<R, M>& x) {
    return static_cast<int>(std::find(s.elements.begin(), s.elements.end(), x) - s.elements.begin());
  };
  const auto& el = v.domain.elements;
  c.domain = v.domain;
  c.domain.elements.clear();
  for (std::size_t i = 0; i < el.size(); ++i) c.domain.elements.push_back(static_cast<int>(i));
  auto find = [el](const R& x) { return static_cast<int>(std::find(el.begin(), el.end(), x) - el.begin()); };
  auto dom = v.domain;
  c.domain.zero = find(dom.zero);
  c.domain.one = find(dom.one);
  c.domain.add = [dom, el, find](int a, int b) { return find(dom.add(el[a], el[b])); };
  c.domain.mul = [dom, el, find](int a, int b) { return find(dom.mul(el[a], el[b])); };
  c.domain.show = [dom, el](int a) { return show(dom, el[a]); };
  c.domain.landmarks.clear();
  c.domain.sample = nullptr;
  for (const auto& a : el) c.image.push_back(idx(ic.phi(a)));
  c.ghost_of = ghost_elements(c.target);
  return c;
}

/// π_E∘ψ.
FiniteCover quotient_cover(const FiniteCover& c, const Partition& e);
/// The supremum: the subsemiring of the equalized product generated by ψ(R) and the diagonal
/// copy of M. info: full equalized product size and the generated size.
FiniteCover sup_cover(const std::vector<FiniteCover>& covers, nlohmann::json* info = nullptr);
/// σ with σ∘ψ_a = ψ_b fixing M, checked to be a well-defined semiring isomorphism.
Report isomorphic_over_M(const FiniteCover& a, const FiniteCover& b);

}  // namespace supertrop
