#include "supertrop/trop_poly.hpp"

namespace supertrop {

nlohmann::json CornerReport::to_json() const {
  nlohmann::json j;
  j["point"] = point;
  auto& d = j["dominating"] = nlohmann::json::array();
  for (const auto& m : dominating) d.push_back(monomial_string(m));
  j["max"] = max;
  j["zero_max"] = zero_max;
  j["in_locus"] = in_locus;
  return j;
}

Report check_ub_semiring(const FiniteSemiringTable& t) {
  CheckConfig cfg;
  cfg.exhaustive_triples = 4096;
  return check_ub_semiring(as_semiring(t), cfg);
}

namespace {

struct Tally {
  std::size_t pass = 0, fail = 0, rejected = 0;
  nlohmann::json to_json() const { return {{"pass", pass}, {"fail", fail}, {"rejected", rejected}}; }
};

template <class R, class M, class U, class Gen>
nlohmann::json trials(const KapranovConfig& cfg, const MValuation<R, M>& v, const Supervaluation<R, U>& phi,
                      Gen root_coord) {
  const auto& ring = v.domain;
  CheckConfig check;
  check.seed = cfg.seed;
  auto sv5 = is_tangibly_additive(phi, check);

  Rng rng(cfg.seed);
  Tally corner, ghost;
  nlohmann::json first_failure = nullptr;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    unsigned n = std::uniform_int_distribution<unsigned>(1, std::max(1u, cfg.vars))(rng);
    std::vector<R> a;
    for (unsigned i = 0; i < n; ++i) a.push_back(root_coord(rng));
    Polynomial<R> f{n, {}};
    while (f.is_zero())
      for (unsigned i = 0; i < n; ++i) {
        auto g = random_poly(ring, rng, n, cfg.deg > 0 ? cfg.deg - 1 : 0, 3);
        auto lin = poly_add(ring, variable_poly(ring, n, i, ring.one),
                            constant_poly(ring, n, ring.mul(a[i], R(-1))));
        f = poly_add(ring, f, poly_mul(ring, g, lin));
      }
    if (cfg.fault_injection) a[0] = ring.add(a[0], ring.one);
    auto record = [&](const char* which, const Report& r) {
      if (!first_failure.is_null()) return;
      first_failure = {{"trial", t}, {"check", which}, {"f", poly_string(ring, f)}, {"report", r.to_json()}};
      auto& pt = first_failure["a"] = nlohmann::json::array();
      for (const auto& x : a) pt.push_back(show(ring, x));
    };
    try {
      auto r = kapranov_corner_check(v, f, a);
      if (r.ok()) ++corner.pass;
      else {
        ++corner.fail;
        record("corner", r);
      }
    } catch (const AlgebraError&) {
      ++corner.rejected;
    }
    if (!(evaluate(ring, f, a) == ring.zero)) {
      ++ghost.rejected;
      continue;
    }
    auto r = kapranov_gs_check(phi, f, a);
    if (r.ok()) ++ghost.pass;
    else {
      ++ghost.fail;
      record("gs", r);
    }
  }
  nlohmann::json j;
  j["instance"] = cfg.instance;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["deg"] = cfg.deg;
  j["vars"] = cfg.vars;
  j["fault_injection"] = cfg.fault_injection;
  j["valuation"] = v.name;
  j["supervaluation"] = phi.name;
  j["tangibly_additive"] = sv5.ok();
  j["corner"] = corner.to_json();
  j["gs"] = ghost.to_json();
  j["first_failure"] = first_failure;
  j["ok"] = sv5.ok() && corner.fail == 0 && ghost.fail == 0 && (cfg.fault_injection || corner.rejected == 0);
  return j;
}

}  // namespace

nlohmann::json run_kapranov(const KapranovConfig& cfg) {
  if (cfg.instance == "puiseux") {
    return trials(cfg, puiseux_valuation(), leading_term_superval(), [](Rng& rng) {
      if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return PuiseuxSeries();
      return random_series<Rational>(rng);
    });
  }
  if (cfg.instance == "padic") {
    auto v = padic_valuation(2);
    auto ints = v.domain;
    return trials(cfg, v, hat_v(v), [ints](Rng& rng) { return ints.sample(rng); });
  }
  throw std::invalid_argument("unknown instance '" + cfg.instance + "' (expected puiseux or padic)");
}

}  // namespace supertrop
