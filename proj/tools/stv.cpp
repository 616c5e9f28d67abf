#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "supertrop/equiv_lattice.hpp"
#include "supertrop/trop_poly.hpp"

using namespace supertrop;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kWitness = 1, kInput = 2, kBound = 3 };

struct Options {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  unsigned deg = 4;
  unsigned vars = 3;
  int bound = 12;
  std::string out;
  std::string format = "json";
  bool fault_injection = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::ios_base::failure("cannot write " + o.out);
  f << text;
}

std::string report_text(const Report& r) {
  std::ostringstream s;
  s << r.subject << ": " << (r.ok() ? "ok" : "FAILED") << " (" << r.mode_string() << ")\n";
  for (const auto& w : r.witnesses) {
    s << "  " << w.rule << ":";
    for (const auto& x : w.inputs) s << " " << x;
    if (!w.detail.empty()) s << "  [" << w.detail << "]";
    s << "\n";
  }
  return s.str();
}

int emit_report(const Options& o, const Report& r) {
  if (o.format == "text") emit(o, report_text(r));
  else emit(o, r.to_json().dump(2) + "\n");
  std::cerr << (r.ok() ? "ok" : "witnesses found") << ": " << r.subject << "\n";
  return r.ok() ? kOk : kWitness;
}

int cmd_check(const Options& o, const std::string& suite, const std::string& file, const std::string& partition) {
  if (suite == "semiring") return emit_report(o, check_semiring_axioms(load_table(file)));
  if (suite == "bipotent") return emit_report(o, check_bipotent(load_table(file)));
  if (suite == "ub") return emit_report(o, check_ub_semiring(load_table(file)));
  auto u = load_supertropical(file);
  if (suite == "supertropical") return emit_report(o, check_supertropical_axioms(u));
  // mfce
  if (partition.empty()) throw std::invalid_argument("check mfce needs a partition file");
  return emit_report(o, check_mfce(u, load_partition(partition, u)));
}

int cmd_lattice(const Options& o, const std::string& file) {
  auto u = load_supertropical(file);
  auto c = cov_lattice(u, o.bound);
  if (o.format == "dot") {
    emit(o, c.dot(u));
  } else {
    json j = c.to_json(u);
    if (tangibles_form_group(u)) {
      auto groups = subgroups_of(u, t_e(u));
      j["subgroups_of_Te"] = groups.size();
      j["subgroup_match"] = groups.size() + 1 == c.elements.size();
    }
    if (o.format == "text") {
      std::ostringstream s;
      for (std::size_t i = 0; i < c.elements.size(); ++i) s << i << ": " << to_string(c.elements[i], u) << "\n";
      for (auto [a, b] : c.hasse) s << a << " -> " << b << "\n";
      emit(o, s.str());
    } else {
      emit(o, j.dump(2) + "\n");
    }
  }
  std::cerr << c.elements.size() << " MFCE relations, height " << c.height() << "\n";
  return kOk;
}

int cmd_kapranov(const Options& o, const std::string& instance) {
  KapranovConfig k;
  k.instance = instance;
  k.seed = o.seed;
  k.trials = o.samples;
  k.deg = o.deg;
  k.vars = o.vars;
  k.fault_injection = o.fault_injection;
  auto j = run_kapranov(k);
  emit(o, o.format == "text" ? "corner " + j["corner"].dump() + "\ngs " + j["gs"].dump() + "\n" : j.dump(2) + "\n");
  std::cerr << "corner " << j["corner"]["pass"] << "/" << k.trials << ", gs " << j["gs"]["pass"] << "/" << k.trials
            << "\n";
  return j["ok"].get<bool>() ? kOk : kWitness;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int cmd_corner(const Options& o, const std::string& poly, const std::string& point) {
  auto coords = split(point, ',');
  auto f = parse_polynomial(poly, static_cast<unsigned>(coords.size()));
  auto v = puiseux_valuation();
  std::vector<Theta> b;
  for (const auto& c : coords) b.push_back(v(parse_series(c)));
  auto g = coeff_map(v.target, v.map, f);
  auto c = corner_query(v.target, g, b);
  auto j = c.to_json();
  j["polynomial"] = poly_string(v.target, g);
  emit(o, o.format == "text" ? std::string(c.in_locus ? "in locus\n" : "not in locus\n") : j.dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supertropical semiring and valuation toolkit"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("STV_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "STV_SEED is not a number: " << env << "\n";
      return kInput;
    }
  }
  app.add_option("--seed", o.seed, "random seed (default 42, or STV_SEED)");
  app.add_option("--samples", o.samples, "sample count, or trial count for kapranov");
  app.add_option("--deg", o.deg, "degree bound");
  app.add_option("--vars", o.vars, "variable bound");
  app.add_option("--bound", o.bound, "carrier size bound for enumeration");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_flag("--fault-injection", o.fault_injection, "perturb manufactured roots");

  std::string suite, file, partition, instance = "puiseux", poly, point;
  auto* check = app.add_subcommand("check", "run a validator on a table file");
  check->add_option("suite", suite)->required()->check(CLI::IsMember({"semiring", "bipotent", "supertropical", "ub", "mfce"}));
  check->add_option("table", file)->required();
  check->add_option("partition", partition, "partition file for mfce");
  auto* lattice = app.add_subcommand("lattice", "enumerate MFCE relations and the lattice of covers");
  lattice->add_option("table", file)->required();
  auto* kap = app.add_subcommand("kapranov", "manufactured-root experiments");
  kap->add_option("instance", instance)->check(CLI::IsMember({"puiseux", "padic"}));
  auto* corner = app.add_subcommand("corner", "corner-locus query over max-plus");
  corner->add_option("polynomial", poly)->required();
  corner->add_option("point", point, "comma-separated series literals")->required();
  for (auto* sub : {check, lattice, kap, corner}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(o, suite, file, partition);
    if (*lattice) return cmd_lattice(o, file);
    if (*kap) return cmd_kapranov(o, instance);
    return cmd_corner(o, poly, point);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInput;
  } catch (const AlgebraError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  }
}
