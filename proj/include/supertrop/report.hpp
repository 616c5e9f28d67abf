#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace supertrop {

enum class CheckMode { exhaustive, sampled };

struct Witness {
  std::string rule;
  std::vector<std::string> inputs;
  std::string detail;
};

/// Outcome of an axiom or property check. `witnesses` is empty iff every rule in
/// `checked` held on the inspected points.
struct Report {
  std::string subject;
  std::vector<std::string> checked;
  std::vector<Witness> witnesses;
  CheckMode mode = CheckMode::exhaustive;
  std::size_t points = 0;
  nlohmann::json info = nlohmann::json::object();

  /// Per-rule cap on stored witnesses; further violations are only counted.
  static constexpr std::size_t kWitnessCap = 8;
  std::size_t violations = 0;

  bool ok() const { return witnesses.empty(); }
  bool violates(const std::string& rule) const;
  bool has_witness(const std::string& rule, const std::vector<std::string>& inputs) const;
  const Witness* first(const std::string& rule) const;

  void fail(std::string rule, std::vector<std::string> inputs, std::string detail = {});
  void note_coverage(CheckMode m, std::size_t n);
  /// Appends the rules and witnesses of `other`; the mode degrades to sampled if either was.
  void merge(const Report& other);

  nlohmann::json to_json() const;
  std::string mode_string() const;
};

}  // namespace supertrop
