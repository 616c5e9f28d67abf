#include "supertrop/report.hpp"

#include <algorithm>
#include <map>

namespace supertrop {

bool Report::violates(const std::string& rule) const { return first(rule) != nullptr; }

const Witness* Report::first(const std::string& rule) const {
  for (const auto& w : witnesses)
    if (w.rule == rule) return &w;
  return nullptr;
}

bool Report::has_witness(const std::string& rule, const std::vector<std::string>& inputs) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [&](const Witness& w) { return w.rule == rule && w.inputs == inputs; });
}

void Report::fail(std::string rule, std::vector<std::string> inputs, std::string detail) {
  ++violations;
  auto n = std::count_if(witnesses.begin(), witnesses.end(),
                         [&](const Witness& w) { return w.rule == rule; });
  if (static_cast<std::size_t>(n) >= kWitnessCap) return;
  witnesses.push_back({std::move(rule), std::move(inputs), std::move(detail)});
}

void Report::note_coverage(CheckMode m, std::size_t n) {
  if (m == CheckMode::sampled) mode = CheckMode::sampled;
  points += n;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checked)
    if (std::find(checked.begin(), checked.end(), c) == checked.end()) checked.push_back(c);
  for (const auto& w : other.witnesses) fail(w.rule, w.inputs, w.detail);
  violations += other.violations - other.witnesses.size();
  note_coverage(other.mode, other.points);
  for (auto it = other.info.begin(); it != other.info.end(); ++it) info[it.key()] = it.value();
}

std::string Report::mode_string() const {
  if (mode == CheckMode::exhaustive) return "exhaustive";
  return "sampled at " + std::to_string(points) + " points";
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["checked"] = checked;
  j["ok"] = ok();
  j["mode"] = mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
  j["points"] = points;
  j["violations"] = violations;
  auto ws = nlohmann::json::array();
  for (const auto& w : witnesses) {
    nlohmann::json x;
    x["rule"] = w.rule;
    x["inputs"] = w.inputs;
    if (!w.detail.empty()) x["detail"] = w.detail;
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  if (!info.empty()) j["info"] = info;
  return j;
}

}  // namespace supertrop
