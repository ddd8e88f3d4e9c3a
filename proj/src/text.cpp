#include "hookpairs/text.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hookpairs {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer '" + token +
                                  "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

nlohmann::json legs_json(const LegMultiset& m) {
  auto out = nlohmann::json::array();
  for (const auto& [value, count] : m.entries()) {
    out.push_back({value, count});
  }
  return out;
}

nlohmann::json failures_json(const std::vector<IdentityFailure>& failures) {
  auto out = nlohmann::json::array();
  for (const IdentityFailure& f : failures) {
    nlohmann::json entry;
    entry["instance"] = f.instance;
    if (f.d) {
      entry["d"] = *f.d;
    } else {
      entry["d"] = nullptr;
    }
    // lhs/rhs are already serialized multisets or sequences
    entry["lhs"] = f.lhs;
    entry["rhs"] = f.rhs;
    out.push_back(entry);
  }
  return out;
}

nlohmann::json report_json(int theorem, nlohmann::json params,
                           const Report& report) {
  nlohmann::json doc;
  doc["theorem"] = theorem;
  doc["params"] = std::move(params);
  doc["pass"] = report.pass;
  doc["failures"] = failures_json(report.failures);
  doc["instances_checked"] = 1;
  return doc;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  return Partition(parse_int_list(text, "partition literal"));
}

Staircase parse_staircase(const std::string& text) {
  const std::size_t semi = text.find(';');
  if (text.rfind("v:", 0) != 0 || semi == std::string::npos ||
      text.compare(semi + 1, 2, "h:") != 0) {
    throw std::invalid_argument(
        "staircase literal must look like \"v:2,1;h:3\"");
  }
  const std::string v_text = text.substr(2, semi - 2);
  const std::string h_text = text.substr(semi + 3);
  return Staircase(parse_int_list(v_text, "staircase v"),
                   parse_int_list(h_text, "staircase h"));
}

std::vector<int> parse_leg_sequence(const std::string& text) {
  return parse_int_list(text, "leg sequence");
}

std::string format_leg_sequence(std::span<const int> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string region_document(const Region& g) {
  auto doc = nlohmann::json::array();
  for (const Cell& c : g.cells()) {
    doc.push_back({c.row, c.col});
  }
  return doc.dump();
}

std::string leg_multiset_document(const LegMultiset& m) {
  return legs_json(m).dump();
}

std::string hook_pair_multiset_document(const HookPairMultiset& m) {
  auto doc = nlohmann::json::array();
  for (const auto& [hp, count] : m.entries()) {
    doc.push_back({hp.arm, hp.leg, count});
  }
  return doc.dump();
}

std::string report_document_box(int theorem, int n, int k, const Partition& mu,
                                const Report& report) {
  nlohmann::json params;
  params["n"] = n;
  params["k"] = k;
  params["mu"] = mu.parts();
  return report_json(theorem, std::move(params), report).dump();
}

std::string report_document_shifted(int a, const Partition& lambda,
                                    const Report& report) {
  nlohmann::json params;
  params["a"] = a;
  params["lambda"] = lambda.parts();
  return report_json(3, std::move(params), report).dump();
}

std::string sweep_document(const SweepSummary& summary) {
  nlohmann::json params;
  for (const auto& [name, value] : summary.params) params[name] = value;
  nlohmann::json doc;
  doc["theorem"] = summary.theorem;
  doc["params"] = std::move(params);
  doc["pass"] = summary.failed_instances == 0;
  doc["failed_instances"] = summary.failed_instances;
  doc["failures"] = failures_json(summary.failures);
  doc["instances_checked"] = summary.instances_checked;
  return doc.dump();
}

}  // namespace hookpairs
