#include "hot/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

#include <json.hpp>

namespace hot {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json summary_json(const SetDistanceSummary& s) {
  json j{{"value", optional_number(s.value)},
         {"set_count", s.set_count},
         {"contributing_sets", s.contributing_sets},
         {"skipped_sets", s.skipped_sets},
         {"ordered_pairs", s.ordered_pairs},
         {"connected_pairs", s.connected_pairs},
         {"excluded_pairs", s.excluded_pairs},
         {"one_hop_pairs", s.one_hop_pairs}};
  if (!s.value) j["reason"] = s.reason;
  return j;
}

std::string fixed3(const std::optional<double>& v) {
  if (!v) return "n/a";
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3f", *v);
  return buf.data();
}

}  // namespace

std::string report_json(const EvalReport& r) {
  json j{{"label", r.label},
         {"node_count", r.node_count},
         {"hyperedge_count", r.hyperedge_count},
         {"seed", r.seed},
         {"drel", summary_json(r.relevant)},
         {"drand", summary_json(r.random)},
         {"effort_ratio", optional_number(r.effort_ratio)},
         {"rdp", optional_number(r.rdp)},
         {"random_disconnect_proportion", optional_number(r.random_disconnect_proportion)},
         {"sigma_rel", r.sigma_rel},
         {"sigma_rand", r.sigma_rand}};
  if (!r.effort_ratio) j["effort_ratio_reason"] = r.effort_ratio_reason;
  return j.dump(2) + "\n";
}

std::string report_table(std::span<const EvalReport> reports) {
  const std::array<std::string, 4> header{"Method", "Effort Ratio", "Number of Hyperedges", "RDP"};
  std::vector<std::array<std::string, 4>> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports)
    rows.push_back({r.label.empty() ? "-" : r.label, fixed3(r.effort_ratio), std::to_string(r.hyperedge_count),
                    fixed3(r.rdp)});

  std::array<std::size_t, 4> width{};
  for (std::size_t c = 0; c < 4; ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::array<std::string, 4>& cells) {
    std::string out;
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) out += " | ";
      // Method is left-aligned, numbers right-aligned.
      const std::string pad(width[c] - cells[c].size(), ' ');
      out += c == 0 ? cells[c] + pad : pad + cells[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  for (std::size_t c = 0; c < 4; ++c) {
    if (c > 0) out += "-+-";
    out += std::string(width[c], '-');
  }
  out += "\n";
  for (const auto& row : rows) out += line(row);
  return out;
}

}  // namespace hot
