#include "shinv/report.hpp"

#include <cmath>
#include <numbers>

#include "shinv/format.hpp"

namespace shinv {

namespace {

double unit_scale(const ReportDocument& doc) {
  return doc.unit == "nats" ? std::numbers::ln2 : 1.0;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

template <typename T>
std::string join_reals(const std::vector<T>& values, double scale) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_real(static_cast<double>(values[i]) * scale);
  }
  return out;
}

std::string join_counts(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string to_json(const ReportDocument& doc) {
  const double scale = unit_scale(doc);
  const auto& inv = doc.invariants;

  std::string out = "{\n";
  out += "  \"alphabet_sizes\": [" + join_counts(doc.alphabet_sizes) + "],\n";

  if (inv.bounds) {
    const auto& b = *inv.bounds;
    out += "  \"bounds\": {\n";
    out += "    \"min_proper_redundancy_fraction\": " +
           format_real(b.min_proper_redundancy_fraction) + ",\n";
    out += "    \"min_robustness_fraction\": " +
           format_real(b.min_robustness_fraction) + ",\n";
    out += "    \"min_source_synergy_fraction\": " +
           format_real(b.min_source_synergy_fraction) + ",\n";
    out += "    \"min_vulnerability_fraction\": " +
           format_real(b.min_vulnerability_fraction) + ",\n";
    out += std::string("    \"redundancy_predominant\": ") +
           (b.redundancy_predominant ? "true" : "false") + ",\n";
    out += std::string("    \"robustness_predominant\": ") +
           (b.robustness_predominant ? "true" : "false") + ",\n";
    out += std::string("    \"synergy_predominant\": ") +
           (b.synergy_predominant ? "true" : "false") + ",\n";
    out += std::string("    \"vulnerability_predominant\": ") +
           (b.vulnerability_predominant ? "true" : "false") + "\n";
    out += "  },\n";
  } else {
    out += "  \"bounds\": null,\n";
  }

  out += "  \"conditional_mi_bits\": [" + join_reals(inv.conditional_mi, scale) +
         "],\n";
  out += "  \"drsi_bits\": " + format_real(inv.drsi * scale) + ",\n";
  out += "  \"input_path\": \"" + json_escape(doc.input_path) + "\",\n";
  out += "  \"marginal_mi_bits\": [" + join_reals(inv.marginal_mi, scale) +
         "],\n";
  out += "  \"n_rows\": " + std::to_string(doc.n_rows) + ",\n";
  out += "  \"n_sources\": " + std::to_string(inv.n_sources) + ",\n";
  out += "  \"r_bar\": " +
         (inv.r_bar ? format_real(*inv.r_bar) : std::string("null")) + ",\n";
  out += "  \"rsi_bits\": " + format_real(inv.rsi * scale) + ",\n";
  out += "  \"threshold_bits\": " + format_real(doc.threshold_bits) + ",\n";
  out += "  \"tool_version\": \"" + json_escape(doc.tool_version) + "\",\n";
  out += "  \"total_mi_bits\": " + format_real(inv.total_mi * scale) + ",\n";
  out += "  \"unit\": \"" + json_escape(doc.unit) + "\",\n";
  out += "  \"v_bar\": " +
         (inv.v_bar ? format_real(*inv.v_bar) : std::string("null")) + "\n";
  out += "}\n";
  return out;
}

std::string to_tsv(const ReportDocument& doc) {
  const double scale = unit_scale(doc);
  const auto& inv = doc.invariants;

  std::string out;
  auto line = [&out](const std::string& key, const std::string& value) {
    out += key;
    out.push_back('\t');
    out += value;
    out.push_back('\n');
  };

  line("alphabet_sizes", join_counts(doc.alphabet_sizes));
  if (inv.bounds) {
    const auto& b = *inv.bounds;
    line("bounds.min_proper_redundancy_fraction",
         format_real(b.min_proper_redundancy_fraction));
    line("bounds.min_robustness_fraction",
         format_real(b.min_robustness_fraction));
    line("bounds.min_source_synergy_fraction",
         format_real(b.min_source_synergy_fraction));
    line("bounds.min_vulnerability_fraction",
         format_real(b.min_vulnerability_fraction));
    line("bounds.redundancy_predominant",
         b.redundancy_predominant ? "true" : "false");
    line("bounds.robustness_predominant",
         b.robustness_predominant ? "true" : "false");
    line("bounds.synergy_predominant",
         b.synergy_predominant ? "true" : "false");
    line("bounds.vulnerability_predominant",
         b.vulnerability_predominant ? "true" : "false");
  } else {
    line("bounds", "null");
  }
  line("conditional_mi_bits", join_reals(inv.conditional_mi, scale));
  line("drsi_bits", format_real(inv.drsi * scale));
  line("input_path", doc.input_path);
  line("marginal_mi_bits", join_reals(inv.marginal_mi, scale));
  line("n_rows", std::to_string(doc.n_rows));
  line("n_sources", std::to_string(inv.n_sources));
  line("r_bar", inv.r_bar ? format_real(*inv.r_bar) : "null");
  line("rsi_bits", format_real(inv.rsi * scale));
  line("threshold_bits", format_real(doc.threshold_bits));
  line("tool_version", doc.tool_version);
  line("total_mi_bits", format_real(inv.total_mi * scale));
  line("unit", doc.unit);
  line("v_bar", inv.v_bar ? format_real(*inv.v_bar) : "null");
  return out;
}

}  // namespace shinv
