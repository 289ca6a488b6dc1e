#include "urlab/report.hpp"

#include <sstream>
#include <stdexcept>

#include "urlab/io.hpp"

namespace urlab {

Format parse_format(std::string_view name) {
  if (name == "json") {
    return Format::json;
  }
  if (name == "md") {
    return Format::md;
  }
  if (name == "csv") {
    return Format::csv;
  }
  throw std::invalid_argument("unknown format \"" + std::string(name) + "\"");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char c : s) {
    out += c;
    if (c == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? " " : "") << v[i];
  }
  return os.str();
}

}  // namespace

std::string render_report(const SweepReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << io::to_json(report).dump(2) << "\n";
      break;
    case Format::md:
      os << "## " << report.kind << " (" << report.label << ")\n\n";
      os << "| n | " << report.key_header << " | expected | observed | seeds | pass |\n";
      os << "|---|---|---|---|---|---|\n";
      for (const auto& r : report.records) {
        os << "| " << r.n << " | " << r.key << " | " << r.expected << " | " << r.observed << " | " << r.samples << " | "
           << (r.pass ? "pass" : "**FAIL**") << " |\n";
      }
      if (!report.stats.empty()) {
        os << "\n";
        for (const auto& [k, v] : report.stats) {
          os << "- " << k << ": " << v << "\n";
        }
      }
      os << "\n" << (report.pass() ? "Result: pass" : "Result: FAIL") << " (" << report.counterexamples.size()
         << " counterexamples)\n";
      break;
    case Format::csv:
      os << "n," << csv_field(report.key_header) << ",expected,observed,seeds,pass\n";
      for (const auto& r : report.records) {
        os << csv_field(r.n) << "," << csv_field(r.key) << "," << csv_field(r.expected) << "," << csv_field(r.observed)
           << "," << r.samples << "," << (r.pass ? "pass" : "fail") << "\n";
      }
      break;
  }
  return os.str();
}

std::string render_report(const AnalysisReport& report, const GAlgebra& alg, Format format) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "true" : "false"; };
  switch (format) {
    case Format::json:
      os << io::to_json(report, alg).dump(2) << "\n";
      break;
    case Format::md:
      os << "| property | value |\n|---|---|\n";
      os << "| length | " << report.length << " |\n";
      os << "| length layers | " << join_sizes(report.length_layers) << " |\n";
      os << "| uniserial | " << yn(report.uniserial) << " |\n";
      os << "| socle layers | " << join_sizes(report.socle_layers) << " |\n";
      os << "| faithful | " << yn(report.faithful) << " |\n";
      os << "| relatively faithful | " << yn(report.relatively_faithful) << " |\n";
      os << "| kernel dim | " << report.kernel_basis.size() << " |\n";
      os << "| negative certified | " << yn(report.negative_certified) << " |\n";
      break;
    case Format::csv:
      os << "length,uniserial,faithful,relatively_faithful,kernel_dim,socle_layers,negative_certified\n";
      os << report.length << "," << yn(report.uniserial) << "," << yn(report.faithful) << ","
         << yn(report.relatively_faithful) << "," << report.kernel_basis.size() << ","
         << csv_field(join_sizes(report.socle_layers)) << "," << yn(report.negative_certified) << "\n";
      break;
  }
  return os.str();
}

}  // namespace urlab
