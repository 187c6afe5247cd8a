#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zfree/sweep.hpp"

namespace zfree {
namespace {

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string to_csv(const SweepReport& report) {
  std::string out = "p,k_formula,delta,s_triangular,special,extremal_verified,oracle_card,oracle_agrees,classify_row,elapsed_ms\n";
  for (const SweepRecord& r : report.records) {
    out += std::to_string(r.p) + ',' + std::to_string(r.k_formula) + ',' + std::to_string(r.delta) + ',' +
           std::to_string(r.s_triangular) + ',' + bool_text(r.special) + ',' + cell(r.extremal_verified) + ',' +
           cell(r.oracle_card) + ',' + cell(r.oracle_agrees) + ',' + cell(r.classify_row) + ',' +
           format_ms(r.elapsed_ms) + '\n';
  }
  return out;
}

std::string to_json(const SweepReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const SweepRecord& r : report.records) {
    records.push_back({
        {"p", r.p},
        {"k_formula", r.k_formula},
        {"delta", r.delta},
        {"s_triangular", r.s_triangular},
        {"special", r.special},
        {"extremal_verified", optional_json(r.extremal_verified)},
        {"interval_verified", optional_json(r.interval_verified)},
        {"oracle_card", optional_json(r.oracle_card)},
        {"oracle_agrees", optional_json(r.oracle_agrees)},
        {"classify_row", optional_json(r.classify_row)},
        {"elapsed_ms", r.elapsed_ms},
        {"error", r.error.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.error)},
    });
  }
  nlohmann::json doc = {
      {"range", {report.lo, report.hi}},
      {"records", std::move(records)},
      {"delta_zero_fraction", report.delta_zero_fraction},
      {"special_count", report.special_count},
      {"special_count_over_sqrt", report.special_count_over_sqrt},
  };
  return doc.dump(2) + '\n';
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_report(const SweepReport& report, ReportFormat format) {
  return format == ReportFormat::csv ? to_csv(report) : to_json(report);
}

void write_report(const SweepReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open report file " + path.string());
  file << format_report(report, format);
  file.flush();
  if (!file) throw std::runtime_error("failed writing report file " + path.string());
}

std::string mask_elapsed_column(std::string_view csv) {
  std::string out;
  out.reserve(csv.size());
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(start, end - start);
    const std::size_t last_comma = line.rfind(',');
    out += last_comma == std::string_view::npos ? line : line.substr(0, last_comma + 1);
    out += '\n';
    start = end + 1;
  }
  return out;
}

}  // namespace zfree
