#include "qops/report.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qops {

std::size_t VerificationReport::mismatch_count() const {
  std::size_t n = 0;
  for (const ReportRecord& r : records)
    if (!r.agree()) ++n;
  return n;
}

std::optional<std::string> VerificationReport::param(
    const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

void VerificationReport::add_param(const std::string& key,
                                   const std::string& value) {
  params.emplace_back(key, value);
}

void VerificationReport::sort_records() {
  std::stable_sort(records.begin(), records.end(),
                   [](const ReportRecord& a, const ReportRecord& b) {
                     long sa = 0, sb = 0;
                     for (int e : a.seq) sa += e;
                     for (int e : b.seq) sb += e;
                     if (sa != sb) return sa < sb;
                     return a.seq < b.seq;
                   });
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

namespace {

std::string encode_seq(const Word& w) {
  std::ostringstream os;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) os << ',';
    os << w[j];
  }
  return os.str();
}

std::optional<long> numeric_param(const VerificationReport& report,
                                  const std::string& key) {
  auto v = report.param(key);
  if (!v) return std::nullopt;
  std::size_t pos = 0;
  long out = 0;
  try {
    out = std::stol(*v, &pos);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (pos != v->size()) return std::nullopt;
  return out;
}

void emit_text(const VerificationReport& report, std::ostream& out) {
  out << "check: " << report.check << '\n';
  if (!report.params.empty()) {
    bool first = true;
    for (const auto& [k, v] : report.params) {
      out << (first ? "" : " ") << k << '=' << v;
      first = false;
    }
    out << '\n';
  }
  std::size_t width = 3;  // "seq"
  for (const ReportRecord& r : report.records)
    width = std::max(width, render(r.seq).size());
  out << std::left << std::setw(static_cast<int>(width + 2)) << "seq"
      << std::setw(11) << "predicted" << std::setw(10) << "computed"
      << "status\n";
  for (const ReportRecord& r : report.records) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << render(r.seq)
        << std::setw(11) << (r.predicted ? "yes" : "no") << std::setw(10)
        << (r.computed_nonzero ? "yes" : "no")
        << (r.agree() ? "agree" : "MISMATCH") << '\n';
  }
  out << "records: " << report.records.size()
      << "  mismatches: " << report.mismatch_count() << '\n';
  for (const std::string& a : report.annotations) out << "note: " << a << '\n';
}

void emit_json(const VerificationReport& report, std::ostream& out) {
  auto k = numeric_param(report, "k");
  auto i = numeric_param(report, "i");
  for (const ReportRecord& r : report.records) {
    nlohmann::ordered_json rec;
    rec["seq"] = r.seq;
    if (k) rec["k"] = *k;
    if (i) rec["i"] = *i;
    rec["predicted"] = r.predicted;
    rec["computed_nonzero"] = r.computed_nonzero;
    rec["status"] = r.agree() ? "agree" : "mismatch";
    out << rec.dump() << '\n';
  }
  nlohmann::ordered_json summary;
  summary["check"] = report.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  summary["params"] = params;
  summary["records"] = report.records.size();
  summary["mismatches"] = report.mismatch_count();
  summary["annotations"] = report.annotations;
  out << nlohmann::ordered_json{{"summary", summary}}.dump() << '\n';
}

void emit_csv(const VerificationReport& report, std::ostream& out) {
  out << "seq,predicted,computed_nonzero,status\n";
  for (const ReportRecord& r : report.records) {
    out << '"' << encode_seq(r.seq) << "\","
        << (r.predicted ? "true" : "false") << ','
        << (r.computed_nonzero ? "true" : "false") << ','
        << (r.agree() ? "agree" : "mismatch") << '\n';
  }
  out << "# check=" << report.check;
  for (const auto& [k, v] : report.params) out << ' ' << k << '=' << v;
  out << '\n';
  out << "# records=" << report.records.size()
      << " mismatches=" << report.mismatch_count() << '\n';
  for (const std::string& a : report.annotations)
    out << "# note: " << a << '\n';
}

}  // namespace

void emit_table(const VerificationReport& report, OutputFormat format,
                std::ostream& out) {
  switch (format) {
    case OutputFormat::text:
      emit_text(report, out);
      return;
    case OutputFormat::json:
      emit_json(report, out);
      return;
    case OutputFormat::csv:
      emit_csv(report, out);
      return;
  }
}

VerificationReport parse_json_report(std::istream& in) {
  VerificationReport report;
  std::string line;
  bool saw_summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
    if (j.contains("summary")) {
      const auto& s = j["summary"];
      report.check = s.value("check", std::string{});
      if (s.contains("params"))
        for (const auto& [key, value] : s["params"].items())
          report.add_param(key, value.get<std::string>());
      if (s.contains("annotations"))
        for (const auto& a : s["annotations"])
          report.annotations.push_back(a.get<std::string>());
      saw_summary = true;
      continue;
    }
    ReportRecord r;
    r.seq = j.at("seq").get<Word>();
    r.predicted = j.at("predicted").get<bool>();
    r.computed_nonzero = j.at("computed_nonzero").get<bool>();
    report.records.push_back(std::move(r));
  }
  if (!saw_summary)
    throw std::invalid_argument("report stream has no summary line");
  return report;
}

}  // namespace qops
