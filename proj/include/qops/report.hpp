#pragma once

// Verification sweep results and their text / NDJSON / CSV emission.
// A record compares a predicted verdict against computed nonvanishing
// for one operation sequence; JSON records carry the fixed key order
// seq, k, i, predicted, computed_nonzero, status.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qops/opseq.hpp"

namespace qops {

struct ReportRecord {
  Word seq;
  bool predicted = false;
  bool computed_nonzero = false;

  bool agree() const { return predicted == computed_nonzero; }
  bool operator==(const ReportRecord&) const = default;
};

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // echoed in order
  std::vector<ReportRecord> records;
  std::vector<std::string> annotations;

  std::size_t mismatch_count() const;
  std::optional<std::string> param(const std::string& key) const;
  void add_param(const std::string& key, const std::string& value);
  // Stable order: word sum (degree up to a constant), then lex.
  void sort_records();

  bool operator==(const VerificationReport&) const = default;
};

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

void emit_table(const VerificationReport& report, OutputFormat format,
                std::ostream& out);

// Reads back what emit_table wrote in json format.
VerificationReport parse_json_report(std::istream& in);

}  // namespace qops
