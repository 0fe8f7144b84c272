#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfqkd/channel_model.hpp"
#include "tfqkd/experiment.hpp"

namespace tfqkd {

enum class RecordFormat { json, csv };
enum class ReportFormat { json, table_text, csv };

/// Raised when an input document violates the schema or a type invariant;
/// the message names the offending field and constraint.
class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses and fully validates one experiment record. No partially constructed
/// record ever escapes: every invariant is checked before returning.
ExperimentRecord load_experiment(std::istream& in, RecordFormat format);
ExperimentRecord load_experiment(const std::string& text, RecordFormat format);

/// Schema-level parse without invariant validation; feeds the diagnostic pass
/// of the validate subcommand.
ExperimentRecord parse_experiment(std::istream& in, RecordFormat format);

/// Every invariant violation in the record, one human-readable line each.
/// Empty means the record is clean.
std::vector<std::string> invariant_diagnostics(const ExperimentRecord& record);

/// Serializes a report. JSON is lossless at double precision and reloadable
/// via load_report_json; the text table and CSV print 5 significant digits in
/// scientific notation and are display-only.
std::string emit_report(const KeyRateReport& report, ReportFormat format);

KeyRateReport load_report_json(std::istream& in);
KeyRateReport load_report_json(const std::string& text);

/// CSV curve with header "loss_db,rate,plob", one row per point, full double
/// precision. Throws std::invalid_argument on an empty list.
std::string emit_curve(std::span<const SweepPoint> points);

/// 5-significant-digit scientific notation used by the table outputs.
std::string sci5(double v);

}  // namespace tfqkd
