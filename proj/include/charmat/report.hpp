#pragma once

#include <iosfwd>
#include <string>

#include "charmat/verifier.hpp"

namespace charmat {

enum class ReportFormat { json, csv, text };

// accepts "json", "csv", "text"
ReportFormat parse_format(const std::string& name);

std::string csv_header();
std::string to_csv_row(const VerificationReport& rep);

// one compact JSON object, no trailing newline
std::string to_json_line(const VerificationReport& rep);

void write_text(std::ostream& os, const VerificationReport& rep);

void write_report(std::ostream& os, const VerificationReport& rep,
                  ReportFormat fmt);

}  // namespace charmat
