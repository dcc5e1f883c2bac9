#pragma once

#include <span>
#include <string>

#include "svdim/expected.hpp"
#include "svdim/scanner.hpp"

namespace svdim {

enum class ReportFormat { json, csv };

ReportFormat report_format_from_string(std::string_view name);

/// CSV header shared by every secant report.
inline constexpr const char* kSecantCsvHeader =
    "n,m,d,s,N,expected,computed,defect,s1,s2,inTheoremRange,status,seed,trials,modulus";

std::string format_records(std::span<const SecantRecord> records, ReportFormat format,
                           bool with_grassmann = false);
std::string format_record(const SecantRecord& record, ReportFormat format,
                          bool with_grassmann = false);
std::string format_thresholds(const SegreVeroneseParams& params, const Thresholds& th,
                              ReportFormat format);
std::string format_summary(const VerificationSummary& summary, ReportFormat format);

}  // namespace svdim
