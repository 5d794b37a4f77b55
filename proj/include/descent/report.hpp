#ifndef DESCENT_REPORT_HPP
#define DESCENT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "descent/engine.hpp"

namespace descent {

enum class ReportFormat { text, json, csv };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

/// "certified complete", "complete up to height H", or "not certified".
std::string completeness_label(const DescentReport& report);

std::string curve_equation(const CurveProblem& problem);

/// Text summary, full JSON document (integers as decimal strings), or one CSV
/// row per point. Output is a pure function of the report.
std::string emit_report(const DescentReport& report, ReportFormat format);

}  // namespace descent

#endif  // DESCENT_REPORT_HPP
