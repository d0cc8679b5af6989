#pragma once

#include <string>
#include <vector>

#include "cubevar/dirichlet.hpp"
#include "cubevar/variance_lab.hpp"

namespace cubevar {

enum class OutputFormat { json, csv };

OutputFormat format_from_name(const std::string& name);

// Decimal serialization with 17 significant digits; the same helper feeds both
// JSON and CSV so the two formats carry identical numeric strings.
std::string fmt_double(double v);

std::string report_json(const VarianceReport& rep);
std::string report_csv_header();
std::string report_csv_row(const VarianceReport& rep);

std::string reports_emit(const std::vector<VarianceReport>& reps,
                         OutputFormat format);

std::string constants_json(const ConstantSet& cs);

}  // namespace cubevar
