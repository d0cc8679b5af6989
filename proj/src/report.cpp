#include "cubevar/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cubevar {

OutputFormat format_from_name(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + name);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_json(const VarianceReport& rep) {
  std::ostringstream os;
  os << "{\"x\":" << rep.x << ",\"Q\":" << rep.Q
     << ",\"v_empirical\":" << fmt_double(rep.v_empirical)
     << ",\"prediction\":{\"formula\":\"" << formula_name(rep.prediction.formula)
     << "\",\"total\":" << fmt_double(rep.prediction.total)
     << ",\"main_terms\":{";
  bool first = true;
  for (const auto& [name, v] : rep.prediction.main_terms) {
    if (!first) os << ",";
    first = false;
    os << "\"" << name << "\":" << fmt_double(v);
  }
  os << "}},\"u0_residual\":" << fmt_double(rep.u0_residual)
     << ",\"normalized\":" << fmt_double(rep.normalized)
     << ",\"normalize_exponent\":" << fmt_double(rep.normalize_exponent)
     << ",\"formula\":\"" << formula_name(rep.prediction.formula) << "\"}";
  return os.str();
}

std::string report_csv_header() {
  return "x,Q,v_empirical,prediction_total,u0_residual,normalized,"
         "normalize_exponent,formula";
}

std::string report_csv_row(const VarianceReport& rep) {
  std::ostringstream os;
  os << rep.x << "," << rep.Q << "," << fmt_double(rep.v_empirical) << ","
     << fmt_double(rep.prediction.total) << "," << fmt_double(rep.u0_residual)
     << "," << fmt_double(rep.normalized) << ","
     << fmt_double(rep.normalize_exponent) << ","
     << formula_name(rep.prediction.formula);
  return os.str();
}

std::string reports_emit(const std::vector<VarianceReport>& reps,
                         OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    os << report_csv_header() << "\n";
    for (const auto& r : reps) os << report_csv_row(r) << "\n";
  } else {
    os << "[";
    for (size_t i = 0; i < reps.size(); ++i) {
      if (i) os << ",";
      os << "\n" << report_json(reps[i]);
    }
    os << (reps.empty() ? "]" : "\n]");
  }
  return os.str();
}

std::string constants_json(const ConstantSet& cs) {
  struct Row {
    const char* name;
    double v, e;
  };
  const Row rows[] = {
      {"C0", cs.C0, cs.err_C0},         {"C1", cs.C1, cs.err_C1},
      {"C2", cs.C2, cs.err_C2},         {"A1", cs.A1, cs.err_A1},
      {"A1_alt", cs.A1_alt, cs.err_A1_alt},
      {"A2", cs.A2, cs.err_A2},         {"D1", cs.D1, cs.err_D1},
      {"D2", cs.D2, cs.err_D2},         {"D3", cs.D3, cs.err_D3},
      {"D4", cs.D4, cs.err_D4},
  };
  std::ostringstream os;
  os << "{\n";
  for (const Row& r : rows)
    os << "  \"" << r.name << "\": {\"value\": " << fmt_double(r.v)
       << ", \"error_estimate\": " << fmt_double(r.e) << "},\n";
  os << "  \"gamma_euler\": " << fmt_double(cs.gamma_euler)
     << ",\n  \"gamma_43\": " << fmt_double(cs.gamma_43)
     << ",\n  \"prime_cutoff\": " << cs.prime_cutoff
     << ",\n  \"series_cutoff\": " << cs.series_cutoff << "\n}";
  return os.str();
}

}  // namespace cubevar
