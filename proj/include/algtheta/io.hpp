#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "algtheta/curve.hpp"
#include "algtheta/kp.hpp"
#include "algtheta/sato.hpp"
#include "algtheta/theta.hpp"

namespace algtheta {

/// Curve spec files (JSON):
///   {"kind": "monomial", "generators": [4, 5, 6]}
///   {"kind": "explicit", "differentials": [[num, den], ...], "singular_points": ["inf", "1"],
///    "base_point": "0", "parametrization": {"components": [coeffs, ...], "degree": 6}}
///   {"kind": "parametrized", "parametrization": {...}}
/// Coefficient lists are ascending in u; every rational is a string "p/q" (integers may
/// also be JSON numbers); a constant numerator or denominator may be given as a single
/// string. "name" is optional everywhere. Throws InputError on schema violations.
CurveSpec parse_curve_spec(const std::string& text);
CurveSpec load_curve_spec(const std::filesystem::path& path);
std::string serialize_curve_spec(const CurveSpec& c);

/// Fills in singular points and the canonical basis of a parametrized spec without
/// differentials; other specs are returned unchanged.
CurveSpec complete_curve(const CurveSpec& c);

/// Indented "key: value" text with sections, in insertion order.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void begin(const std::string& section);
  void end();
  std::string str() const { return text_; }

 private:
  std::string text_;
  int depth_ = 0;
};

void report_classification(Report& r, const Classification& c);
void report_singularities(Report& r, const std::vector<SingularityData>& sing);
void report_tau(Report& r, const TauPolynomial& t);
void report_theta(Report& r, const ThetaPolynomial& th);
void report_degree(Report& r, const DegreeReport& d);
void report_relation(Report& r, const RelationReport& rel);
void report_kp(Report& r, const std::string& section, const std::vector<KPResidualReport>& reps);

}  // namespace algtheta
