#pragma once

#include "gkit/duality.hpp"
#include "gkit/remarks.hpp"

#include <filesystem>
#include <string>

// JSON file formats:
//   groupoid  {"arrows": [...], "compose": [[g,h,gh],...], "inv": {g: g^{-1}}}
//             d/r are derived from the inverses; the loader validates and
//             rejects invalid groupoids with the witness list.
//   action    {"groupoid": <object or path>, "components": {e: {"basis": [...],
//             "structconst": [[x,y,{z: coeff}],...]}}, "beta": {g: [[row]...]}}
//   graded    {"groupoid": <object or path>, "algebra": {"basis": [...],
//             "structconst": ..., "unit": {label: coeff}}, "grade": {label: g}}
// Coefficients are JSON integers or "n/d" strings; exact rationals throughout.

namespace gkit {
namespace io {

std::string groupoid_to_json(const Groupoid& g);
GroupoidPtr load_groupoid_file(const std::filesystem::path& path);
GroupoidPtr parse_groupoid_json(const std::string& text);

std::string algebra_to_json(const FiniteDimAlgebra& a,
                            const std::map<Label, Label>* grade = nullptr);
AlgebraPtr parse_algebra_json(const std::string& text);

GroupoidAction load_action_file(const std::filesystem::path& path);
GroupoidAction parse_action_json(const std::string& text,
                                 const std::filesystem::path& base_dir = ".");
std::string action_to_json(const GroupoidAction& a);

GradedAlgebra load_graded_file(const std::filesystem::path& path);
GradedAlgebra parse_graded_json(const std::string& text,
                                const std::filesystem::path& base_dir = ".");
std::string graded_to_json(const GradedAlgebra& a);

// Reports.
std::string groupoid_report_to_json(const GroupoidReport& rep);
std::string duality_report_to_json(const DualityReport& rep, bool emit_iso_matrices);
std::string exactness_report_to_json(const Theorem52Result& result);

}  // namespace io
}  // namespace gkit
