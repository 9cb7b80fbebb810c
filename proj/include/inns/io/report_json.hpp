#ifndef INNS_IO_REPORT_JSON_HPP
#define INNS_IO_REPORT_JSON_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "inns/equising/zariski.hpp"
#include "inns/family/family.hpp"

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = q.get_str(); }
  static void from_json(const json& j, mpq_class& q) {
    q = mpq_class(j.get<std::string>());
    q.canonicalize();
  }
};

}  // namespace nlohmann

namespace inns::invariants {
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Check, name, passed, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComponentDelta, name, delta, branch_count, source, multiplicity)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InvariantReport, dimension, epsilon, delta_positive, delta, r, r_prime, mu, mt,
                                   epsilon_embedded_route, epsilon_quotient_route, vdim_embedded,
                                   vdim_reduced_plus_embedded, components, intersection_matrix,
                                   chained_intersections, warnings)
}  // namespace inns::invariants

namespace inns::family {
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PointReport, point, coordinates, report)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FibreInvariants, parameter, points, isolated_points, delta, epsilon, r, r_prime,
                                   mu, mt, chained_intersection_sum, warnings)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ComponentGraph, vertices, edges, connected_components)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyReport, central, generic, samples, r1, isolated_points, active, delta_jump,
                                   epsilon_jump, mu_jump, epsilon_higher_central, epsilon_jump_matches,
                                   delta_constant, equinormalizable, semicontinuity_ok,
                                   mu_semicontinuity_violation, graph, connectivity, b0_milnor_fibre,
                                   expected_intersections, weak_normalization_constant, euler_char_fibre,
                                   b1_milnor_fibre, topologically_trivial, triviality_iv, strong_resolution,
                                   warnings)
}  // namespace inns::family

namespace inns::equising {
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquisingType, branch_types, intersection_matrix)
}  // namespace inns::equising

namespace inns::io {

struct NamedReport {
  std::string name;
  invariants::InvariantReport report;
  friend bool operator==(const NamedReport&, const NamedReport&) = default;
};

struct NamedFamilyReport {
  std::string name;
  family::FamilyReport report;
};

struct PlaneCurveSummary {
  std::string name;
  std::string equation;
  std::optional<std::int64_t> milnor;
  std::optional<std::int64_t> tjurina;
};

struct EquisingSummary {
  bool equivalent = false;
  equising::EquisingType first;
  equising::EquisingType second;
};

/// Result of one kernel operation on a named ideal. `basis` holds standard
/// basis elements (std) or intersection generators; `value` is vdim or dim.
struct KernelEntry {
  std::string name;
  std::string operation;
  std::vector<std::string> basis;
  std::optional<std::int64_t> value;
};

struct ReportDocument {
  std::string command;
  int exit_code = 0;
  std::optional<std::string> error;
  std::vector<invariants::Check> verification;
  std::vector<NamedReport> reports;
  std::vector<NamedFamilyReport> families;
  std::vector<PlaneCurveSummary> plane_curves;
  std::optional<EquisingSummary> equising;
  std::vector<KernelEntry> kernel;
  std::vector<std::string> warnings;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NamedReport, name, report)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NamedFamilyReport, name, report)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PlaneCurveSummary, name, equation, milnor, tjurina)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquisingSummary, equivalent, first, second)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(KernelEntry, name, operation, basis, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReportDocument, command, exit_code, error, verification, reports, families,
                                   plane_curves, equising, kernel, warnings)

/// Keys sorted, two-space indentation, trailing newline.
std::string to_json_text(const ReportDocument& doc);
ReportDocument report_from_json_text(const std::string& text);

}  // namespace inns::io

#endif  // INNS_IO_REPORT_JSON_HPP
