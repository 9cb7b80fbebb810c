#include "inns/io/report_json.hpp"

namespace inns::io {

std::string to_json_text(const ReportDocument& doc) {
  nlohmann::json j = doc;
  return j.dump(2) + "\n";
}

ReportDocument report_from_json_text(const std::string& text) {
  return nlohmann::json::parse(text).get<ReportDocument>();
}

}  // namespace inns::io
