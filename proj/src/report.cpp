#include "qcore/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qcore {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified:
      return "verified";
    case VerifyStatus::counterexample:
      return "counterexample";
    case VerifyStatus::skipped:
      return "skipped";
  }
  return "?";
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j{
      {"id", r.id},
      {"kind", r.kind},
      {"status", to_string(r.status)},
      {"checked", r.checked},
      {"source", r.source},
      {"proof_status", r.proof_status},
  };
  if (r.failure) {
    j["failure"] = {{"index", r.failure->index}, {"value", r.failure->value}};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json reports_to_json(const std::string& suite, long order,
                               const std::vector<VerificationReport>& reports) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : reports) results.push_back(report_to_json(r));
  nlohmann::json doc{{"order", order}, {"results", std::move(results)}};
  if (!suite.empty()) doc["suite"] = suite;
  return doc;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  const auto status = j.at("status").get<std::string>();
  if (status == "verified") {
    r.status = VerifyStatus::verified;
  } else if (status == "counterexample") {
    r.status = VerifyStatus::counterexample;
  } else if (status == "skipped") {
    r.status = VerifyStatus::skipped;
  } else {
    throw std::invalid_argument("report_from_json: unknown status " + status);
  }
  r.checked = j.at("checked").get<long>();
  if (j.contains("failure")) {
    r.failure = FailureInfo{j["failure"].at("index").get<long>(),
                            j["failure"].at("value").get<std::string>()};
  }
  r.source = j.at("source").get<std::string>();
  r.proof_status = j.at("proof_status").get<std::string>();
  if (j.contains("note")) r.note = j["note"].get<std::string>();
  return r;
}

std::vector<VerificationReport> reports_from_json(const nlohmann::json& doc) {
  std::vector<VerificationReport> out;
  for (const auto& j : doc.at("results")) out.push_back(report_from_json(j));
  return out;
}

std::string report_text_line(const VerificationReport& r, bool with_elapsed) {
  std::ostringstream os;
  std::string status = "[" + to_string(r.status) + "]";
  status.resize(18, ' ');
  os << status << r.id;
  if (r.status == VerifyStatus::verified) {
    os << "  checked=" << r.checked;
  } else if (r.status == VerifyStatus::counterexample && r.failure) {
    os << "  FAILS at n=" << r.failure->index << " value=" << r.failure->value;
  } else if (r.status == VerifyStatus::skipped && !r.note.empty()) {
    os << "  (" << r.note << ")";
  }
  if (!r.proof_status.empty()) os << "  [" << r.proof_status << "]";
  if (with_elapsed) os << "  " << r.elapsed.count() << "s";
  return os.str();
}

}  // namespace qcore
