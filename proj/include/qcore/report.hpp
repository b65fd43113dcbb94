#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcore {

enum class VerifyStatus { verified, counterexample, skipped };

std::string to_string(VerifyStatus s);

struct FailureInfo {
  // For claims: the progression index n of the first failing coefficient.
  // For identities: the first power of q where the two sides differ.
  long index = 0;
  std::string value;  // offending value (claims) or lhs-rhs difference (identities)

  friend bool operator==(const FailureInfo&, const FailureInfo&) = default;
};

struct VerificationReport {
  std::string id;      // identity id or canonical claim text
  std::string kind;    // "identity" | "claim"
  VerifyStatus status = VerifyStatus::skipped;
  long checked = 0;
  std::optional<FailureInfo> failure;
  std::string source;
  std::string proof_status;  // proved | conjecture | classical | mined
  std::string note;          // skip reason, empty otherwise
  std::chrono::duration<double> elapsed{0};

  // elapsed is excluded: reports compare and serialize deterministically
  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.id == b.id && a.kind == b.kind && a.status == b.status && a.checked == b.checked &&
           a.failure == b.failure && a.source == b.source && a.proof_status == b.proof_status &&
           a.note == b.note;
  }
};

nlohmann::json report_to_json(const VerificationReport& r);

/// Top-level document: { "suite": ..., "order": ..., "results": [...] }.
/// suite may be empty (omitted for single-target verification).
nlohmann::json reports_to_json(const std::string& suite, long order,
                               const std::vector<VerificationReport>& reports);

VerificationReport report_from_json(const nlohmann::json& j);
std::vector<VerificationReport> reports_from_json(const nlohmann::json& doc);

/// One fixed-width human-readable line per report.
std::string report_text_line(const VerificationReport& r, bool with_elapsed = false);

}  // namespace qcore
