#pragma once

#include <string>

#include <json.hpp>

#include "leflab/duality.hpp"

namespace leflab {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "leflab-report/1";
inline constexpr const char* kTablesSchema = "leflab-tables/1";

nlohmann::json form_to_json(const Form& a);
nlohmann::json matrix_to_json(const RationalMatrix& m);
nlohmann::json verdicts_to_json(const VerdictTable& t);
nlohmann::json pairing_to_json(const PairingReport& p);

/// Canonical JSON of a model: stable key order, string rationals. The
/// fingerprint is an FNV-1a 64 hash of its compact dump.
nlohmann::json canonical_model_json(const SymplecticModel& m);
std::string model_fingerprint(const SymplecticModel& m);

/// Assembles one deterministic report object.
class ReportBuilder {
 public:
  ReportBuilder(const SymplecticModel& model, std::string command);

  void add_params(const nlohmann::json& params);
  void add_table(const std::string& name, const nlohmann::json& value);
  void add_verdicts(const VerdictTable& t);

  bool all_pass() const { return all_pass_; }
  nlohmann::json as_json() const;
  /// Human-readable rendering of the same content.
  std::string text() const;

 private:
  nlohmann::json doc_;
  bool all_pass_ = true;
};

}  // namespace leflab
