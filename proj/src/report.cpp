#include "leflab/report.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace leflab {

using nlohmann::json;

json form_to_json(const Form& a) {
  std::vector<MonomialMask> masks;
  for (const auto& [mask, c] : a.terms()) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](MonomialMask x, MonomialMask y) {
    int dx = std::popcount(x), dy = std::popcount(y);
    if (dx != dy) return dx < dy;
    return mask_to_string(x) < mask_to_string(y);
  });
  json terms = json::array();
  for (MonomialMask mask : masks) {
    terms.push_back({mask_to_string(mask), to_string(a.coefficient(mask))});
  }
  return json{{"n", a.n()}, {"terms", terms}};
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json verdicts_to_json(const VerdictTable& t) {
  json out = json::array();
  for (const VerdictRow& row : t.rows) {
    json entry{{"name", row.name}, {"pass", row.pass}};
    if (!row.pass) entry["witness"] = row.detail;
    out.push_back(entry);
  }
  return out;
}

json pairing_to_json(const PairingReport& p) {
  return json{{"left", p.left_desc},
              {"right", p.right_desc},
              {"left_dim", p.left_dim},
              {"right_dim", p.right_dim},
              {"matrix", matrix_to_json(p.matrix)},
              {"rank", p.rank},
              {"nondegenerate", p.nondegenerate}};
}

json canonical_model_json(const SymplecticModel& m) {
  auto form_pairs = [](const Form& f) {
    json arr = json::array();
    for (const auto& [mask, c] : f.terms()) {
      int i = std::countr_zero(mask) + 1;
      int j = std::countr_zero(mask & (mask - 1)) + 1;
      arr.push_back({i, j, to_string(c)});
    }
    return arr;
  };
  json diff = json::object();
  for (const auto& [gen, dgen] : m.structure) {
    diff[std::to_string(gen)] = form_pairs(dgen);
  }
  return json{{"differential", diff},
              {"n", m.n},
              {"name", m.name},
              {"omega", form_pairs(m.omega)}};
}

std::string model_fingerprint(const SymplecticModel& m) {
  const std::string bytes = canonical_model_json(m).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

ReportBuilder::ReportBuilder(const SymplecticModel& model, std::string command) {
  doc_["schema"] = kReportSchema;
  doc_["tool_version"] = kToolVersion;
  doc_["command"] = std::move(command);
  doc_["model"] =
      json{{"name", model.name}, {"n", model.n}, {"fingerprint", model_fingerprint(model)}};
  doc_["params"] = json::object();
  doc_["tables"] = json::object();
  doc_["verdicts"] = json::array();
}

void ReportBuilder::add_params(const json& params) { doc_["params"] = params; }

void ReportBuilder::add_table(const std::string& name, const json& value) {
  doc_["tables"][name] = value;
}

void ReportBuilder::add_verdicts(const VerdictTable& t) {
  for (const json& v : verdicts_to_json(t)) doc_["verdicts"].push_back(v);
  all_pass_ = all_pass_ && t.all_pass();
}

json ReportBuilder::as_json() const {
  json out = doc_;
  out["all_pass"] = all_pass_;
  return out;
}

std::string ReportBuilder::text() const {
  std::ostringstream os;
  os << "leflab " << kToolVersion << " — " << doc_["command"].get<std::string>() << " on "
     << doc_["model"]["name"].get<std::string>() << " (fingerprint "
     << doc_["model"]["fingerprint"].get<std::string>() << ")\n";
  if (!doc_["params"].empty()) os << "params: " << doc_["params"].dump() << "\n";
  for (const auto& [name, value] : doc_["tables"].items()) {
    os << "  " << name << ": " << value.dump() << "\n";
  }
  for (const auto& v : doc_["verdicts"]) {
    os << "  [" << (v["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
       << v["name"].get<std::string>();
    if (v.contains("witness")) os << "  <- " << v["witness"].get<std::string>();
    os << "\n";
  }
  os << (all_pass_ ? "all verdicts pass" : "SOME VERDICTS FAILED") << "\n";
  return os.str();
}

}  // namespace leflab
